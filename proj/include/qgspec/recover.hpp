#ifndef QGSPEC_RECOVER_HPP
#define QGSPEC_RECOVER_HPP

#include <cstdint>
#include <vector>

#include "qgspec/spectrum.hpp"

namespace qg {

struct RecoveredInvariants {
    int n = 0;
    int N = 0;
    int c = 0;
    int c_plus = 0;
    int c_minus = 0;
    Condition source_condition = Condition::CK;
};

// Reads (n, N, c, c+, c-) off the multiplicities at 0, pi^2, 4*pi^2 and the
// count below pi^2. Needs the window to reach past 4*pi^2.
RecoveredInvariants recover(const SpectrumWindow& spec);

// True iff the windows match entry by entry, within tol in lambda and exactly
// in multiplicity. Windows must share condition and lambda_max.
bool isospectral(const SpectrumWindow& a, const SpectrumWindow& b, double tol = 1e-9);

// Rebuilds a window from a multiplicity-free sorted eigenvalue list by
// clustering values within tol. Classes are assigned from the sqrt(lambda)
// lattice positions; clustered values are not tied to a graph, so no
// source_mu is filled in.
SpectrumWindow collate(Condition condition, double lambda_max, std::vector<double> eigenvalues,
                       double tol = 1e-9);

struct NonRecoverabilityReport {
    bool ck_isospectral = false;
    bool kc_isospectral = false;
    std::int64_t spanning_trees_1 = 0;
    std::int64_t spanning_trees_2 = 0;
    std::vector<int> degree_sequence_1;
    std::vector<int> degree_sequence_2;
    RecoveredInvariants recovered_1;
    RecoveredInvariants recovered_2;
    bool degree_sequences_differ = false;
    // Side note on the transition-matrix pair C4 / K_{1,3}: equal Z spectra
    // but different edge counts, hence never CK/KC isospectral.
    bool c4_claw_z_isospectral = false;
    bool c4_claw_ck_isospectral = false;
};

// Demonstrates on the Butler-Grout pair that CK/KC isospectrality does not
// determine spanning-tree counts or degrees.
NonRecoverabilityReport non_recoverability_report();

} // namespace qg

#endif
