#ifndef QGSPEC_SPECTRUM_HPP
#define QGSPEC_SPECTRUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "qgspec/graph.hpp"
#include "qgspec/matrices.hpp"

namespace qg {

enum class Condition { CK, KC };

Condition condition_from_string(const std::string& name);
std::string to_string(Condition c);

enum class EigClass {
    zero,
    immanent,               // sin(sqrt(lambda)) != 0, generated by an interior Z-eigenvalue
    singular_cos_plus_one,  // sqrt(lambda) = 2k*pi, k >= 1
    singular_cos_minus_one, // sqrt(lambda) = (2k+1)*pi
};

std::string to_string(EigClass k);

struct EigenvalueEntry {
    double lambda = 0.0;
    double sqrt_lambda = 0.0;
    int multiplicity = 1;
    EigClass klass = EigClass::zero;
    std::optional<double> source_mu; // Z-eigenvalue behind an immanent entry
};

struct SpectrumWindow {
    Condition condition = Condition::CK;
    double lambda_max = 0.0;
    std::vector<EigenvalueEntry> entries; // sorted by lambda, strictly increasing
    ComponentInfo graph_info;

    // Entries with lambda <= lambda_max + window_slack are in the window.
    static constexpr double window_slack = 1e-12;

    // k-th eigenvalue, 1-based, repeated by multiplicity. WindowTooSmall when
    // the window holds fewer than k.
    double kth_eigenvalue(int k) const;
    // Multiplicity of the entry matching lambda within tol; 0 when absent.
    int multiplicity_at(double lambda, double tol = 1e-9) const;
    int total_multiplicity() const;
};

// Exact spectrum of -Delta under the CK condition on [0, lambda_max],
// generated analytically from the transition-matrix spectrum.
SpectrumWindow ck_spectrum(const Graph& g, double lambda_max, double tol = -1.0);

// Same under the KC (anti-Kirchhoff) condition.
SpectrumWindow kc_spectrum(const Graph& g, double lambda_max, double tol = -1.0);

struct CkKcComparison {
    bool full_coincidence = false;     // spectra equal with multiplicities on the window
    bool immanent_coincidence = false; // immanent parts equal with multiplicities
    bool unicyclic_and_bipartite = false;
    bool bipartite = false;
    // The structural predicates predict the coincidences exactly.
    bool equivalences_hold = false;
};

CkKcComparison compare_ck_kc(const Graph& g, double lambda_max);

// dim Ker under KC minus dim Ker under CK; equals N - n - c_minus.
int kernel_index(const Graph& g);

// lambda_k / k^2 with eigenvalues repeated by multiplicity, 1-based.
double weyl_ratio(const SpectrumWindow& spec, int k);

struct ContractionReport {
    double lambda1_original = 0.0;
    double lambda1_contracted = 0.0;
    bool holds = false; // lambda1_original <= lambda1_contracted + tol
};

// Lowest nontrivial CK eigenvalue before and after identifying v and w.
ContractionReport contraction_monotonicity(const Graph& g, int v, int w, double tol = 1e-9);

// Number of distinct eigenvalues in ((2k*pi)^2, (2(k+1)*pi)^2].
int distinct_count_per_period(const SpectrumWindow& spec, int k);

} // namespace qg

#endif
