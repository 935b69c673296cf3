#ifndef QGSPEC_BOUNDARY_HPP
#define QGSPEC_BOUNDARY_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qgspec/graph.hpp"

namespace qg {

// Closed subspace of C^{2m}, stored as an orthonormal column frame.
class Subspace {
public:
    // Rank-revealing orthonormalization of the given spanning columns;
    // rank decided at 1e-10 relative tolerance.
    static Subspace from_spanning(const Eigen::MatrixXcd& spanning);
    static Subspace full(int ambient_dim);
    static Subspace zero(int ambient_dim);

    int ambient_dim() const noexcept { return static_cast<int>(basis_.rows()); }
    int dim() const noexcept { return static_cast<int>(basis_.cols()); }
    const Eigen::MatrixXcd& basis() const noexcept { return basis_; }

    Eigen::MatrixXcd projector() const;        // B B^H
    Subspace orthogonal_complement() const;

private:
    Subspace(Eigen::MatrixXcd basis, int ambient);

    Eigen::MatrixXcd basis_; // 2m x d, orthonormal columns
};

// (Y, R) with R a Hermitian coupling matrix on the ambient space; only the
// compression P_Y R P_Y acts on the problem.
struct BoundaryCondition {
    Subspace Y;
    Eigen::MatrixXcd R;

    static BoundaryCondition free_of_coupling(Subspace y); // R = 0

    // P_Y R P_Y. Throws NonHermitianR when R is not Hermitian or has the
    // wrong shape.
    Eigen::MatrixXcd effective_coupling() const;
};

// Stacked 4m x 2m system acting on (A, B); lambda > 0 is an eigenvalue of
// (EP_{Y,R}) iff this matrix is rank-deficient, with multiplicity equal to
// the nullity.
Eigen::MatrixXcd secular_matrix(const BoundaryCondition& bc, double lambda);

// Multiplicity of 0 as an eigenvalue: the dimension of the intersection of
// the diagonal {(A,A)} with Y when the effective coupling vanishes, else 0.
int zero_multiplicity(const BoundaryCondition& bc);

struct ScanRoot {
    double lambda = 0.0;
    int multiplicity = 0;
};

struct SecularScan {
    std::vector<double> s_grid;                    // sampled s = sqrt(lambda)
    std::vector<std::vector<double>> sigma_curves; // per-sample sorted singular values
    std::vector<ScanRoot> roots;                   // sorted by lambda, zero prepended
    double tol_root = 0.0;
    double tol_mult = 0.0;
    bool regime_guaranteed = true; // effective coupling positive semidefinite
};

// Samples sigma_min of the secular matrix on s in [grid_step, sqrt(lambda_max)],
// refines each dip by golden-section minimization, and reads multiplicities
// off the near-zero singular values at the refined root.
SecularScan scan_eigenvalues(const BoundaryCondition& bc, double lambda_max,
                             double grid_step = 0.01, double tol_root = 1e-10,
                             double tol_mult = 1e-8);

// Continuity-Kirchhoff subspace of C^{2N}: the range of the stacked
// positive/negative incidence parts. Coordinate j is endpoint 0 of edge j,
// coordinate N+j endpoint 1.
Subspace ck_subspace(const Graph& g);
// Anti-Kirchhoff subspace: the orthogonal complement of the CK subspace.
Subspace kc_subspace(const Graph& g);

// Y_alpha = span{(alpha, 1)} in C^2.
Subspace loop_subspace(std::complex<double> alpha);

// Closed-form spectrum of the loop problem (EP_{Y_alpha}):
// cos(sqrt(lambda)) = 2 Re(alpha) / (1 + |alpha|^2).
std::vector<ScanRoot> loop_spectrum(std::complex<double> alpha, double lambda_max);

struct DualityPair {
    double lambda = 0.0;
    double partner = 0.0; // (pi - sqrt(lambda))^2
    int multiplicity = 0;
    int partner_multiplicity = 0; // 0 when missing
};

struct DualityReport {
    std::vector<DualityPair> checked;
    std::vector<DualityPair> violations;
    bool holds() const { return violations.empty(); }
};

// Checks the reflection sqrt(lambda) -> pi - sqrt(lambda) between the spectra
// of (EP_Y) and (EP_{Y perp}) with R = 0, in both directions.
DualityReport duality_check(const Subspace& y, double lambda_max, double match_tol = 1e-7);

} // namespace qg

#endif
