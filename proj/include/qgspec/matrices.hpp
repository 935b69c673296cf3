#ifndef QGSPEC_MATRICES_HPP
#define QGSPEC_MATRICES_HPP

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qgspec/graph.hpp"

namespace qg {

enum class MatrixKind {
    adjacency,
    degree,
    signed_incidence,     // n x N, +1 at the head, -1 at the tail
    unsigned_incidence,   // n x N, 1 at both endpoints
    combinatorial_laplacian, // D - A
    normalized_laplacian,    // I - D^{-1/2} A D^{-1/2}
    signless_laplacian,      // D + A
};

MatrixKind matrix_kind_from_string(const std::string& name);
std::string to_string(MatrixKind kind);

Eigen::MatrixXd matrix(const Graph& g, MatrixKind kind);

// Row-stochastic D^{-1} A. Every vertex needs degree >= 1.
Eigen::MatrixXd transition_matrix(const Graph& g);

// Eigenvalues clustered into multiplicity groups.
struct RealSpectrum {
    std::vector<std::pair<double, int>> values; // sorted ascending (value, multiplicity)
    double tol_cluster = 0.0;

    int dimension() const; // sum of multiplicities
    // Multiplicity of v, matching within tol_cluster; 0 if absent.
    int multiplicity_of(double v) const;
};

// Default clustering tolerance 1e-9 * max(1, n).
double default_cluster_tol(int n);

// Spectrum of the transition matrix, computed through the symmetric
// conjugate D^{-1/2} A D^{-1/2}; values clamped to [-1, 1] and snapped to the
// endpoints when within tol.
RealSpectrum spectrum_of_transition(const Graph& g, double tol = -1.0);

// Sorts and merges raw eigenvalues whose consecutive gaps are below tol.
RealSpectrum cluster_eigenvalues(std::vector<double> raw, double tol);

// dim ker = cols - rank, with rank decided by singular values >= tol * sigma_max.
int nullity(const Eigen::MatrixXd& m, double tol);

} // namespace qg

#endif
