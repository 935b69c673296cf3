#include "qgspec/matrices.hpp"

#include <algorithm>
#include <cmath>

namespace qg {

namespace {

Eigen::VectorXd degree_vector(const Graph& g) {
    Eigen::VectorXd deg = Eigen::VectorXd::Zero(g.vertex_count());
    for (const Edge& e : g.edges()) {
        deg[e.tail] += 1.0;
        deg[e.head] += 1.0;
    }
    return deg;
}

void require_no_isolated_vertex(const Eigen::VectorXd& deg) {
    for (Eigen::Index i = 0; i < deg.size(); ++i)
        if (deg[i] == 0.0)
            throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(i) + " has degree 0");
}

Eigen::MatrixXd adjacency(const Graph& g) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
    for (const Edge& e : g.edges()) {
        a(e.tail, e.head) = 1.0;
        a(e.head, e.tail) = 1.0;
    }
    return a;
}

} // namespace

MatrixKind matrix_kind_from_string(const std::string& name) {
    if (name == "adjacency") return MatrixKind::adjacency;
    if (name == "degree") return MatrixKind::degree;
    if (name == "signed_incidence") return MatrixKind::signed_incidence;
    if (name == "unsigned_incidence") return MatrixKind::unsigned_incidence;
    if (name == "combinatorial_laplacian") return MatrixKind::combinatorial_laplacian;
    if (name == "normalized_laplacian") return MatrixKind::normalized_laplacian;
    if (name == "signless_laplacian") return MatrixKind::signless_laplacian;
    throw Error(ErrorCode::InvalidArgument, "unknown matrix kind '" + name + "'");
}

std::string to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return "adjacency";
        case MatrixKind::degree: return "degree";
        case MatrixKind::signed_incidence: return "signed_incidence";
        case MatrixKind::unsigned_incidence: return "unsigned_incidence";
        case MatrixKind::combinatorial_laplacian: return "combinatorial_laplacian";
        case MatrixKind::normalized_laplacian: return "normalized_laplacian";
        case MatrixKind::signless_laplacian: return "signless_laplacian";
    }
    return "unknown";
}

Eigen::MatrixXd matrix(const Graph& g, MatrixKind kind) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    switch (kind) {
        case MatrixKind::adjacency:
            return adjacency(g);
        case MatrixKind::degree:
            return degree_vector(g).asDiagonal();
        case MatrixKind::signed_incidence: {
            Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, m);
            for (int j = 0; j < m; ++j) {
                d(g.edges()[j].head, j) = 1.0;
                d(g.edges()[j].tail, j) = -1.0;
            }
            return d;
        }
        case MatrixKind::unsigned_incidence: {
            Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, m);
            for (int j = 0; j < m; ++j) {
                d(g.edges()[j].head, j) = 1.0;
                d(g.edges()[j].tail, j) = 1.0;
            }
            return d;
        }
        case MatrixKind::combinatorial_laplacian:
            return Eigen::MatrixXd(degree_vector(g).asDiagonal()) - adjacency(g);
        case MatrixKind::normalized_laplacian: {
            Eigen::VectorXd deg = degree_vector(g);
            require_no_isolated_vertex(deg);
            Eigen::VectorXd dinv = deg.array().rsqrt();
            return Eigen::MatrixXd::Identity(n, n) -
                   dinv.asDiagonal() * adjacency(g) * dinv.asDiagonal();
        }
        case MatrixKind::signless_laplacian:
            return
                Eigen::MatrixXd(degree_vector(g).asDiagonal()) + adjacency(g);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown matrix kind");
}

Eigen::MatrixXd transition_matrix(const Graph& g) {
    Eigen::VectorXd deg = degree_vector(g);
    require_no_isolated_vertex(deg);
    return deg.cwiseInverse().asDiagonal() * adjacency(g);
}

int RealSpectrum::dimension() const {
    int total = 0;
    for (const auto& [v, m] : values) total += m;
    return total;
}

int RealSpectrum::multiplicity_of(double v) const {
    for (const auto& [value, mult] : values)
        if (std::abs(value - v) <= tol_cluster) return mult;
    return 0;
}

double default_cluster_tol(int n) { return 1e-9 * std::max(1, n); }

RealSpectrum cluster_eigenvalues(std::vector<double> raw, double tol) {
    std::sort(raw.begin(), raw.end());
    RealSpectrum spec;
    spec.tol_cluster = tol;
    size_t i = 0;
    while (i < raw.size()) {
        size_t j = i + 1;
        double sum = raw[i];
        while (j < raw.size() && raw[j] - raw[j - 1] < tol) {
            sum += raw[j];
            ++j;
        }
        spec.values.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
        i = j;
    }
    return spec;
}

RealSpectrum spectrum_of_transition(const Graph& g, double tol) {
    const int n = g.vertex_count();
    if (tol <= 0.0) tol = default_cluster_tol(n);

    Eigen::VectorXd deg = degree_vector(g);
    require_no_isolated_vertex(deg);
    Eigen::VectorXd dinv = deg.array().rsqrt();
    // Similar to D^{-1} A, so same spectrum, but Hermitian.
    Eigen::MatrixXd sym = dinv.asDiagonal() * adjacency(g) * dinv.asDiagonal();
    sym = 0.5 * (sym + sym.transpose().eval());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    std::vector<double> raw(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    RealSpectrum spec = cluster_eigenvalues(std::move(raw), tol);
    for (auto& [value, mult] : spec.values) {
        if (std::abs(value - 1.0) < tol) value = 1.0;
        if (std::abs(value + 1.0) < tol) value = -1.0;
        value = std::clamp(value, -1.0, 1.0);
    }
    return spec;
}

int nullity(const Eigen::MatrixXd& m, double tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sigma = svd.singularValues();
    double smax = sigma.size() > 0 ? sigma[0] : 0.0;
    if (smax == 0.0) return static_cast<int>(m.cols());
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma[i] >= tol * smax) ++rank;
    return static_cast<int>(m.cols()) - rank;
}

} // namespace qg
