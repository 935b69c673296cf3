#include "qgspec/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qgspec/matrices.hpp"

namespace qg {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double rank_tol = 1e-10;

// Orthonormal columns spanning the column space of m, rank at tol relative.
Eigen::MatrixXcd orthonormal_range(const Eigen::MatrixXcd& m, double tol) {
    if (m.cols() == 0) return Eigen::MatrixXcd(m.rows(), 0);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
    const auto& sigma = svd.singularValues();
    const double smax = sigma.size() > 0 ? sigma[0] : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma[i] > tol * smax && sigma[i] > 0.0) ++rank;
    return svd.matrixU().leftCols(rank);
}

int rank_of(const Eigen::MatrixXcd& m, double tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sigma = svd.singularValues();
    const double smax = sigma[0];
    if (smax == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma[i] > tol * smax) ++rank;
    return rank;
}

std::vector<double> singular_values_sorted(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::vector<double> sigma(svd.singularValues().data(),
                              svd.singularValues().data() + svd.singularValues().size());
    std::sort(sigma.begin(), sigma.end());
    return sigma;
}

// Golden-section minimization of f on [a, b] down to interval width tol.
std::pair<double, double> golden_minimize(const std::function<double(double)>& f, double a,
                                          double b, double tol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

} // namespace

Subspace::Subspace(Eigen::MatrixXcd basis, int ambient) : basis_(std::move(basis)) {
    if (basis_.rows() != ambient)
        throw Error(ErrorCode::InvalidArgument, "subspace basis has wrong ambient dimension");
    const Eigen::MatrixXcd gram = basis_.adjoint() * basis_;
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(basis_.cols(), basis_.cols());
    if (basis_.cols() > 0 && (gram - eye).norm() > 1e-12 * std::max(1.0, gram.norm()))
        throw Error(ErrorCode::InvalidArgument, "subspace frame is not orthonormal");
}

Subspace Subspace::from_spanning(const Eigen::MatrixXcd& spanning) {
    return Subspace(orthonormal_range(spanning, rank_tol), static_cast<int>(spanning.rows()));
}

Subspace Subspace::full(int ambient_dim) {
    return Subspace(Eigen::MatrixXcd::Identity(ambient_dim, ambient_dim), ambient_dim);
}

Subspace Subspace::zero(int ambient_dim) {
    return Subspace(Eigen::MatrixXcd(ambient_dim, 0), ambient_dim);
}

Eigen::MatrixXcd Subspace::projector() const { return basis_ * basis_.adjoint(); }

Subspace Subspace::orthogonal_complement() const {
    const int ambient = ambient_dim();
    if (dim() == 0) return full(ambient);
    if (dim() == ambient) return zero(ambient);
    // Kernel of B^H: trailing right singular vectors of the full SVD.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(basis_.adjoint(), Eigen::ComputeFullV);
    return Subspace(svd.matrixV().rightCols(ambient - dim()), ambient);
}

BoundaryCondition BoundaryCondition::free_of_coupling(Subspace y) {
    const int ambient = y.ambient_dim();
    return {std::move(y), Eigen::MatrixXcd::Zero(ambient, ambient)};
}

Eigen::MatrixXcd BoundaryCondition::effective_coupling() const {
    const int ambient = Y.ambient_dim();
    if (R.rows() != ambient || R.cols() != ambient)
        throw Error(ErrorCode::NonHermitianR, "coupling matrix has wrong shape");
    if ((R - R.adjoint()).norm() > 1e-12 * std::max(1.0, R.norm()))
        throw Error(ErrorCode::NonHermitianR, "coupling matrix is not Hermitian");
    const Eigen::MatrixXcd p = Y.projector();
    return p * R * p;
}

Eigen::MatrixXcd secular_matrix(const BoundaryCondition& bc, double lambda) {
    if (lambda <= 0.0)
        throw Error(ErrorCode::NonPositiveLambda, "secular matrix needs lambda > 0");
    const int ambient = bc.Y.ambient_dim();
    if (ambient % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "ambient dimension must be even");
    const int m = ambient / 2;

    const double s = std::sqrt(lambda);
    const double c = std::cos(s), sn = std::sin(s);
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(m, m);

    Eigen::MatrixXcd value_map = Eigen::MatrixXcd::Zero(ambient, ambient);   // (A,B) -> (u(0), u(1))
    value_map.topLeftCorner(m, m) = eye;
    value_map.bottomLeftCorner(m, m) = c * eye;
    value_map.bottomRightCorner(m, m) = sn * eye;

    Eigen::MatrixXcd slope_map = Eigen::MatrixXcd::Zero(ambient, ambient);   // (A,B) -> (-u'(0), u'(1)) / sqrt(lambda)
    slope_map.topRightCorner(m, m) = eye;
    slope_map.bottomLeftCorner(m, m) = sn * eye;
    slope_map.bottomRightCorner(m, m) = -c * eye;

    const Eigen::MatrixXcd p_y = bc.Y.projector();
    const Eigen::MatrixXcd p_perp = Eigen::MatrixXcd::Identity(ambient, ambient) - p_y;
    const Eigen::MatrixXcd coupling = bc.effective_coupling();

    Eigen::MatrixXcd stacked(2 * ambient, ambient);
    stacked.topRows(ambient) = p_perp * value_map;
    stacked.bottomRows(ambient) = p_y * (s * slope_map - coupling * value_map);
    return stacked;
}

int zero_multiplicity(const BoundaryCondition& bc) {
    const Eigen::MatrixXcd coupling = bc.effective_coupling();
    if (coupling.norm() > 1e-12 * std::max(1.0, bc.R.norm())) return 0;

    const int ambient = bc.Y.ambient_dim();
    const int m = ambient / 2;
    const int d = bc.Y.dim();
    if (d == 0) return 0;

    // Grassmann: dim(diag cap Y) = m + d - rank([diag | Y]).
    Eigen::MatrixXcd stacked(ambient, m + d);
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(ambient, m);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < m; ++i) {
        diag(i, i) = inv_sqrt2;
        diag(m + i, i) = inv_sqrt2;
    }
    stacked.leftCols(m) = diag;
    stacked.rightCols(d) = bc.Y.basis();
    return m + d - rank_of(stacked, rank_tol);
}

SecularScan scan_eigenvalues(const BoundaryCondition& bc, double lambda_max, double grid_step,
                             double tol_root, double tol_mult) {
    if (lambda_max <= 0.0 || grid_step <= 0.0 || tol_root <= 0.0 || tol_mult <= 0.0)
        throw Error(ErrorCode::InvalidArgument, "scan parameters must be positive");

    const Eigen::MatrixXcd coupling = bc.effective_coupling();

    SecularScan scan;
    scan.tol_root = tol_root;
    scan.tol_mult = tol_mult;

    // Guarantee regime: effective coupling positive semidefinite on Y.
    if (bc.Y.dim() > 0) {
        const Eigen::MatrixXcd compressed = bc.Y.basis().adjoint() * coupling * bc.Y.basis();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(compressed);
        scan.regime_guaranteed = es.eigenvalues().minCoeff() > -1e-10 * std::max(1.0, coupling.norm());
    }

    const double s_max = std::sqrt(lambda_max);
    for (double s = grid_step; s < s_max - 1e-12; s += grid_step) scan.s_grid.push_back(s);
    scan.s_grid.push_back(s_max);

    auto sigma_min_at = [&](double s) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(secular_matrix(bc, s * s));
        return svd.singularValues().minCoeff();
    };

    scan.sigma_curves.reserve(scan.s_grid.size());
    for (double s : scan.s_grid)
        scan.sigma_curves.push_back(singular_values_sorted(secular_matrix(bc, s * s)));

    const size_t count = scan.s_grid.size();
    std::vector<double> dips; // refined root locations in s
    for (size_t i = 0; i < count; ++i) {
        const double here = scan.sigma_curves[i].front();
        const bool left_ok = i == 0 || here <= scan.sigma_curves[i - 1].front();
        const bool right_ok = i + 1 == count || here < scan.sigma_curves[i + 1].front();
        if (!(left_ok && right_ok)) continue;

        const double left = i == 0 ? scan.s_grid.front() : scan.s_grid[i - 1];
        const double right = i + 1 == count ? scan.s_grid.back() + grid_step : scan.s_grid[i + 1];
        dips.push_back(golden_minimize(sigma_min_at, left, right, tol_root).first);
    }

    std::sort(dips.begin(), dips.end());
    for (size_t i = 0; i + 1 < dips.size(); ++i)
        if (dips[i + 1] - dips[i] < 2.0 * tol_root)
            throw Error(ErrorCode::GridTooCoarse,
                        "two dips refined to the same root near s = " + std::to_string(dips[i]));

    const int zm = zero_multiplicity(bc);
    if (zm > 0) scan.roots.push_back({0.0, zm});

    for (double s : dips) {
        if (s < grid_step) continue; // scan domain starts at grid_step
        if (s * s > lambda_max + 1e-12) continue;
        const std::vector<double> sigma = singular_values_sorted(secular_matrix(bc, s * s));
        const double scale = std::max(sigma.back(), 1.0);
        if (sigma.front() >= 100.0 * tol_mult * scale) continue; // dip but not a root
        int mult = 0;
        for (double v : sigma)
            if (v < tol_mult * scale) ++mult;
        scan.roots.push_back({s * s, std::max(mult, 1)});
    }
    return scan;
}

namespace {

// Stacked positive/negative incidence parts: row j carries the head of edge
// j, row N+j its tail. The vertex sitting in row r of this frame.
int slot_vertex(const Graph& g, int slot) {
    const int m = g.edge_count();
    return slot < m ? g.edges()[slot].head : g.edges()[slot - m].tail;
}

Eigen::MatrixXcd vertex_value_frame(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    Eigen::MatrixXcd frame = Eigen::MatrixXcd::Zero(2 * m, n);
    for (int slot = 0; slot < 2 * m; ++slot) frame(slot, slot_vertex(g, slot)) = 1.0;
    return frame;
}

// Endpoint-coupling matrix: 1 where two endpoint slots meet at a vertex.
// Block-diagonal with one all-ones dyad per vertex after permutation.
Eigen::MatrixXcd s2_matrix(const Graph& g) {
    const int m = g.edge_count();
    Eigen::MatrixXcd s2 = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
    for (int p = 0; p < 2 * m; ++p)
        for (int q = 0; q < 2 * m; ++q)
            if (slot_vertex(g, p) == slot_vertex(g, q)) s2(p, q) = 1.0;
    return s2;
}

} // namespace

Subspace ck_subspace(const Graph& g) {
    std::vector<int> deg = g.degrees();
    for (size_t i = 0; i < deg.size(); ++i)
        if (deg[i] == 0)
            throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(i) + " has degree 0");

    const Subspace y = Subspace::from_spanning(vertex_value_frame(g));
    if (y.dim() != g.vertex_count())
        throw Error(ErrorCode::InconsistentSpectrum, "CK subspace dimension differs from n");

    // Cross-check against the endpoint-coupling matrix: the CK space is the
    // range of S2 (equivalently the kernel of its complementary projection).
    const Eigen::MatrixXcd range_s2 = Subspace::from_spanning(s2_matrix(g)).projector();
    if ((y.projector() - range_s2).norm() > 1e-10 * g.vertex_count())
        throw Error(ErrorCode::InconsistentSpectrum, "CK subspace disagrees with range of S2");
    return y;
}

Subspace kc_subspace(const Graph& g) { return ck_subspace(g).orthogonal_complement(); }

Subspace loop_subspace(std::complex<double> alpha) {
    Eigen::MatrixXcd span(2, 1);
    span(0, 0) = alpha;
    span(1, 0) = 1.0;
    return Subspace::from_spanning(span);
}

std::vector<ScanRoot> loop_spectrum(std::complex<double> alpha, double lambda_max) {
    const double limit = lambda_max + 1e-12;
    const double target = 2.0 * alpha.real() / (1.0 + std::norm(alpha));
    const bool doubled = alpha == std::complex<double>(1.0, 0.0) ||
                         alpha == std::complex<double>(-1.0, 0.0);
    const int mult = doubled ? 2 : 1;

    std::vector<ScanRoot> roots;
    const double a = std::acos(std::clamp(target, -1.0, 1.0));
    for (int l = 0;; ++l) {
        const double s = 2.0 * l * pi + a;
        if (s * s > limit) break;
        if (s == 0.0)
            roots.push_back({0.0, 1});  // alpha = 1 only; multiplicity from the diagonal
        else
            roots.push_back({s * s, mult});
    }
    // The two arccos branches coincide when a is 0 or pi.
    if (a > 0.0 && a < pi) {
        for (int l = 1;; ++l) {
            const double s = 2.0 * l * pi - a;
            if (s * s > limit) break;
            roots.push_back({s * s, mult});
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const ScanRoot& x, const ScanRoot& y) { return x.lambda < y.lambda; });
    return roots;
}

DualityReport duality_check(const Subspace& y, double lambda_max, double match_tol) {
    const BoundaryCondition primal = BoundaryCondition::free_of_coupling(y);
    const BoundaryCondition dual = BoundaryCondition::free_of_coupling(y.orthogonal_complement());
    const SecularScan scan_primal = scan_eigenvalues(primal, lambda_max);
    const SecularScan scan_dual = scan_eigenvalues(dual, lambda_max);

    DualityReport report;
    auto check_direction = [&](const SecularScan& from, const SecularScan& to) {
        for (const ScanRoot& root : from.roots) {
            if (root.lambda <= 0.0) continue;
            const double s = std::sqrt(root.lambda);
            if (std::abs(s - pi * std::round(s / pi)) < 1e-9) continue; // reflection fixed points
            const double partner = (pi - s) * (pi - s);
            if (partner <= 0.0 || partner > lambda_max + 1e-12) continue;

            DualityPair pair{root.lambda, partner, root.multiplicity, 0};
            for (const ScanRoot& candidate : to.roots)
                if (std::abs(candidate.lambda - partner) < match_tol)
                    pair.partner_multiplicity = candidate.multiplicity;
            report.checked.push_back(pair);
            if (pair.partner_multiplicity != pair.multiplicity) report.violations.push_back(pair);
        }
    };
    check_direction(scan_primal, scan_dual);
    check_direction(scan_dual, scan_primal);
    return report;
}

} // namespace qg
