#include "qgspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qg {

namespace {

constexpr double pi = std::numbers::pi;

// Consistency of the clustered transition spectrum with the component
// structure: m(1;Z) = c and m(-1;Z) = c_plus.
void check_transition_multiplicities(const RealSpectrum& z, const ComponentInfo& info) {
    if (z.multiplicity_of(1.0) != info.c)
        throw Error(ErrorCode::InconsistentSpectrum,
                    "transition matrix eigenvalue 1 has multiplicity " +
                        std::to_string(z.multiplicity_of(1.0)) + ", expected c = " +
                        std::to_string(info.c));
    if (z.multiplicity_of(-1.0) != info.c_plus)
        throw Error(ErrorCode::InconsistentSpectrum,
                    "transition matrix eigenvalue -1 has multiplicity " +
                        std::to_string(z.multiplicity_of(-1.0)) + ", expected c+ = " +
                        std::to_string(info.c_plus));
}

SpectrumWindow build_window(const Graph& g, Condition cond, double lambda_max, double tol) {
    if (g.edge_count() < 1) throw Error(ErrorCode::EmptyGraph, "graph has no edges");
    if (lambda_max <= 0.0)
        throw Error(ErrorCode::InvalidArgument, "lambda_max must be positive");

    const ComponentInfo info = analyze(g);
    const RealSpectrum z = spectrum_of_transition(g, tol);
    check_transition_multiplicities(z, info);

    const int excess = g.edge_count() - g.vertex_count(); // N - n
    const double limit = lambda_max + SpectrumWindow::window_slack;

    SpectrumWindow window;
    window.condition = cond;
    window.lambda_max = lambda_max;
    window.graph_info = info;

    auto push = [&](double s, int mult, EigClass klass, std::optional<double> mu) {
        if (mult <= 0) return;
        if (s * s > limit) return;
        window.entries.push_back({s * s, s, mult, klass, mu});
    };

    // lambda = 0
    const int zero_mult = cond == Condition::CK ? info.c : excess + info.c_plus;
    push(0.0, zero_mult, EigClass::zero, std::nullopt);

    // Immanent families: one arccos branch pair per interior Z-eigenvalue.
    for (const auto& [mu, mult] : z.values) {
        if (mu <= -1.0 || mu >= 1.0) continue;
        const double target = cond == Condition::CK ? mu : -mu;
        const double a = std::acos(target); // in (0, pi)
        for (int l = 0;; ++l) {
            const double s = 2.0 * l * pi + a;
            if (s * s > limit) break;
            push(s, mult, EigClass::immanent, mu);
        }
        for (int l = 1;; ++l) {
            const double s = 2.0 * l * pi - a;
            if (s * s > limit) break;
            push(s, mult, EigClass::immanent, mu);
        }
    }

    // Singular families at cos(sqrt(lambda)) = +1 / -1.
    const int plus_mult = cond == Condition::CK ? excess + 2 * info.c : excess + 2 * info.c_plus;
    const int minus_mult = cond == Condition::CK ? excess + 2 * info.c_plus : excess + 2 * info.c;
    for (int k = 1;; ++k) {
        const double s = 2.0 * k * pi;
        if (s * s > limit) break;
        push(s, plus_mult, EigClass::singular_cos_plus_one, std::nullopt);
    }
    for (int k = 0;; ++k) {
        const double s = (2 * k + 1) * pi;
        if (s * s > limit) break;
        push(s, minus_mult, EigClass::singular_cos_minus_one, std::nullopt);
    }

    std::sort(window.entries.begin(), window.entries.end(),
              [](const EigenvalueEntry& a, const EigenvalueEntry& b) { return a.lambda < b.lambda; });
    return window;
}

bool entries_match(const std::vector<EigenvalueEntry>& a, const std::vector<EigenvalueEntry>& b,
                   double tol) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i].lambda - b[i].lambda) > tol || a[i].multiplicity != b[i].multiplicity)
            return false;
    return true;
}

std::vector<EigenvalueEntry> immanent_part(const SpectrumWindow& w) {
    std::vector<EigenvalueEntry> out;
    for (const auto& e : w.entries)
        if (e.klass == EigClass::immanent) out.push_back(e);
    return out;
}

} // namespace

Condition condition_from_string(const std::string& name) {
    if (name == "ck" || name == "CK") return Condition::CK;
    if (name == "kc" || name == "KC") return Condition::KC;
    throw Error(ErrorCode::InvalidArgument, "unknown condition '" + name + "'");
}

std::string to_string(Condition c) { return c == Condition::CK ? "ck" : "kc"; }

std::string to_string(EigClass k) {
    switch (k) {
        case EigClass::zero: return "zero";
        case EigClass::immanent: return "immanent";
        case EigClass::singular_cos_plus_one: return "singular_cos_plus_one";
        case EigClass::singular_cos_minus_one: return "singular_cos_minus_one";
    }
    return "unknown";
}

double SpectrumWindow::kth_eigenvalue(int k) const {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "eigenvalue index is 1-based");
    int seen = 0;
    for (const auto& e : entries) {
        seen += e.multiplicity;
        if (seen >= k) return e.lambda;
    }
    throw Error(ErrorCode::WindowTooSmall, "window holds " + std::to_string(seen) +
                                               " eigenvalues, need " + std::to_string(k));
}

int SpectrumWindow::multiplicity_at(double lambda, double tol) const {
    for (const auto& e : entries)
        if (std::abs(e.lambda - lambda) <= tol) return e.multiplicity;
    return 0;
}

int SpectrumWindow::total_multiplicity() const {
    int total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
}

SpectrumWindow ck_spectrum(const Graph& g, double lambda_max, double tol) {
    return build_window(g, Condition::CK, lambda_max, tol);
}

SpectrumWindow kc_spectrum(const Graph& g, double lambda_max, double tol) {
    return build_window(g, Condition::KC, lambda_max, tol);
}

CkKcComparison compare_ck_kc(const Graph& g, double lambda_max) {
    const ComponentInfo info = analyze(g);
    if (info.c != 1) throw Error(ErrorCode::Disconnected, "comparison needs a connected graph");

    const SpectrumWindow ck = ck_spectrum(g, lambda_max);
    const SpectrumWindow kc = kc_spectrum(g, lambda_max);

    CkKcComparison report;
    report.full_coincidence = entries_match(ck.entries, kc.entries, 1e-9);
    report.immanent_coincidence = entries_match(immanent_part(ck), immanent_part(kc), 1e-9);
    report.bipartite = info.c_plus == 1;
    report.unicyclic_and_bipartite = info.corank == 1 && report.bipartite;
    report.equivalences_hold = report.full_coincidence == report.unicyclic_and_bipartite &&
                               report.immanent_coincidence == report.bipartite;
    return report;
}

int kernel_index(const Graph& g) {
    const ComponentInfo info = analyze(g);
    const int excess = g.edge_count() - g.vertex_count();
    const int index = (excess + info.c_plus) - info.c;
    if (index != excess - info.c_minus)
        throw Error(ErrorCode::InconsistentSpectrum, "kernel index identity violated");
    return index;
}

double weyl_ratio(const SpectrumWindow& spec, int k) {
    return spec.kth_eigenvalue(k) / (static_cast<double>(k) * k);
}

ContractionReport contraction_monotonicity(const Graph& g, int v, int w, double tol) {
    if (analyze(g).c != 1)
        throw Error(ErrorCode::Disconnected, "contraction comparison needs a connected graph");
    const Graph contracted = contract_vertices(g, v, w);

    // 4*pi^2 is always present, so this window has a positive eigenvalue.
    const double window = 4.0 * pi * pi + 1.0;
    auto lambda1 = [&](const Graph& graph) {
        const SpectrumWindow spec = ck_spectrum(graph, window);
        for (const auto& e : spec.entries)
            if (e.lambda > 0.0) return e.lambda;
        throw Error(ErrorCode::WindowTooSmall, "no positive eigenvalue in window");
    };

    ContractionReport report;
    report.lambda1_original = lambda1(g);
    report.lambda1_contracted = lambda1(contracted);
    report.holds = report.lambda1_original <= report.lambda1_contracted + tol;
    return report;
}

int distinct_count_per_period(const SpectrumWindow& spec, int k) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "period index must be >= 0");
    const double lo = 4.0 * k * k * pi * pi;
    const double hi = 4.0 * (k + 1) * (k + 1) * pi * pi;
    if (spec.lambda_max + SpectrumWindow::window_slack < hi)
        throw Error(ErrorCode::WindowTooSmall, "window does not cover the requested period");
    int count = 0;
    for (const auto& e : spec.entries)
        if (e.lambda > lo + 1e-9 && e.lambda <= hi + 1e-9) ++count;
    return count;
}

} // namespace qg
