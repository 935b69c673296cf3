#include "qgspec/recover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qg {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double anchor_tol = 1e-9; // matching tolerance at the analytic anchors

int sum_below_pi_squared(const SpectrumWindow& spec) {
    int total = 0;
    for (const auto& e : spec.entries)
        if (e.lambda > anchor_tol && e.lambda < pi * pi - anchor_tol) total += e.multiplicity;
    return total;
}

void validate(const RecoveredInvariants& r) {
    if (r.n < 1 || r.N < 0 || r.c < 0 || r.c_plus < 0 || r.c_minus < 0 ||
        r.c != r.c_plus + r.c_minus)
        throw Error(ErrorCode::InconsistentSpectrum, "recovered invariants are not consistent");
}

} // namespace

RecoveredInvariants recover(const SpectrumWindow& spec) {
    if (spec.lambda_max < 4.0 * pi * pi + anchor_tol)
        throw Error(ErrorCode::WindowTooSmall, "recovery needs lambda_max >= 4*pi^2");

    const int m0 = spec.multiplicity_at(0.0, anchor_tol);
    const int m_pi2 = spec.multiplicity_at(pi * pi, anchor_tol);
    const int m_4pi2 = spec.multiplicity_at(4.0 * pi * pi, anchor_tol);
    const int interior = sum_below_pi_squared(spec);

    RecoveredInvariants r;
    r.source_condition = spec.condition;
    if (spec.condition == Condition::CK) {
        r.c = m0;
        const int twice_c_minus = m_4pi2 - m_pi2;
        if (twice_c_minus < 0 || twice_c_minus % 2 != 0)
            throw Error(ErrorCode::InconsistentSpectrum, "m(4pi^2) - m(pi^2) must be even and >= 0");
        r.c_minus = twice_c_minus / 2;
        r.c_plus = r.c - r.c_minus;
        r.n = r.c + r.c_plus + interior;
        r.N = r.n - 2 * r.c + m_4pi2;
    } else {
        const int twice_c_minus = m_pi2 - m_4pi2;
        if (twice_c_minus < 0 || twice_c_minus % 2 != 0)
            throw Error(ErrorCode::InconsistentSpectrum, "m(pi^2) - m(4pi^2) must be even and >= 0");
        r.c_minus = twice_c_minus / 2;
        r.c_plus = m_4pi2 - m0;
        r.c = r.c_plus + r.c_minus;
        r.n = r.c + r.c_plus + interior;
        r.N = m0 + r.n - r.c_plus;
    }
    validate(r);
    return r;
}

bool isospectral(const SpectrumWindow& a, const SpectrumWindow& b, double tol) {
    if (a.condition != b.condition || std::abs(a.lambda_max - b.lambda_max) > 1e-12)
        throw Error(ErrorCode::WindowMismatch, "windows differ in condition or lambda_max");
    if (a.entries.size() != b.entries.size()) return false;
    for (size_t i = 0; i < a.entries.size(); ++i)
        if (std::abs(a.entries[i].lambda - b.entries[i].lambda) > tol ||
            a.entries[i].multiplicity != b.entries[i].multiplicity)
            return false;
    return true;
}

SpectrumWindow collate(Condition condition, double lambda_max, std::vector<double> eigenvalues,
                       double tol) {
    std::sort(eigenvalues.begin(), eigenvalues.end());

    SpectrumWindow window;
    window.condition = condition;
    window.lambda_max = lambda_max;

    size_t i = 0;
    while (i < eigenvalues.size()) {
        size_t j = i + 1;
        double sum = eigenvalues[i];
        while (j < eigenvalues.size() && eigenvalues[j] - eigenvalues[j - 1] <= tol) {
            sum += eigenvalues[j];
            ++j;
        }
        const double lambda = sum / static_cast<double>(j - i);
        const double s = std::sqrt(std::max(lambda, 0.0));

        EigenvalueEntry entry;
        entry.lambda = lambda;
        entry.sqrt_lambda = s;
        entry.multiplicity = static_cast<int>(j - i);
        const double nearest = pi * std::round(s / pi);
        if (lambda <= tol)
            entry.klass = EigClass::zero;
        else if (std::abs(s - nearest) <= tol)
            entry.klass = static_cast<long>(std::round(nearest / pi)) % 2 == 0
                              ? EigClass::singular_cos_plus_one
                              : EigClass::singular_cos_minus_one;
        else
            entry.klass = EigClass::immanent;
        window.entries.push_back(entry);
        i = j;
    }
    return window;
}

NonRecoverabilityReport non_recoverability_report() {
    const Graph g1 = generate(GraphKind::butler_grout_1);
    const Graph g2 = generate(GraphKind::butler_grout_2);
    const double window = 4.0 * pi * pi + 1.0;

    NonRecoverabilityReport report;
    report.ck_isospectral = isospectral(ck_spectrum(g1, window), ck_spectrum(g2, window));
    report.kc_isospectral = isospectral(kc_spectrum(g1, window), kc_spectrum(g2, window));
    report.spanning_trees_1 = spanning_tree_count(g1);
    report.spanning_trees_2 = spanning_tree_count(g2);
    report.degree_sequence_1 = g1.degree_sequence();
    report.degree_sequence_2 = g2.degree_sequence();
    report.degree_sequences_differ = report.degree_sequence_1 != report.degree_sequence_2;
    report.recovered_1 = recover(ck_spectrum(g1, window));
    report.recovered_2 = recover(kc_spectrum(g2, window));

    const Graph c4 = generate(GraphKind::circuit, 4);
    const Graph claw = generate(GraphKind::star, 3);
    const RealSpectrum z1 = spectrum_of_transition(c4);
    const RealSpectrum z2 = spectrum_of_transition(claw);
    report.c4_claw_z_isospectral = z1.values.size() == z2.values.size();
    for (size_t i = 0; report.c4_claw_z_isospectral && i < z1.values.size(); ++i)
        report.c4_claw_z_isospectral = std::abs(z1.values[i].first - z2.values[i].first) < 1e-10 &&
                                       z1.values[i].second == z2.values[i].second;
    report.c4_claw_ck_isospectral =
        isospectral(ck_spectrum(c4, window), ck_spectrum(claw, window));
    return report;
}

} // namespace qg
