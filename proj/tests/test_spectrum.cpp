#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "qgspec/spectrum.hpp"

using qg::Condition;
using qg::EigClass;
using qg::GraphKind;
using qg::SpectrumWindow;

namespace {

constexpr double pi = std::numbers::pi;
const double window_2pi = 4.0 * pi * pi + 1.0;

void check_entry(const qg::EigenvalueEntry& e, double lambda, int mult, EigClass klass) {
    CHECK(e.lambda == doctest::Approx(lambda).epsilon(1e-12));
    CHECK(e.multiplicity == mult);
    CHECK(e.klass == klass);
}

} // namespace

TEST_CASE("CK spectrum of the triangle") {
    const auto spec = qg::ck_spectrum(qg::generate(GraphKind::circuit, 3), window_2pi);
    REQUIRE(spec.entries.size() == 4);
    check_entry(spec.entries[0], 0.0, 1, EigClass::zero);
    check_entry(spec.entries[1], std::pow(2.0 * pi / 3.0, 2), 2, EigClass::immanent);
    check_entry(spec.entries[2], std::pow(4.0 * pi / 3.0, 2), 2, EigClass::immanent);
    check_entry(spec.entries[3], 4.0 * pi * pi, 2, EigClass::singular_cos_plus_one);
    CHECK(spec.entries[1].source_mu.value() == doctest::Approx(-0.5));
    // pi^2 is absent: N - n + 2c+ = 0.
    CHECK(spec.multiplicity_at(pi * pi) == 0);
}

TEST_CASE("KC spectrum of the triangle") {
    const auto spec = qg::kc_spectrum(qg::generate(GraphKind::circuit, 3), window_2pi);
    REQUIRE(spec.entries.size() == 3);
    check_entry(spec.entries[0], std::pow(pi / 3.0, 2), 2, EigClass::immanent);
    check_entry(spec.entries[1], pi * pi, 2, EigClass::singular_cos_minus_one);
    check_entry(spec.entries[2], std::pow(5.0 * pi / 3.0, 2), 2, EigClass::immanent);
    CHECK(spec.multiplicity_at(0.0) == 0);
    CHECK(spec.multiplicity_at(4.0 * pi * pi) == 0);
}

TEST_CASE("single edge gives Neumann and Dirichlet interval spectra") {
    const qg::Graph p2 = qg::generate(GraphKind::path, 2);

    const auto ck = qg::ck_spectrum(p2, window_2pi);
    REQUIRE(ck.entries.size() == 3);
    check_entry(ck.entries[0], 0.0, 1, EigClass::zero);
    check_entry(ck.entries[1], pi * pi, 1, EigClass::singular_cos_minus_one);
    check_entry(ck.entries[2], 4.0 * pi * pi, 1, EigClass::singular_cos_plus_one);

    const auto kc = qg::kc_spectrum(p2, window_2pi);
    REQUIRE(kc.entries.size() == 2);
    check_entry(kc.entries[0], pi * pi, 1, EigClass::singular_cos_minus_one);
    check_entry(kc.entries[1], 4.0 * pi * pi, 1, EigClass::singular_cos_plus_one);
}

TEST_CASE("K4 follows the complete-graph table") {
    const auto spec = qg::ck_spectrum(qg::generate(GraphKind::complete, 4), 9.0 * pi * pi);
    const double a = std::acos(-1.0 / 3.0);
    REQUIRE(spec.entries.size() == 7);
    check_entry(spec.entries[0], 0.0, 1, EigClass::zero);
    check_entry(spec.entries[1], a * a, 3, EigClass::immanent);
    check_entry(spec.entries[2], pi * pi, 2, EigClass::singular_cos_minus_one);
    check_entry(spec.entries[3], std::pow(2.0 * pi - a, 2), 3, EigClass::immanent);
    check_entry(spec.entries[4], 4.0 * pi * pi, 4, EigClass::singular_cos_plus_one);
    check_entry(spec.entries[5], std::pow(2.0 * pi + a, 2), 3, EigClass::immanent);
    check_entry(spec.entries[6], 9.0 * pi * pi, 2, EigClass::singular_cos_minus_one);
}

TEST_CASE("entry invariants hold on every fixture window") {
    for (const auto& [name, g] : qgtest::all_fixtures()) {
        INFO(name);
        for (Condition cond : {Condition::CK, Condition::KC}) {
            const SpectrumWindow spec = cond == Condition::CK ? qg::ck_spectrum(g, window_2pi)
                                                              : qg::kc_spectrum(g, window_2pi);
            double previous = -1.0;
            for (const auto& e : spec.entries) {
                CHECK(e.lambda > previous); // strictly increasing
                previous = e.lambda;
                CHECK(e.lambda <= window_2pi + 1e-12);
                CHECK(e.multiplicity >= 1);
                CHECK(e.sqrt_lambda == doctest::Approx(std::sqrt(e.lambda)));
                switch (e.klass) {
                    case EigClass::zero:
                        CHECK(e.lambda == 0.0);
                        break;
                    case EigClass::immanent: {
                        CHECK(std::abs(std::sin(e.sqrt_lambda)) > 1e-9);
                        REQUIRE(e.source_mu.has_value());
                        CHECK(*e.source_mu > -1.0);
                        CHECK(*e.source_mu < 1.0);
                        break;
                    }
                    case EigClass::singular_cos_plus_one: {
                        CHECK(e.lambda > 0.0);
                        const double ratio = e.sqrt_lambda / (2.0 * pi);
                        CHECK(std::abs(ratio - std::round(ratio)) < 1e-12);
                        break;
                    }
                    case EigClass::singular_cos_minus_one: {
                        const double ratio = (e.sqrt_lambda - pi) / (2.0 * pi);
                        CHECK(std::abs(ratio - std::round(ratio)) < 1e-12);
                        break;
                    }
                }
            }
        }
    }
}

TEST_CASE("errors for degenerate graphs") {
    const qg::Graph isolated = qg::Graph::from_edge_list(3, {{0, 1}});
    CHECK_THROWS_AS(qg::ck_spectrum(isolated, window_2pi), qg::Error);
    const qg::Graph empty = qg::Graph::from_edge_list(2, {});
    CHECK_THROWS_AS(qg::kc_spectrum(empty, window_2pi), qg::Error);
}

TEST_CASE("compare_ck_kc matches the structural predicates") {
    const auto c8 = qg::compare_ck_kc(qg::generate(GraphKind::circuit, 8), window_2pi);
    CHECK(c8.full_coincidence);
    CHECK(c8.immanent_coincidence);
    CHECK(c8.unicyclic_and_bipartite);
    CHECK(c8.equivalences_hold);

    const auto c3 = qg::compare_ck_kc(qg::generate(GraphKind::circuit, 3), window_2pi);
    CHECK_FALSE(c3.full_coincidence);
    CHECK_FALSE(c3.immanent_coincidence);
    CHECK_FALSE(c3.bipartite);
    CHECK(c3.equivalences_hold);

    const auto claw = qg::compare_ck_kc(qg::generate(GraphKind::star, 3), window_2pi);
    CHECK_FALSE(claw.full_coincidence);
    CHECK(claw.immanent_coincidence);
    CHECK(claw.bipartite);
    CHECK_FALSE(claw.unicyclic_and_bipartite);
    CHECK(claw.equivalences_hold);

    for (const auto& [name, g] : qgtest::connected_fixtures()) {
        INFO(name);
        CHECK(qg::compare_ck_kc(g, window_2pi).equivalences_hold);
    }

    CHECK_THROWS_AS(qg::compare_ck_kc(qg::disjoint_union(qg::generate(GraphKind::circuit, 3),
                                                         qg::generate(GraphKind::circuit, 4)),
                                      window_2pi),
                    qg::Error);
}

TEST_CASE("kernel index") {
    CHECK(qg::kernel_index(qg::generate(GraphKind::star, 3)) == -1);
    CHECK(qg::kernel_index(qg::generate(GraphKind::path, 5)) == -1);
    CHECK(qg::kernel_index(qg::generate(GraphKind::circuit, 4)) == 0);
    CHECK(qg::kernel_index(qg::generate(GraphKind::circuit, 3)) == -1);

    // Same number through the spectra themselves.
    for (const auto& [name, g] : qgtest::all_fixtures()) {
        INFO(name);
        const int direct = qg::kernel_index(g);
        const int from_spectra = qg::kc_spectrum(g, window_2pi).multiplicity_at(0.0) -
                                 qg::ck_spectrum(g, window_2pi).multiplicity_at(0.0);
        CHECK(direct == from_spectra);
        CHECK(direct == g.edge_count() - g.vertex_count() - qg::analyze(g).c_minus);
    }
}

TEST_CASE("weyl ratio on the single edge") {
    const auto ck = qg::ck_spectrum(qg::generate(GraphKind::path, 2), 2600.0 * pi * pi);
    // Neumann interval spectrum ((k-1) pi)^2.
    CHECK(qg::weyl_ratio(ck, 10) == doctest::Approx(81.0 * pi * pi / 100.0));
    CHECK(qg::weyl_ratio(ck, 50) == doctest::Approx(49.0 * 49.0 * pi * pi / 2500.0));
    CHECK_THROWS_AS(qg::weyl_ratio(ck, 100000), qg::Error);
}

TEST_CASE("weyl ratio approaches pi^2 over N^2") {
    const qg::Graph c3 = qg::generate(GraphKind::circuit, 3);
    const int k = 200;
    const double target = pi * pi / 9.0;
    const double window = std::pow(200.0 * pi / 3.0, 2) * 1.2;
    CHECK(qg::weyl_ratio(qg::kc_spectrum(c3, window), k) == doctest::Approx(target).epsilon(0.05));
    CHECK(qg::weyl_ratio(qg::ck_spectrum(c3, window), k) == doctest::Approx(target).epsilon(0.05));
}

TEST_CASE("contraction lowers the spectral gap ordering") {
    // Identifying the endpoints of a path closes it into a circuit of the
    // same edge count.
    const auto p4 = qg::contraction_monotonicity(qg::generate(GraphKind::path, 4), 0, 3);
    CHECK(p4.holds);
    CHECK(p4.lambda1_original == doctest::Approx(std::pow(pi / 3.0, 2)));
    CHECK(p4.lambda1_contracted == doctest::Approx(std::pow(2.0 * pi / 3.0, 2)));

    const auto p5 = qg::contraction_monotonicity(qg::generate(GraphKind::path, 5), 0, 4);
    CHECK(p5.holds);
    CHECK(p5.lambda1_original == doctest::Approx(std::pow(pi / 4.0, 2)));
    CHECK(p5.lambda1_contracted == doctest::Approx(std::pow(pi / 2.0, 2)));

    // Disconnected inputs are rejected before contracting.
    CHECK_THROWS_AS(qg::contraction_monotonicity(
                        qg::disjoint_union(qg::generate(GraphKind::circuit, 4),
                                           qg::generate(GraphKind::circuit, 4)),
                        0, 4),
                    qg::Error);
    // Two leaves of a star cannot be identified.
    CHECK_THROWS_AS(qg::contraction_monotonicity(qg::generate(GraphKind::star, 4), 1, 2),
                    qg::Error);
}

TEST_CASE("distinct eigenvalues per period") {
    const double window = 17.0 * pi * pi;
    const auto petersen_ck = qg::ck_spectrum(qg::generate(GraphKind::petersen), window);
    CHECK(qg::distinct_count_per_period(petersen_ck, 0) == 6);

    const auto k4_kc = qg::kc_spectrum(qg::generate(GraphKind::complete, 4), window);
    CHECK(qg::distinct_count_per_period(k4_kc, 0) == 4);

    // C4 is bipartite, so the +-1 transition eigenvalues merge into the
    // singular lattice and the period holds 2d distinct values, not 2(d+1).
    const auto c4_ck = qg::ck_spectrum(qg::generate(GraphKind::circuit, 4), window);
    CHECK(qg::distinct_count_per_period(c4_ck, 0) == 4);

    // Period k = 2 would need the window to reach (6 pi)^2.
    CHECK_THROWS_AS(qg::distinct_count_per_period(c4_ck, 2), qg::Error);
}

TEST_CASE("immanent parts of CK and KC agree exactly for bipartite graphs") {
    for (const auto& [name, g] : qgtest::connected_fixtures()) {
        INFO(name);
        const bool bipartite = qg::analyze(g).c_plus == 1;
        const auto ck = qg::ck_spectrum(g, window_2pi);
        const auto kc = qg::kc_spectrum(g, window_2pi);

        std::vector<std::pair<double, int>> ck_imm, kc_imm;
        for (const auto& e : ck.entries)
            if (e.klass == EigClass::immanent) ck_imm.emplace_back(e.lambda, e.multiplicity);
        for (const auto& e : kc.entries)
            if (e.klass == EigClass::immanent) kc_imm.emplace_back(e.lambda, e.multiplicity);

        bool equal = ck_imm.size() == kc_imm.size();
        for (size_t i = 0; equal && i < ck_imm.size(); ++i)
            equal = std::abs(ck_imm[i].first - kc_imm[i].first) < 1e-9 &&
                    ck_imm[i].second == kc_imm[i].second;
        CHECK(equal == bipartite);
    }
}

TEST_CASE("CK and KC eigenvalues pair through the reflection") {
    for (const auto& [name, g] : qgtest::connected_fixtures()) {
        INFO(name);
        const auto ck = qg::ck_spectrum(g, window_2pi);
        const auto kc = qg::kc_spectrum(g, window_2pi);
        for (const auto& e : ck.entries) {
            if (e.klass != EigClass::immanent || e.lambda >= pi * pi) continue;
            const double partner = std::pow(pi - e.sqrt_lambda, 2);
            bool found = false;
            for (const auto& f : kc.entries)
                if (f.klass == EigClass::immanent && std::abs(f.lambda - partner) < 1e-9) {
                    found = true;
                    CHECK(f.multiplicity == e.multiplicity);
                    CHECK(*f.source_mu == doctest::Approx(*e.source_mu).epsilon(1e-10));
                }
            CHECK(found);
        }
    }
}

TEST_CASE("interlacing with decoupled interval spectra") {
    for (const auto& [name, g] : qgtest::connected_fixtures()) {
        INFO(name);
        const int edge_count = g.edge_count();
        const int k_max = 30;
        const double window =
            std::pow(pi * ((k_max - 1) / edge_count + 1), 2) + 1.0;
        const auto spec = qg::ck_spectrum(g, window);
        for (int k = 1; k <= k_max; ++k) {
            const double lambda_k = spec.kth_eigenvalue(k);
            const double alpha = std::pow(pi * ((k - 1) / edge_count), 2);
            const double omega = std::pow(pi * ((k - 1) / edge_count + 1), 2);
            CHECK(lambda_k >= alpha - 1e-9);
            CHECK(lambda_k <= omega + 1e-9);
        }
    }
}
