#include <doctest.h>

#include <bit>
#include <numeric>
#include <sstream>

#include "fixtures.hpp"
#include "qgspec/graph.hpp"

using qg::Error;
using qg::ErrorCode;
using qg::Graph;
using qg::GraphKind;

namespace {

// Independent oracle: count spanning trees by enumerating all (n-1)-edge
// subsets and checking that they connect the graph.
std::int64_t brute_force_spanning_trees(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (n == 1) return 1;
    std::int64_t count = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != n - 1) continue;
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int merges = 0;
        for (int j = 0; j < m; ++j) {
            if (!(mask & (1u << j))) continue;
            int a = find(g.edges()[j].tail), b = find(g.edges()[j].head);
            if (a != b) {
                parent[a] = b;
                ++merges;
            }
        }
        if (merges == n - 1) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("from_edge_list basic graphs") {
    const Graph triangle = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(triangle.vertex_count() == 3);
    CHECK(triangle.edge_count() == 3);
    CHECK(triangle.adjacent(0, 2));

    const Graph p2 = Graph::from_edge_list(2, {{0, 1}});
    CHECK(p2.edge_count() == 1);
    CHECK(p2.edges()[0].tail == 0);
    CHECK(p2.edges()[0].head == 1);
}

TEST_CASE("from_edge_list rejects invalid input") {
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 1}, {0, 1}}), Error);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{1, 1}}), Error);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), Error);
    CHECK_THROWS_AS(Graph::from_edge_list(0, {}), Error);

    try {
        Graph::from_edge_list(3, {{0, 1}, {0, 1}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateEdge);
        CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
    }
    try {
        Graph::from_edge_list(2, {{1, 1}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SelfLoop);
        CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
    }
}

TEST_CASE("analyze components and bipartiteness") {
    const auto c3 = qg::analyze(qg::generate(GraphKind::circuit, 3));
    CHECK(c3.c == 1);
    CHECK(c3.c_plus == 0);
    CHECK(c3.c_minus == 1);
    CHECK(c3.corank == 1);

    const auto c4 = qg::analyze(qg::generate(GraphKind::circuit, 4));
    CHECK(c4.c == 1);
    CHECK(c4.c_plus == 1);
    CHECK(c4.c_minus == 0);
    CHECK(c4.corank == 1);

    const auto both = qg::analyze(qg::disjoint_union(qg::generate(GraphKind::circuit, 3),
                                                     qg::generate(GraphKind::circuit, 4)));
    CHECK(both.c == 2);
    CHECK(both.c_plus == 1);
    CHECK(both.c_minus == 1);
    CHECK(both.corank == 2);
    CHECK(both.component_id[0] == both.component_id[2]);
    CHECK(both.component_id[0] != both.component_id[3]);
}

TEST_CASE("generators have the documented shapes") {
    const Graph k4 = qg::generate(GraphKind::complete, 4);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    const Graph bg1 = qg::generate(GraphKind::butler_grout_1);
    CHECK(bg1.vertex_count() == 8);
    CHECK(bg1.edge_count() == 8);
    const auto bg1_info = qg::analyze(bg1);
    CHECK(bg1_info.c_plus == 1);
    CHECK(bg1_info.corank == 1);

    const Graph bg2 = qg::generate(GraphKind::butler_grout_2);
    CHECK(bg2.vertex_count() == 8);
    CHECK(bg2.edge_count() == 8);
    const auto bg2_info = qg::analyze(bg2);
    CHECK(bg2_info.c_plus == 1);
    CHECK(bg2_info.corank == 1);
    CHECK(bg2.degree_sequence() == std::vector<int>{1, 1, 2, 2, 2, 2, 2, 4});

    const Graph claw = qg::generate(GraphKind::star, 3);
    CHECK(claw.vertex_count() == 4);
    CHECK(claw.edge_count() == 3);

    const Graph petersen = qg::generate(GraphKind::petersen);
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    for (int d : petersen.degrees()) CHECK(d == 3);

    const Graph q3 = qg::generate(GraphKind::cube_q3);
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(qg::analyze(q3).c_plus == 1);

    CHECK_THROWS_AS(qg::generate(GraphKind::circuit, 2), Error);
    CHECK_THROWS_AS(qg::generate(GraphKind::path, 1), Error);
}

TEST_CASE("circuit bipartite iff even length") {
    for (int k = 3; k <= 9; ++k) {
        const auto info = qg::analyze(qg::generate(GraphKind::circuit, k));
        CHECK(info.c_plus == (k % 2 == 0 ? 1 : 0));
    }
}

TEST_CASE("corank identity over all fixtures") {
    for (const auto& [name, g] : qgtest::all_fixtures()) {
        INFO(name);
        const auto info = qg::analyze(g);
        CHECK(info.corank == g.edge_count() - g.vertex_count() + info.c);
        CHECK(info.c == info.c_plus + info.c_minus);
    }
}

TEST_CASE("contract_vertices") {
    const Graph p4 = qg::generate(GraphKind::path, 4);
    const Graph closed = qg::contract_vertices(p4, 0, 3);
    CHECK(closed.vertex_count() == 3);
    CHECK(closed.edge_count() == 3);
    CHECK(qg::analyze(closed).corank == 1);

    // P3 endpoints: contraction would double the edge pair around the middle.
    const Graph p3 = qg::generate(GraphKind::path, 3);
    CHECK_THROWS_AS(qg::contract_vertices(p3, 0, 2), Error);
    try {
        qg::contract_vertices(p3, 0, 2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ContractionViolatesSimplicity);
    }

    // Adjacent vertices: self-loop.
    CHECK_THROWS_AS(qg::contract_vertices(p3, 0, 1), Error);
    // Two star leaves: parallel edges.
    CHECK_THROWS_AS(qg::contract_vertices(qg::generate(GraphKind::star, 4), 1, 2), Error);

    // Merging across components reduces c by one, N stays put.
    const Graph two = qg::disjoint_union(qg::generate(GraphKind::circuit, 4),
                                         qg::generate(GraphKind::circuit, 4));
    const Graph merged = qg::contract_vertices(two, 0, 4);
    CHECK(merged.edge_count() == two.edge_count());
    CHECK(merged.vertex_count() == two.vertex_count() - 1);
    CHECK(qg::analyze(merged).c == 1);
}

TEST_CASE("spanning tree counts") {
    CHECK(qg::spanning_tree_count(qg::generate(GraphKind::circuit, 8)) == 8);
    CHECK(qg::spanning_tree_count(qg::generate(GraphKind::butler_grout_2)) == 4);
    CHECK(qg::spanning_tree_count(qg::generate(GraphKind::complete, 4)) == 16);
    // Cayley: n^{n-2}
    CHECK(qg::spanning_tree_count(qg::generate(GraphKind::complete, 5)) == 125);
    CHECK(qg::spanning_tree_count(qg::generate(GraphKind::complete, 8)) == 262144);
    CHECK(qg::spanning_tree_count(qg::generate(GraphKind::path, 6)) == 1);
    CHECK(qg::spanning_tree_count(qg::generate(GraphKind::star, 5)) == 1);
    CHECK(qg::spanning_tree_count(qg::generate(GraphKind::petersen)) == 2000);

    CHECK_THROWS_AS(qg::spanning_tree_count(qg::disjoint_union(
                        qg::generate(GraphKind::path, 2), qg::generate(GraphKind::path, 2))),
                    Error);
}

TEST_CASE("spanning tree count agrees with subset enumeration") {
    for (const auto& [name, g] : qgtest::connected_fixtures()) {
        if (g.edge_count() > 16) continue;
        INFO(name);
        CHECK(qg::spanning_tree_count(g) == brute_force_spanning_trees(g));
    }
}

TEST_CASE("edge list text round trip") {
    const Graph bg2 = qg::generate(GraphKind::butler_grout_2);
    std::stringstream buffer;
    qg::write_edge_list_text(bg2, buffer);
    const Graph back = qg::read_edge_list_text(buffer);
    CHECK(back.vertex_count() == bg2.vertex_count());
    CHECK(back.edges() == bg2.edges());

    std::istringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(qg::read_edge_list_text(bad), Error);
}
