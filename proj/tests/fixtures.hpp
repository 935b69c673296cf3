#ifndef QGSPEC_TESTS_FIXTURES_HPP
#define QGSPEC_TESTS_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "qgspec/graph.hpp"

namespace qgtest {

struct Fixture {
    std::string name;
    qg::Graph graph;
};

// Connected fixtures used across the suites.
inline std::vector<Fixture> connected_fixtures() {
    using qg::generate;
    using qg::GraphKind;
    return {
        {"P2", generate(GraphKind::path, 2)},
        {"P3", generate(GraphKind::path, 3)},
        {"P4", generate(GraphKind::path, 4)},
        {"K13", generate(GraphKind::star, 3)},
        {"C3", generate(GraphKind::circuit, 3)},
        {"C4", generate(GraphKind::circuit, 4)},
        {"C8", generate(GraphKind::circuit, 8)},
        {"K4", generate(GraphKind::complete, 4)},
        {"K5", generate(GraphKind::complete, 5)},
        {"Q3", generate(GraphKind::cube_q3)},
        {"petersen", generate(GraphKind::petersen)},
        {"BG1", generate(GraphKind::butler_grout_1)},
        {"BG2", generate(GraphKind::butler_grout_2)},
    };
}

inline std::vector<Fixture> all_fixtures() {
    using qg::disjoint_union;
    using qg::generate;
    using qg::GraphKind;
    std::vector<Fixture> list = connected_fixtures();
    list.push_back({"C3+C4", disjoint_union(generate(GraphKind::circuit, 3),
                                            generate(GraphKind::circuit, 4))});
    list.push_back({"C4+K4", disjoint_union(generate(GraphKind::circuit, 4),
                                            generate(GraphKind::complete, 4))});
    return list;
}

} // namespace qgtest

#endif
