#ifndef QGSPEC_GRAPH_HPP
#define QGSPEC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qgspec/errors.hpp"

namespace qg {

// One oriented edge; the edge is identified with the interval [0,1],
// tail -> 0, head -> 1.
struct Edge {
    int tail = 0;
    int head = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph with a fixed orientation per edge.
// Immutable after construction; safe to share across threads.
class Graph {
public:
    // Validates simplicity (no self-loops, no parallel edges) and vertex
    // ranges. Orientation of the input pairs is preserved exactly.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::vector<int> degrees() const;
    // Sorted ascending.
    std::vector<int> degree_sequence() const;
    bool adjacent(int v, int w) const;

private:
    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

    int n_ = 1;
    std::vector<Edge> edges_;
};

struct ComponentInfo {
    int c = 0;       // connected components
    int c_plus = 0;  // bipartite components
    int c_minus = 0; // non-bipartite components
    std::vector<int> component_id; // vertex -> component index
    int corank = 0;  // N - n + c, the cycle-space dimension
};

ComponentInfo analyze(const Graph& g);

enum class GraphKind {
    path,          // size = vertex count (>= 2), vertices 0..size-1, edges (i, i+1)
    circuit,       // size = length (>= 3), edges (i, (i+1) mod size)
    star,          // size = number of edges (>= 1), center 0, leaves 1..size
    complete,      // size = vertex count (>= 2), edges (i, j) for i < j
    petersen,      // fixed: outer circuit 0..4, inner pentagram 5..9, spokes i -> 5+i
    cube_q3,       // fixed: vertices 0..7 as bit triples, edges across one flipped bit
    butler_grout_1,// fixed: circuit of length 8
    butler_grout_2 // fixed: circuit 0..3 with 2-paths 0-4-5 and 0-6-7
};

// size is ignored for the fixed graphs.
Graph generate(GraphKind kind, int size = 0);

GraphKind graph_kind_from_string(const std::string& name);
std::string to_string(GraphKind kind);

// Identifies v and w; the merged vertex keeps v's position in the renumbering
// that closes the gap left by w. N is unchanged, n drops by one. Throws
// ContractionViolatesSimplicity when the result would have a self-loop or a
// parallel edge.
Graph contract_vertices(const Graph& g, int v, int w);

// Vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

// Number of spanning trees via a fraction-free (Bareiss) determinant of a
// Laplacian cofactor; exact for n <= 12. Requires a connected graph.
std::int64_t spanning_tree_count(const Graph& g);

// Text format: first line "n N", then N lines "tail head" (0-based).
Graph read_edge_list_text(std::istream& in);
void write_edge_list_text(const Graph& g, std::ostream& out);

} // namespace qg

#endif
