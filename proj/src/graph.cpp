#include "qgspec/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

namespace qg {

namespace {

std::string edge_str(int t, int h) {
    return "(" + std::to_string(t) + "," + std::to_string(h) + ")";
}

void check_simple(int n, const std::vector<Edge>& edges) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges) {
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
            throw Error(ErrorCode::VertexOutOfRange, "edge " + edge_str(e.tail, e.head) +
                                                         " with n=" + std::to_string(n));
        if (e.tail == e.head)
            throw Error(ErrorCode::SelfLoop, "edge " + edge_str(e.tail, e.head));
        auto key = std::minmax(e.tail, e.head);
        if (!seen.insert(key).second)
            throw Error(ErrorCode::DuplicateEdge, "edge " + edge_str(e.tail, e.head));
    }
}

} // namespace

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1) throw Error(ErrorCode::InvalidSize, "vertex count must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [t, h] : pairs) edges.push_back({t, h});
    check_simple(n, edges);
    return Graph(n, std::move(edges));
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.tail];
        ++deg[e.head];
    }
    return deg;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> deg = degrees();
    std::sort(deg.begin(), deg.end());
    return deg;
}

bool Graph::adjacent(int v, int w) const {
    for (const Edge& e : edges_)
        if ((e.tail == v && e.head == w) || (e.tail == w && e.head == v)) return true;
    return false;
}

ComponentInfo analyze(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }

    ComponentInfo info;
    info.component_id.assign(n, -1);
    std::vector<int> color(n, -1); // 2-coloring per component

    for (int start = 0; start < n; ++start) {
        if (info.component_id[start] >= 0) continue;
        const int comp = info.c++;
        bool bipartite = true;
        std::queue<int> queue;
        queue.push(start);
        info.component_id[start] = comp;
        color[start] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : adj[v]) {
                if (info.component_id[w] < 0) {
                    info.component_id[w] = comp;
                    color[w] = 1 - color[v];
                    queue.push(w);
                } else if (color[w] == color[v]) {
                    bipartite = false;
                }
            }
        }
        if (bipartite)
            ++info.c_plus;
        else
            ++info.c_minus;
    }
    info.corank = g.edge_count() - n + info.c;
    return info;
}

Graph generate(GraphKind kind, int size) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case GraphKind::path: {
            if (size < 2) throw Error(ErrorCode::InvalidSize, "path needs size >= 2");
            for (int i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
            return Graph::from_edge_list(size, edges);
        }
        case GraphKind::circuit: {
            if (size < 3) throw Error(ErrorCode::InvalidSize, "circuit needs size >= 3");
            for (int i = 0; i < size; ++i) edges.emplace_back(i, (i + 1) % size);
            return Graph::from_edge_list(size, edges);
        }
        case GraphKind::star: {
            if (size < 1) throw Error(ErrorCode::InvalidSize, "star needs size >= 1");
            for (int i = 1; i <= size; ++i) edges.emplace_back(0, i);
            return Graph::from_edge_list(size + 1, edges);
        }
        case GraphKind::complete: {
            if (size < 2) throw Error(ErrorCode::InvalidSize, "complete needs size >= 2");
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) edges.emplace_back(i, j);
            return Graph::from_edge_list(size, edges);
        }
        case GraphKind::petersen: {
            for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
            for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
            for (int i = 0; i < 5; ++i) edges.emplace_back(i, 5 + i);
            return Graph::from_edge_list(10, edges);
        }
        case GraphKind::cube_q3: {
            for (int v = 0; v < 8; ++v)
                for (int bit = 0; bit < 3; ++bit) {
                    int w = v ^ (1 << bit);
                    if (v < w) edges.emplace_back(v, w);
                }
            return Graph::from_edge_list(8, edges);
        }
        case GraphKind::butler_grout_1:
            return generate(GraphKind::circuit, 8);
        case GraphKind::butler_grout_2: {
            edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {0, 6}, {6, 7}};
            return Graph::from_edge_list(8, edges);
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown graph kind");
}

GraphKind graph_kind_from_string(const std::string& name) {
    if (name == "path") return GraphKind::path;
    if (name == "circuit") return GraphKind::circuit;
    if (name == "star") return GraphKind::star;
    if (name == "complete") return GraphKind::complete;
    if (name == "petersen") return GraphKind::petersen;
    if (name == "cube_q3") return GraphKind::cube_q3;
    if (name == "butler_grout_1") return GraphKind::butler_grout_1;
    if (name == "butler_grout_2") return GraphKind::butler_grout_2;
    throw Error(ErrorCode::InvalidArgument, "unknown graph kind '" + name + "'");
}

std::string to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::path: return "path";
        case GraphKind::circuit: return "circuit";
        case GraphKind::star: return "star";
        case GraphKind::complete: return "complete";
        case GraphKind::petersen: return "petersen";
        case GraphKind::cube_q3: return "cube_q3";
        case GraphKind::butler_grout_1: return "butler_grout_1";
        case GraphKind::butler_grout_2: return "butler_grout_2";
    }
    return "unknown";
}

Graph contract_vertices(const Graph& g, int v, int w) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n || w < 0 || w >= n)
        throw Error(ErrorCode::VertexOutOfRange, "contract " + edge_str(v, w));
    if (v == w)
        throw Error(ErrorCode::InvalidArgument, "cannot contract a vertex with itself");

    // w disappears; indices above w shift down by one.
    auto remap = [&](int x) {
        if (x == w) x = v;
        return x > w ? x - 1 : x;
    };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges.emplace_back(remap(e.tail), remap(e.head));

    std::set<std::pair<int, int>> seen;
    for (auto [t, h] : edges) {
        if (t == h)
            throw Error(ErrorCode::ContractionViolatesSimplicity,
                        "contraction creates a self-loop at vertex " + std::to_string(t));
        if (!seen.insert(std::minmax(t, h)).second)
            throw Error(ErrorCode::ContractionViolatesSimplicity,
                        "contraction creates parallel edges " + edge_str(t, h));
    }
    return Graph::from_edge_list(n - 1, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int shift = a.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : a.edges()) edges.emplace_back(e.tail, e.head);
    for (const Edge& e : b.edges()) edges.emplace_back(e.tail + shift, e.head + shift);
    return Graph::from_edge_list(shift + b.vertex_count(), edges);
}

std::int64_t spanning_tree_count(const Graph& g) {
    ComponentInfo info = analyze(g);
    if (info.c != 1) throw Error(ErrorCode::Disconnected, "spanning trees need a connected graph");

    const int n = g.vertex_count();
    const int k = n - 1;
    if (k == 0) return 1;

    // Laplacian cofactor (drop row/column 0), fraction-free elimination.
    std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k, 0));
    for (const Edge& e : g.edges()) {
        int t = e.tail, h = e.head;
        if (t > 0) a[t - 1][t - 1] += 1;
        if (h > 0) a[h - 1][h - 1] += 1;
        if (t > 0 && h > 0) {
            a[t - 1][h - 1] -= 1;
            a[h - 1][t - 1] -= 1;
        }
    }

    __int128 prev = 1;
    int sign = 1;
    for (int i = 0; i < k; ++i) {
        if (a[i][i] == 0) {
            int pivot = -1;
            for (int r = i + 1; r < k; ++r)
                if (a[r][i] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(a[i], a[pivot]);
            sign = -sign;
        }
        for (int r = i + 1; r < k; ++r)
            for (int c = i + 1; c < k; ++c)
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
        prev = a[i][i];
    }
    return static_cast<std::int64_t>(sign * a[k - 1][k - 1]);
}

Graph read_edge_list_text(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw Error(ErrorCode::ParseError, "expected header line 'n N'");
    if (m < 0) throw Error(ErrorCode::ParseError, "negative edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int t = 0, h = 0;
        if (!(in >> t >> h))
            throw Error(ErrorCode::ParseError, "expected edge line " + std::to_string(i));
        edges.emplace_back(t, h);
    }
    return Graph::from_edge_list(n, edges);
}

void write_edge_list_text(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.tail << " " << e.head << "\n";
}

} // namespace qg
