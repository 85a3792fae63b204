#include "diamond/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace diamond {

namespace {

constexpr long long kMaxVertexCount = 10'000'000;

bool parse_nonneg(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size() && out >= 0;
}

void build_adjacency(Graph& g) {
    g.adj.assign(g.n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n = n;
    std::set<std::pair<int, int>> seen;
    g.edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        std::pair<int, int> e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge");
        g.edges.push_back(e);
    }
    build_adjacency(g);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
    const auto& nbrs = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int other = adj[u].size() <= adj[v].size() ? v : u;
    return std::find(nbrs.begin(), nbrs.end(), other) != nbrs.end();
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool saw_content = false;
    long long declared = -1;
    long long max_index = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;

        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);

        if (!saw_content && tok[0] == "n") {
            saw_content = true;
            long long count;
            if (tok.size() != 2 || !parse_nonneg(tok[1], count))
                throw ParseError(lineno, "malformed header, expected \"n <count>\"");
            if (count > kMaxVertexCount) throw ParseError(lineno, "vertex count too large");
            declared = count;
            continue;
        }
        saw_content = true;

        long long u, v;
        if (tok.size() != 2 || !parse_nonneg(tok[0], u) || !parse_nonneg(tok[1], v))
            throw ParseError(lineno, "expected two non-negative integers");
        if (u > kMaxVertexCount || v > kMaxVertexCount)
            throw ParseError(lineno, "vertex index too large");
        if (u == v) throw ParseError(lineno, "self-loop rejected");
        if (declared >= 0 && (u >= declared || v >= declared))
            throw ParseError(lineno, "vertex index exceeds declared count");
        max_index = std::max({max_index, u, v});
        std::pair<int, int> e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (seen.insert(e).second) edges.push_back(e);
    }

    long long n = declared >= 0 ? declared : max_index + 1;
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.n)
        throw std::invalid_argument("bfs_distances: source out of range");
    std::vector<int> dist(g.n, kUnreachable);
    std::vector<int> queue;
    queue.reserve(g.n);
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : g.adj[u]) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix dm;
    dm.n = g.n;
    dm.cells.resize(static_cast<std::size_t>(g.n) * g.n);
    for (int s = 0; s < g.n; ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), dm.cells.begin() + static_cast<std::size_t>(s) * g.n);
    }
    return dm;
}

bool check_connected(const Graph& g) {
    if (g.n <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

TwoColoring TwoColoring::flipped() const {
    TwoColoring out;
    out.color.reserve(color.size());
    for (Color c : color)
        out.color.push_back(c == Color::white ? Color::black : Color::white);
    return out;
}

namespace {

// Cycle through the BFS tree: u .. lca .. v, closed by the conflict edge (v,u).
std::vector<int> odd_cycle_witness(const std::vector<int>& parent,
                                   const std::vector<int>& depth, int u, int v) {
    std::vector<int> up, vp;
    int a = u, b = v;
    while (depth[a] > depth[b]) { up.push_back(a); a = parent[a]; }
    while (depth[b] > depth[a]) { vp.push_back(b); b = parent[b]; }
    while (a != b) {
        up.push_back(a); a = parent[a];
        vp.push_back(b); b = parent[b];
    }
    up.push_back(a);
    up.insert(up.end(), vp.rbegin(), vp.rend());
    return up;
}

}  // namespace

TwoColorResult two_color(const Graph& g) {
    TwoColorResult res;
    if (g.n == 0) {
        res.bipartite = true;
        return res;
    }
    std::vector<Color> color(g.n, Color::white);
    std::vector<std::uint8_t> seen(g.n, 0);
    std::vector<int> parent(g.n, -1), depth(g.n, 0), order;
    order.reserve(g.n);
    seen[0] = 1;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int u = order[head];
        for (int v : g.adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                color[v] = color[u] == Color::white ? Color::black : Color::white;
                parent[v] = u;
                depth[v] = depth[u] + 1;
                order.push_back(v);
            } else if (color[v] == color[u]) {
                res.bipartite = false;
                res.odd_cycle = odd_cycle_witness(parent, depth, u, v);
                return res;
            }
        }
    }
    if (static_cast<int>(order.size()) != g.n)
        throw std::invalid_argument("two_color requires a connected graph");
    res.bipartite = true;
    res.coloring.color = std::move(color);
    return res;
}

}  // namespace diamond
