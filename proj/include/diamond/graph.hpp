#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diamond {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Finite simple undirected graph, vertices 0..n-1. Edges are stored
// normalized (u < v) with no self-loops and no duplicates; adjacency lists
// are derived from the edge list and kept symmetric.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    // Validates indices, rejects self-loops and duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Edge-list text format: each non-blank line holds two vertex indices,
// lines whose first non-blank character is '#' are comments, and an
// optional first line "n <count>" pins the vertex count (for trailing
// isolated vertices). Duplicate edge lines collapse; self-loops are
// rejected with the offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

// Sentinel distance for unreachable vertex pairs.
inline constexpr int kUnreachable = -1;

std::vector<int> bfs_distances(const Graph& g, int source);

struct DistanceMatrix {
    int n = 0;
    std::vector<int> cells;  // row-major, kUnreachable where no path exists

    int operator()(int u, int v) const {
        return cells[static_cast<std::size_t>(u) * n + v];
    }
};

DistanceMatrix all_pairs_distances(const Graph& g);

// True iff every vertex is reachable from vertex 0 (vacuously true for n <= 1).
bool check_connected(const Graph& g);

enum class Color : std::uint8_t { white = 0, black = 1 };

struct TwoColoring {
    std::vector<Color> color;

    bool is_white(int v) const { return color[v] == Color::white; }
    TwoColoring flipped() const;
};

struct TwoColorResult {
    bool bipartite = false;
    TwoColoring coloring;        // valid iff bipartite; vertex 0 is white
    std::vector<int> odd_cycle;  // closed odd walk, consecutive vertices adjacent
};

// Proper 2-coloring with vertex 0 white, or an odd-cycle witness.
// Requires a connected graph.
TwoColorResult two_color(const Graph& g);

}  // namespace diamond
