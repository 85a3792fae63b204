#pragma once

#include <optional>
#include <string>

#include "diamond/graph.hpp"

namespace diamond {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite piece of the k-dimensional generalized diamond graph: the integer
// points with coordinate sum 0 or 1 and every coordinate in [-r, r], with
// edges between points at unit L1 distance. The coordinate box is closed
// under geodesics, so the patch is an isometric subgraph of the infinite
// structure and its own coords pass verify_embedding. Vertices are numbered
// in lexicographic vector order.
struct DiamondPatch {
    int k = 0;
    int r = 0;
    Graph graph;
    std::vector<std::vector<int>> coords;  // [vertex][coordinate], length k+1
};

inline constexpr long long kDefaultPatchCap = 1'000'000;

DiamondPatch generate_diamond_patch(int k, int r, long long max_vertices = kDefaultPatchCap);

// Named fixtures: desargues, q3, k23, c4, c6, p_<len>, cycle_<len>.
Graph generate_named(const std::string& name);

struct OraclePlacement {
    bool embeddable = false;
    std::vector<std::vector<int>> coords;  // valid iff embeddable, vectors length k+1
};

inline constexpr long long kDefaultOracleBudget = 50'000'000;

// Independent backtracking oracle: searches for an assignment of diamond
// points (coordinate sum in {0,1}, within L1 radius r of the pinned base
// point) such that every pairwise L1 distance equals the graph distance.
// Vertex 0 is pinned at the origin, with a second attempt at (1,0,...,0) so
// the result does not lean on the target's color symmetry. Intended for
// small graphs (n up to ~10, or larger when distances prune hard).
OraclePlacement brute_force_embeddable(const Graph& g, int k, int r,
                                       long long node_budget = kDefaultOracleBudget);

// Smallest k <= kmax admitting a placement, or nullopt. Monotone in k, so
// the ascending scan is exact.
std::optional<int> brute_force_min_dimension(const Graph& g, int kmax, int r,
                                             long long node_budget = kDefaultOracleBudget);

}  // namespace diamond
