#pragma once

#include <vector>

namespace diamond {

struct BipartiteMatching {
    int size = 0;
    std::vector<int> match_left;   // right partner of each left node, -1 if free
    std::vector<int> match_right;  // left partner of each right node, -1 if free
};

// Augmenting-path maximum matching. Deterministic: left nodes are processed
// in ascending order and adj lists are scanned as given, so callers that
// supply sorted adjacency get a reproducible matching.
BipartiteMatching max_bipartite_matching(int left, int right,
                                         const std::vector<std::vector<int>>& adj);

}  // namespace diamond
