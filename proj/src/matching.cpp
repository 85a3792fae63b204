#include "diamond/matching.hpp"

#include <stdexcept>

namespace diamond {

namespace {

struct Kuhn {
    const std::vector<std::vector<int>>& adj;
    std::vector<int>& match_left;
    std::vector<int>& match_right;
    std::vector<int> visited;
    int stamp = 0;

    bool augment(int u) {
        for (int v : adj[u]) {
            if (visited[v] == stamp) continue;
            visited[v] = stamp;
            if (match_right[v] == -1 || augment(match_right[v])) {
                match_left[u] = v;
                match_right[v] = u;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

BipartiteMatching max_bipartite_matching(int left, int right,
                                         const std::vector<std::vector<int>>& adj) {
    if (static_cast<int>(adj.size()) != left)
        throw std::invalid_argument("max_bipartite_matching: adjacency size mismatch");
    BipartiteMatching m;
    m.match_left.assign(left, -1);
    m.match_right.assign(right, -1);
    Kuhn k{adj, m.match_left, m.match_right, std::vector<int>(right, -1), 0};
    for (int u = 0; u < left; ++u) {
        k.stamp = u;
        if (k.augment(u)) ++m.size;
    }
    return m;
}

}  // namespace diamond
