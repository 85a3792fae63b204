#pragma once

#include "diamond/certificate.hpp"
#include "diamond/graph.hpp"

namespace diamond {

// One Djokovic-Winkler equivalence class: the edge set it contains plus the
// two semicubes obtained by deleting those edges. side[v] is 0 on semicube A
// and 1 on semicube B. For a genuine partial cube the deletion leaves exactly
// two components (components == 2) and every class edge spans them; when the
// relation is not transitive a merged pseudo-class may split the graph into
// more pieces, in which case semicube B collects everything outside A and the
// labeling built from it fails the isometry sweep downstream.
struct DwClass {
    int id = 0;
    std::vector<int> edges;              // indices into Graph::edges, ascending
    std::vector<std::uint8_t> side;      // per vertex: 0 -> semicube A, 1 -> semicube B
    int components = 0;                  // component count after deleting the class

    std::vector<int> semicube_a() const;
    std::vector<int> semicube_b() const;
};

// The relation of edges e = (p,q), f = (r,s):
//   d(p,r) + d(p,s) == d(q,r) + d(q,s)
// On connected bipartite graphs this is reflexive and symmetric, and holds
// independently of the endpoint order chosen for either edge.
bool dw_related(const Graph& g, int e, int f, const DistanceMatrix& dm);

// Connected components of the relation graph on edges, listed in ascending
// order of their minimum edge index. Requires a connected bipartite graph
// with n >= 2; transitivity of the relation is not assumed here and is
// certified downstream by is_partial_cube.
std::vector<DwClass> compute_dw_classes(const Graph& g, const DistanceMatrix& dm);

struct HypercubeLabeling {
    int bits_per_vertex = 0;
    std::vector<std::vector<std::uint8_t>> bits;  // [vertex][class]

    int hamming(int u, int v) const;
};

// Bit i of vertex w is 0 iff w lies in the same semicube of class i as base.
HypercubeLabeling hypercube_label(const Graph& g, const std::vector<DwClass>& classes,
                                  int base);

struct PartialCubeVerdict {
    bool is_partial_cube = false;
    HypercubeLabeling labeling;    // valid iff is_partial_cube
    std::vector<DwClass> classes;  // candidate classes (present whenever bipartite)
    Certificate certificate;       // set iff !is_partial_cube
};

// Builds the candidate labeling from the relation-graph classes (base
// vertex 0) and certifies it by checking Hamming distance == graph distance
// on every vertex pair. The sweep is a sound and complete partial-cube test:
// it accepts exactly when the labeling is an isometric hypercube embedding.
// Throws std::invalid_argument for empty or disconnected input.
PartialCubeVerdict is_partial_cube(const Graph& g);

}  // namespace diamond
