#pragma once

#include <string>

#include "diamond/certificate.hpp"
#include "diamond/graph.hpp"
#include "diamond/partial_cube.hpp"

namespace diamond {

// A Djokovic-Winkler cut oriented by the 2-coloring: white_side[v] is 1 on
// the semicube holding the white endpoints of the class's spanning edges.
struct OrientedCut {
    int class_id = 0;
    std::vector<std::uint8_t> white_side;

    std::vector<int> white_vertices() const;
};

struct OrientCutsResult {
    bool coherent = false;
    std::vector<OrientedCut> cuts;  // one per class, same order, iff coherent
    Certificate certificate;        // incoherent_cut iff !coherent
};

// Orients every class so its white side holds the white endpoints of the
// spanning edges; fails with an incoherent_cut certificate when two spanning
// edges have white endpoints in different semicubes.
OrientCutsResult orient_cuts(const Graph& g, const std::vector<DwClass>& classes,
                             const TwoColoring& coloring);

// Set inclusion on white sides: below(i, j) iff white(i) is a proper subset
// of white(j). Irreflexive, antisymmetric, transitive.
struct CutPoset {
    int k = 0;
    std::vector<std::uint8_t> below_cells;  // row-major k*k

    bool below(int i, int j) const {
        return below_cells[static_cast<std::size_t>(i) * k + j] != 0;
    }
};

CutPoset cut_poset(const std::vector<OrientedCut>& cuts, int n);

struct ChainDecomposition {
    std::vector<std::vector<int>> chains;  // each chain ascending in poset order
};

struct WidthAndChains {
    int width = 0;
    ChainDecomposition decomposition;
};

// Dilworth width via maximum bipartite matching on the comparability pairs:
// width = k - matching size, and chains are recovered by following matched
// pairs. The decomposition has exactly `width` chains.
WidthAndChains poset_width_and_chains(const CutPoset& p);

// Integer embedding into the d-dimensional generalized diamond graph:
// (d+1)-length coordinate vectors whose entries sum to 0 or 1.
struct DiamondEmbedding {
    int dimension = 0;
    std::vector<std::vector<int>> coords;  // [vertex][coordinate], length dimension+1
};

struct EmbedVerdict {
    bool embeddable = false;
    Certificate certificate;  // first obstruction found iff !embeddable
};

struct NotDiamondEmbeddable : std::runtime_error {
    Certificate certificate;

    explicit NotDiamondEmbeddable(Certificate c)
        : std::runtime_error(std::string("graph is not an isometric diamond subgraph: ") +
                             reason_name(c.reason)),
          certificate(std::move(c)) {}
};

// Everything the pipeline derives from one graph, populated as far as the
// checks get. Downstream fields are meaningful only when embeddable.
struct DiamondAnalysis {
    bool embeddable = false;
    Certificate certificate;
    DistanceMatrix dist;
    TwoColoring coloring;
    std::vector<DwClass> classes;
    HypercubeLabeling labeling;
    std::vector<OrientedCut> cuts;
    CutPoset poset;
    int width = 0;
    ChainDecomposition chains;
};

DiamondAnalysis analyze(const Graph& g);

// Accepts iff g is a connected partial cube whose cuts are all coherent.
// Rejections carry the first obstruction: disconnected, odd_cycle,
// not_partial_cube, or incoherent_cut.
EmbedVerdict is_isometric_diamond_subgraph(const Graph& g);

// Width of the cut poset minus one; 0 for the single-vertex graph.
// Throws NotDiamondEmbeddable (carrying the certificate) otherwise.
int diamond_dimension(const Graph& g);

// One coordinate per class plus a padding coordinate: dimension k embedding
// straight from the coherence proof. Vertex 0 sits at the origin.
DiamondEmbedding embed_direct(const Graph& g);

// Minimum-dimension embedding: one coordinate per chain of an optimal chain
// decomposition, coordinates propagated from vertex 0 by BFS, +1 crossing an
// edge white-to-black and -1 black-to-white.
DiamondEmbedding embed_minimum(const Graph& g);

struct VerifyResult {
    bool ok = false;
    std::string violation;      // empty iff ok
    std::vector<int> vertices;  // offending vertices, empty iff ok
};

// Checks the three embedding invariants and reports the first violation:
// coordinate sums in {0,1}, every edge a unit step in one coordinate, and
// all-pairs L1 distance equal to graph distance.
VerifyResult verify_embedding(const Graph& g, const DiamondEmbedding& e);

// Appends zero coordinates to lift an embedding to a higher dimension.
DiamondEmbedding pad_embedding(const DiamondEmbedding& e, int dimension);

}  // namespace diamond
