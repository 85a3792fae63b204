#pragma once

#include <string>

#include "diamond/embed.hpp"
#include "diamond/graph.hpp"

namespace diamond {

struct DrawingConfig {
    double scale = 100.0;        // pixels per unit edge length (pre-projection)
    double margin = 20.0;        // pixels
    double vertex_radius = 4.0;  // pixels
};

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

struct UnsupportedDimension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Orthogonal projection of a 3-coordinate vector onto the plane x+y+z = 0,
// expressed in the orthonormal basis (1,-1,0)/sqrt(2), (1,1,-2)/sqrt(6).
// Unit lattice steps project to length sqrt(2/3) at mutual angles of 120
// degrees, which is what renders the hexagonal tiling.
PlanarPoint project_to_plane(const std::vector<int>& v);

// SVG drawing of a dimension-2 embedding: one line per edge then one circle
// per vertex, both in index order, byte-identical for identical inputs.
// Throws UnsupportedDimension unless e.dimension == 2 and
// std::invalid_argument when the embedding fails verification.
std::string emit_svg(const Graph& g, const DiamondEmbedding& e,
                     const DrawingConfig& cfg = {});

}  // namespace diamond
