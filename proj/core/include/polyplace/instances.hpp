#pragma once

#include <cstdint>
#include <random>

#include "polyplace/geometry.hpp"

namespace polyplace {

struct RandomPolygonParams {
    std::size_t max_vertices = 20;
    std::int64_t lo = -50;
    std::int64_t hi = 50;
    std::size_t grid = 5;  // cells per side of the growth grid
};

// Random simple orthogonal polygon: a hole-free, pinch-free set of grid cells
// grown from a seed cell, traced along its boundary, with the grid lines
// mapped to random strictly increasing integer coordinates in [lo, hi].
OrthoPolygon random_orthogonal_polygon(std::mt19937_64& rng, const RandomPolygonParams& params = {});

// Corridor between two copies of a random staircase, vertical thickness
// `thickness`, horizontal runs drawn from [1, max_run]; has 4 * steps
// vertices.
OrthoPolygon staircase_corridor(std::mt19937_64& rng, std::size_t steps, std::int64_t thickness = 3,
                                std::int64_t max_run = 3);

}  // namespace polyplace
