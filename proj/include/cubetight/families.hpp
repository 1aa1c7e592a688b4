#pragma once

// Standard complexes and random inputs used by tests, benchmarks and the CLI.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cubetight/cubecomplex.hpp"
#include "cubetight/medianrec.hpp"
#include "cubetight/tightspan.hpp"
#include "cubetight/wallsys.hpp"

namespace cubetight {

using Rng = std::mt19937_64;

/// The n-cube; labels are coordinate bit strings ("000" .. "111").
CubeComplex hypercube(std::size_t n);

/// Product of paths with squares[i] edges along axis i; labels "i-j-...".
/// An a x b grid in this sense has (a+1)(b+1) vertices and a+b walls.
CubeComplex grid(const std::vector<std::size_t>& squares);

/// Path on n vertices labelled "0".."n-1".
CubeComplex path(std::size_t n);

/// Tree from a parent array: parent[i] < i for i >= 1, parent[0] ignored.
/// Labels are "0".."n-1".
CubeComplex tree(const std::vector<std::size_t>& parent);
std::vector<std::size_t> random_parents(Rng& rng, std::size_t n);

/// Band {(i,j) in [0,n]^2 : |i-j| <= w} of the n x n grid, w >= 1.
SimpleGraph staircase_graph(std::size_t n, std::size_t w);
CubeComplex staircase(std::size_t n, std::size_t w);

/// Ground of 2..max_points points ("p0".."p7"), up to max_walls distinct walls.
WallSystem random_wall_system(Rng& rng, std::size_t max_points = 8, std::size_t max_walls = 10);

/// Shortest-path metric of a random weighted complete graph on n points;
/// weights are multiples of 1/denominator in [1, max_weight].
FiniteMetric random_metric(Rng& rng, std::size_t n, std::int64_t max_weight = 10, std::int64_t denominator = 2);

/// Uniform integer in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

}  // namespace cubetight
