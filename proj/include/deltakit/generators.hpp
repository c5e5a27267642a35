#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "deltakit/binary_matroid.hpp"
#include "deltakit/ribbon.hpp"
#include "deltakit/setsystem.hpp"

namespace deltakit {

using Rng = std::mt19937_64;

/// Independent stream for trial `trial` of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

int uniform_int(Rng& rng, int lo, int hi);
ElemSet random_subset(Rng& rng, ElemSet of);

/// Random rotation system: each edge end goes to a uniformly chosen vertex, cyclic
/// orders are shuffled, and every edge is twisted with probability 1/2 when allowed.
RotationSystem random_rotation_system(Rng& rng, int vertices, int edges, bool twists = true);
/// 1..max_vertices vertices and 1..max_edges edges.
RibbonGraph random_ribbon_graph(Rng& rng, int max_vertices, int max_edges, bool twists = true);
/// A plane graph: random rotation systems are resampled until the genus is zero.
RibbonGraph random_plane_graph(Rng& rng, int max_vertices, int max_edges);

Gf2Matrix random_matrix(Rng& rng, int rows, int cols);
/// Random twisted-duality word with `steps` steps over subsets of `all`.
std::vector<WordStep> random_word(Rng& rng, ElemSet all, int steps);

/// A vf-safe delta-matroid with at most max_elements elements: a random twisted
/// dual of either a ribbon-graphic or a binary delta-matroid.
DeltaMatroid random_vf_safe(Rng& rng, int max_elements);
/// A binary matroid on 1..max_elements elements.
Matroid random_binary_matroid(Rng& rng, int max_elements);

/// Every delta-matroid on exactly n elements labelled a, b, c, ... (n <= 4).
std::vector<DeltaMatroid> all_delta_matroids(int n);

/// The 20-set delta-matroid on 1..8 used as golden data.
DeltaMatroid fig1_delta_matroid();

}  // namespace deltakit
