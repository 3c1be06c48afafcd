#pragma once

#include "gdq/quiver.hpp"

#include <random>
#include <vector>

namespace gdq {

/// All connected triangulation quivers with 2..max_vertices vertices, up to
/// isomorphism, canonically relabeled (vertices "1".."n", arrows "a01"..) and
/// deterministically ordered.  max_vertices must lie in [2, 6]; beyond that a
/// "search budget" error is thrown.
std::vector<TriangulationQuiver> enumerate_triangulation_quivers(int max_vertices);

struct RandomQuiverOptions {
  /// Chance (out of 100) that a free slot becomes a boundary loop.
  int boundary_percent = 25;
  /// Force the result to contain at least one 2-triangle disk.
  bool require_disk = false;
};

/// Random connected triangulation quiver with exactly n vertices, built from
/// a random triangle/boundary structure.  Deterministic given the generator
/// state.
TriangulationQuiver random_triangulation_quiver(int n, std::mt19937_64& rng,
                                                const RandomQuiverOptions& opts = {});

}  // namespace gdq
