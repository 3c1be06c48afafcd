#pragma once

#include "gdq/quiver.hpp"

#include <array>
#include <string>
#include <vector>

namespace gdq {

/// Oriented triangle of a triangulation: a cyclic triple of edge ids.
/// A self-folded triangle repeats one edge and is normalized to (a a b).
struct OrientedTriangle {
  std::array<std::string, 3> edges;

  bool self_folded() const { return edges[0] == edges[1]; }
  bool operator==(const OrientedTriangle&) const = default;
};

/// Combinatorial model of a directed triangulated surface: edges plus
/// oriented triangles.  Boundary edges are derived (incidence 1), never
/// declared.
class SurfaceTriangulation {
 public:
  static SurfaceTriangulation make(std::vector<std::string> edges,
                                   std::vector<std::array<std::string, 3>> triangles);

  const std::vector<std::string>& edges() const { return edges_; }
  const std::vector<OrientedTriangle>& triangles() const { return triangles_; }

  /// Edges of incidence 1, sorted.
  std::vector<std::string> boundary() const;

  /// Same surface with every triangle's cyclic orientation reversed.
  SurfaceTriangulation reversed() const;

  bool operator==(const SurfaceTriangulation&) const = default;

 private:
  std::vector<std::string> edges_;
  std::vector<OrientedTriangle> triangles_;
};

/// Reports incidence violations, unknown edge references, < 2 edges.
ValidationReport validate_triangulation(const SurfaceTriangulation& s);

/// The triangulation quiver Q(S,T) of a directed triangulated surface:
/// vertices are the edges; each oriented triangle (a b c) contributes the
/// f-3-cycle a->b->c->a; a self-folded (a a b) contributes the loop at a
/// with the 2-cycle a<->b; each boundary edge a contributes an f-fixed loop.
/// Arrow naming: "t<k>:<a>><b>" for the k-th triangle (1-based), "bd:<a>"
/// for boundary loops.  Throws with the validation report if s is invalid.
TriangulationQuiver quiver_from_surface(const SurfaceTriangulation& s);

/// True iff the f-fixed loops of tq sit exactly on the boundary edges of s.
bool border_consistency(const SurfaceTriangulation& s, const TriangulationQuiver& tq);

}  // namespace gdq
