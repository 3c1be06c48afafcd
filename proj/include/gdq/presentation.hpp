#pragma once

#include "gdq/quiver.hpp"
#include "gdq/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace gdq {

/// Value of the permutation f' on an arrow: another arrow, or a 1-vertex
/// (in which case the syzygy of the arrow module is the simple there).
struct FTarget {
  enum Kind { kArrow, kVertex };
  Kind kind = kArrow;
  int index = -1;

  bool is_arrow() const { return kind == kArrow; }
  bool operator==(const FTarget&) const = default;
};

/// Token in the cycle notation of f': either an arrow id or a 1-vertex id.
struct FCycleToken {
  bool is_vertex = false;
  std::string id;
  bool operator==(const FCycleToken&) const = default;
};

/// Generalized presentation covering weighted triangulation algebras, their
/// socle deformations and disk contractions: a quiver whose vertices have
/// equal in- and out-valence 1 or 2, a permutation f' of arrows and
/// 1-vertices with cycles of length <= 3, a positive weight per g'-orbit,
/// and a border scalar per f'-fixed loop.  Immutable after construction.
class Presentation {
 public:
  /// Full validation; throws std::invalid_argument describing the first
  /// group of problems found.  Every 1-vertex must appear in exactly one
  /// f'-cycle, which then has length exactly 3.
  static Presentation create(Quiver q, std::vector<std::vector<FCycleToken>> f_cycles,
                             const std::map<std::string, int>& arrow_weights,
                             const std::map<std::string, Scalar>& border,
                             Field field);

  const Quiver& quiver() const { return q_; }
  const Field& field() const { return field_; }

  FTarget f(int arrow) const { return f_arrow_[arrow]; }
  bool is_border_loop(int arrow) const {
    return f_arrow_[arrow].is_arrow() && f_arrow_[arrow].index == arrow;
  }

  bool is_one_vertex(int v) const { return one_vertex_out_[v] >= 0; }
  const std::vector<int>& one_vertices() const { return one_vertices_; }
  /// f'(i) for a 1-vertex: its unique outgoing arrow.
  int one_vertex_out(int v) const { return one_vertex_out_[v]; }

  int g(int arrow) const { return g_[arrow]; }
  const std::vector<std::vector<int>>& g_orbits() const { return orbits_; }
  int orbit_of(int arrow) const { return orbit_of_[arrow]; }
  int pos_in_orbit(int arrow) const { return pos_in_orbit_[arrow]; }
  int orbit_length(int arrow) const {
    return static_cast<int>(orbits_[orbit_of_[arrow]].size());
  }
  int orbit_weight(int orbit) const { return weights_[orbit]; }
  int weight(int arrow) const { return weights_[orbit_of_[arrow]]; }
  /// Length m_a * n_a of the cycle B_a.
  int cycle_length(int arrow) const { return weight(arrow) * orbit_length(arrow); }
  /// Arrow at position k (0-based) of B_a, i.e. g^k(a).
  int cycle_arrow_at(int arrow, int k) const {
    const auto& orbit = orbits_[orbit_of_[arrow]];
    return orbit[(pos_in_orbit_[arrow] + k) % orbit.size()];
  }

  std::vector<int> border_vertices() const;
  /// b at a border vertex; zero scalar when undeformed.
  Scalar border_value(int vertex) const;
  bool has_deformation() const;

  /// f'-cycles over arrows and 1-vertices, each rotated to its least arrow
  /// id and sorted by leader.
  std::vector<std::vector<FCycleToken>> f_cycles() const;

  /// Arrow sequence of B_a = (a g(a) ... g^{n-1}(a))^m.
  std::vector<int> cycle_b(int arrow) const;
  /// Arrow sequence of A_a (B_a with its last arrow stripped); empty when
  /// m_a n_a = 1.
  std::vector<int> cycle_a(int arrow) const;

  bool operator==(const Presentation& o) const;

 private:
  Quiver q_;
  Field field_;
  std::vector<FTarget> f_arrow_;
  std::vector<int> one_vertex_out_;  // per vertex, -1 if 2-vertex
  std::vector<int> one_vertices_;
  std::vector<int> g_;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_of_, pos_in_orbit_;
  std::vector<int> weights_;          // per orbit
  std::map<int, Scalar> border_;      // border vertex -> b (zero entries kept)
};

/// The weighted triangulation algebra B(Q,f,m,b): relations a f(a) = 0 for
/// non-border-loop arrows, a^2 = b_{s(a)} B_a for border loops, B_a = B_abar.
/// Weights are given per arrow id and must be consistent on g-orbits and
/// present for every orbit; border scalars only at border vertices.
Presentation build_presentation(const TriangulationQuiver& tq,
                                const std::map<std::string, int>& arrow_weights,
                                const std::map<std::string, Scalar>& border = {},
                                Field field = Field());

/// Same, with weights indexed by g-orbit (order of compute_orbit_data) and
/// border scalars by vertex index.
Presentation build_presentation(const TriangulationQuiver& tq,
                                const std::vector<int>& orbit_weights,
                                const std::map<int, Scalar>& border_by_vertex = {},
                                Field field = Field());

/// Quiver of the basic algebra: the presentation quiver minus every
/// g'-fixed loop of weight 1 (such a loop lies in the radical square).
Quiver gabriel_quiver(const Presentation& p);

/// dim_K of the algebra: sum of m_O n_O^2 over g'-orbits, plus one for each
/// 1-vertex (the extra identity of a uniserial projective).
long long dimension(const Presentation& p);

}  // namespace gdq
