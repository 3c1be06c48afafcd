#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gdq {

/// Outcome of a validator: a list of human-readable problems, empty if valid.
struct ValidationReport {
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
  void add(std::string p) { problems.push_back(std::move(p)); }
  std::string describe() const;
};

struct Arrow {
  std::string id;
  int src = -1;
  int dst = -1;
};

/// Finite quiver with string ids.  Vertices and arrows are kept sorted by id,
/// so every index-based traversal is deterministic.
class Quiver {
 public:
  Quiver() = default;

  /// Arrows given as (id, source id, target id).  Throws on duplicate ids or
  /// references to undeclared vertices.
  static Quiver make(std::vector<std::string> vertices,
                     std::vector<std::array<std::string, 3>> arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  const std::string& vertex_id(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::string& arrow_id(int a) const { return arrows_[a].id; }
  int src(int a) const { return arrows_[a].src; }
  int dst(int a) const { return arrows_[a].dst; }
  bool is_loop(int a) const { return arrows_[a].src == arrows_[a].dst; }

  std::optional<int> vertex_index(const std::string& id) const;
  std::optional<int> arrow_index(const std::string& id) const;

  /// Arrow indices with the given source/target, ascending by arrow id.
  const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  const std::vector<int>& in_arrows(int v) const { return in_[v]; }

  bool connected() const;

  /// Same quiver with every arrow reversed (ids preserved).
  Quiver opposite() const;

  bool operator==(const Quiver& o) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
};

/// Validates the triangulation-quiver axioms for a candidate permutation f,
/// given as arrow index -> arrow index.  Every failed condition among
/// {2-regular, f permutation, s(f(a)) = t(a), f^3 = id, >= 2 vertices,
/// connected} becomes a report entry; connectivity is only flagged, see
/// TriangulationQuiver::create.
ValidationReport validate_triangulation_quiver(const Quiver& q,
                                               const std::vector<int>& f);

/// 2-regular quiver with an arrow permutation f such that s(f(a)) = t(a) and
/// f^3 = id.  Immutable after construction.
class TriangulationQuiver {
 public:
  /// Throws std::invalid_argument (with the validation report) unless the
  /// axioms hold.  Disconnected quivers are accepted here and rejected later
  /// by algebra construction.
  static TriangulationQuiver create(Quiver q, std::vector<int> f);

  const Quiver& quiver() const { return q_; }
  int f(int a) const { return f_[a]; }
  const std::vector<int>& f_map() const { return f_; }

  /// Cycles of f, each rotated to start at its least arrow id and sorted by
  /// that leader.
  std::vector<std::vector<int>> f_cycles() const;

  /// Vertices carrying a loop fixed by f.
  std::vector<int> border_vertices() const;

  TriangulationQuiver opposite() const;

  bool operator==(const TriangulationQuiver& o) const {
    return q_ == o.q_ && f_ == o.f_;
  }

 private:
  TriangulationQuiver(Quiver q, std::vector<int> f)
      : q_(std::move(q)), f_(std::move(f)) {}

  Quiver q_;
  std::vector<int> f_;
};

/// The involution bar (other arrow with the same source), g = bar . f, and
/// the g-orbit decomposition.  Orbits are cyclic arrow lists starting at
/// their least arrow id, sorted by leader.
struct OrbitData {
  std::vector<int> bar;
  std::vector<int> g;
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of;      // arrow -> orbit index
  std::vector<int> pos_in_orbit;  // arrow -> position within its orbit

  int orbit_length(int a) const { return static_cast<int>(orbits[orbit_of[a]].size()); }
};

OrbitData compute_orbit_data(const TriangulationQuiver& tq);

/// Counts of f-orbits by length.  A valid triangulation quiver never has
/// 2-cycles (an f-2-cycle would force a fixed non-loop).
struct FOrbitCensus {
  int fixed = 0;
  int two_cycles = 0;
  int three_cycles = 0;
  bool operator==(const FOrbitCensus&) const = default;
};

FOrbitCensus f_orbit_census(const TriangulationQuiver& tq);

/// Writes cycle notation like "(alpha beta gamma) (eps)" for an arrow map.
std::string cycles_to_string(const Quiver& q, const std::vector<int>& f);

}  // namespace gdq
