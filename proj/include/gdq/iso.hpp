#pragma once

#include "gdq/quiver.hpp"

#include <functional>
#include <map>
#include <optional>

namespace gdq {

/// A vertex-and-arrow bijection commuting with s, t and f.
struct QuiverIsomorphism {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> arrow_map;
};

/// First isomorphism a -> b in canonical search order (vertices tried
/// ascending by id), or nullopt.
std::optional<QuiverIsomorphism> quiver_isomorphic(const TriangulationQuiver& a,
                                                   const TriangulationQuiver& b);

/// Visits every isomorphism a -> b; stop early by returning false.
void for_each_isomorphism(const TriangulationQuiver& a, const TriangulationQuiver& b,
                          const std::function<bool(const QuiverIsomorphism&)>& visit);

/// Canonical relabeling key: equal strings iff the quivers-with-f are
/// isomorphic.  Cost grows with |Q0|!, fine at desk scale.
std::string canonical_key(const TriangulationQuiver& tq);

/// Canonically relabeled copy: vertices "1".."n", arrows "a01".."a<2n>" in
/// canonical order.  Two isomorphic quivers yield identical values.
TriangulationQuiver canonical_form(const TriangulationQuiver& tq);

}  // namespace gdq
