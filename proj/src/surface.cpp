#include "gdq/surface.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gdq {

namespace {

// Rotate so a repeated edge occupies positions 0,1; otherwise keep the listed
// rotation (the cyclic order is the orientation, rotations are equivalent and
// we canonicalize to the least edge first).
OrientedTriangle normalize(std::array<std::string, 3> e) {
  for (int r = 0; r < 3; ++r) {
    if (e[0] == e[1]) return OrientedTriangle{e};
    std::rotate(e.begin(), e.begin() + 1, e.end());
  }
  int best = 0;
  for (int r = 1; r < 3; ++r) {
    std::array<std::string, 3> cand{e[r % 3], e[(r + 1) % 3], e[(r + 2) % 3]};
    std::array<std::string, 3> cur{e[best % 3], e[(best + 1) % 3], e[(best + 2) % 3]};
    if (cand < cur) best = r;
  }
  return OrientedTriangle{{e[best % 3], e[(best + 1) % 3], e[(best + 2) % 3]}};
}

std::map<std::string, int> incidence_counts(const SurfaceTriangulation& s) {
  std::map<std::string, int> inc;
  for (const auto& e : s.edges()) inc[e] = 0;
  for (const auto& t : s.triangles())
    for (const auto& e : t.edges) {
      auto it = inc.find(e);
      if (it != inc.end()) ++it->second;
    }
  return inc;
}

}  // namespace

SurfaceTriangulation SurfaceTriangulation::make(
    std::vector<std::string> edges,
    std::vector<std::array<std::string, 3>> triangles) {
  SurfaceTriangulation s;
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge id");
  s.edges_ = std::move(edges);
  for (auto& t : triangles) s.triangles_.push_back(normalize(std::move(t)));
  return s;
}

std::vector<std::string> SurfaceTriangulation::boundary() const {
  std::vector<std::string> out;
  for (const auto& [e, c] : incidence_counts(*this))
    if (c == 1) out.push_back(e);
  return out;
}

SurfaceTriangulation SurfaceTriangulation::reversed() const {
  std::vector<std::array<std::string, 3>> tris;
  for (const auto& t : triangles_)
    tris.push_back({t.edges[2], t.edges[1], t.edges[0]});
  return make(edges_, std::move(tris));
}

ValidationReport validate_triangulation(const SurfaceTriangulation& s) {
  ValidationReport rep;
  if (s.edges().size() < 2)
    rep.add("triangulation has " + std::to_string(s.edges().size()) +
            " edge(s), at least 2 required");
  std::map<std::string, int> known;
  for (const auto& e : s.edges()) known[e] = 0;
  for (const auto& t : s.triangles()) {
    if (t.edges[0] == t.edges[1] && t.edges[1] == t.edges[2])
      rep.add("triangle repeats edge '" + t.edges[0] + "' three times");
    for (const auto& e : t.edges)
      if (!known.count(e)) {
        rep.add("triangle references undeclared edge '" + e + "'");
        return rep;
      }
  }
  for (const auto& [e, c] : incidence_counts(s))
    if (c > 2)
      rep.add("edge '" + e + "' has incidence " + std::to_string(c) +
              ", expected 1 or 2");
    else if (c == 0)
      rep.add("edge '" + e + "' lies in no triangle");
  return rep;
}

TriangulationQuiver quiver_from_surface(const SurfaceTriangulation& s) {
  ValidationReport rep = validate_triangulation(s);
  if (!rep.ok())
    throw std::invalid_argument("invalid surface triangulation: " + rep.describe());

  std::vector<std::array<std::string, 3>> arrows;
  std::vector<std::array<std::string, 2>> fpairs;  // (arrow, f(arrow)) by id
  for (size_t k = 0; k < s.triangles().size(); ++k) {
    const auto& e = s.triangles()[k].edges;
    std::string t = "t" + std::to_string(k + 1);
    std::array<std::string, 3> names;
    for (int i = 0; i < 3; ++i) {
      names[i] = t + ":" + e[i] + ">" + e[(i + 1) % 3];
      arrows.push_back({names[i], e[i], e[(i + 1) % 3]});
    }
    for (int i = 0; i < 3; ++i) fpairs.push_back({names[i], names[(i + 1) % 3]});
  }
  for (const auto& b : s.boundary()) {
    arrows.push_back({"bd:" + b, b, b});
    fpairs.push_back({"bd:" + b, "bd:" + b});
  }

  Quiver q = Quiver::make(s.edges(), std::move(arrows));
  std::vector<int> f(q.arrow_count(), -1);
  for (const auto& [a, fa] : fpairs) f[*q.arrow_index(a)] = *q.arrow_index(fa);
  return TriangulationQuiver::create(std::move(q), std::move(f));
}

bool border_consistency(const SurfaceTriangulation& s, const TriangulationQuiver& tq) {
  std::vector<std::string> border;
  for (int v : tq.border_vertices()) border.push_back(tq.quiver().vertex_id(v));
  return border == s.boundary();
}

}  // namespace gdq
