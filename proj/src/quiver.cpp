#include "gdq/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gdq {

std::string ValidationReport::describe() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (size_t i = 0; i < problems.size(); ++i) {
    if (i) os << "; ";
    os << problems[i];
  }
  return os.str();
}

Quiver Quiver::make(std::vector<std::string> vertices,
                    std::vector<std::array<std::string, 3>> arrows) {
  Quiver q;
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("duplicate vertex id");
  q.vertices_ = std::move(vertices);

  std::map<std::string, int> vidx;
  for (int i = 0; i < q.vertex_count(); ++i) vidx[q.vertices_[i]] = i;

  std::sort(arrows.begin(), arrows.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  std::set<std::string> seen;
  for (const auto& [id, s, t] : arrows) {
    if (!seen.insert(id).second)
      throw std::invalid_argument("duplicate arrow id '" + id + "'");
    auto si = vidx.find(s), ti = vidx.find(t);
    if (si == vidx.end())
      throw std::invalid_argument("arrow '" + id + "' has undeclared source '" + s + "'");
    if (ti == vidx.end())
      throw std::invalid_argument("arrow '" + id + "' has undeclared target '" + t + "'");
    q.arrows_.push_back(Arrow{id, si->second, ti->second});
  }

  q.out_.assign(q.vertex_count(), {});
  q.in_.assign(q.vertex_count(), {});
  for (int a = 0; a < q.arrow_count(); ++a) {
    q.out_[q.arrows_[a].src].push_back(a);
    q.in_[q.arrows_[a].dst].push_back(a);
  }
  return q;
}

std::optional<int> Quiver::vertex_index(const std::string& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it != vertices_.end() && *it == id)
    return static_cast<int>(it - vertices_.begin());
  return std::nullopt;
}

std::optional<int> Quiver::arrow_index(const std::string& id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, const std::string& s) { return a.id < s; });
  if (it != arrows_.end() && it->id == id)
    return static_cast<int>(it - arrows_.begin());
  return std::nullopt;
}

bool Quiver::connected() const {
  if (vertex_count() == 0) return false;
  std::vector<bool> seen(vertex_count(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto visit = [&](int w) {
      if (!seen[w]) { seen[w] = true; stack.push_back(w); }
    };
    for (int a : out_[v]) visit(arrows_[a].dst);
    for (int a : in_[v]) visit(arrows_[a].src);
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Quiver Quiver::opposite() const {
  std::vector<std::array<std::string, 3>> arrows;
  for (const Arrow& a : arrows_)
    arrows.push_back({a.id, vertices_[a.dst], vertices_[a.src]});
  return make(vertices_, std::move(arrows));
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertices_ != o.vertices_) return false;
  if (arrows_.size() != o.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id != o.arrows_[i].id || arrows_[i].src != o.arrows_[i].src ||
        arrows_[i].dst != o.arrows_[i].dst)
      return false;
  return true;
}

namespace {

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& f) {
  int n = static_cast<int>(f.size());
  std::vector<bool> done(n, false);
  std::vector<std::vector<int>> cycles;
  for (int a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::vector<int> cyc;
    int x = a;
    while (!done[x]) {
      done[x] = true;
      cyc.push_back(x);
      x = f[x];
      if (x < 0 || x >= n) break;  // not a permutation; caller checks
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

bool is_permutation(const std::vector<int>& f, int n) {
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : f) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

ValidationReport validate_triangulation_quiver(const Quiver& q,
                                               const std::vector<int>& f) {
  ValidationReport rep;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (static_cast<int>(q.out_arrows(v).size()) != 2)
      rep.add("vertex " + q.vertex_id(v) + " has out-degree " +
              std::to_string(q.out_arrows(v).size()) + ", expected 2");
    if (static_cast<int>(q.in_arrows(v).size()) != 2)
      rep.add("vertex " + q.vertex_id(v) + " has in-degree " +
              std::to_string(q.in_arrows(v).size()) + ", expected 2");
  }

  if (!is_permutation(f, q.arrow_count())) {
    rep.add("f is not a permutation of the arrows");
    if (q.vertex_count() < 2)
      rep.add("quiver has " + std::to_string(q.vertex_count()) +
              " vertex/vertices, at least 2 required");
    return rep;  // the remaining f conditions are meaningless
  }

  for (int a = 0; a < q.arrow_count(); ++a)
    if (q.src(f[a]) != q.dst(a))
      rep.add("s(f(" + q.arrow_id(a) + ")) = " + q.vertex_id(q.src(f[a])) +
              " differs from t(" + q.arrow_id(a) + ") = " + q.vertex_id(q.dst(a)));

  for (const auto& cyc : permutation_cycles(f)) {
    if (cyc.size() != 1 && cyc.size() != 3) {
      std::string names;
      for (int a : cyc) names += (names.empty() ? "" : " ") + q.arrow_id(a);
      rep.add("f^3 is not the identity: cycle (" + names + ") has length " +
              std::to_string(cyc.size()));
    }
  }

  if (q.vertex_count() < 2)
    rep.add("quiver has " + std::to_string(q.vertex_count()) +
            " vertex/vertices, at least 2 required");
  if (q.vertex_count() > 0 && !q.connected())
    rep.add("quiver is not connected");
  return rep;
}

TriangulationQuiver TriangulationQuiver::create(Quiver q, std::vector<int> f) {
  ValidationReport rep = validate_triangulation_quiver(q, f);
  // connectivity is a flag, not a construction failure
  std::erase_if(rep.problems,
                [](const std::string& p) { return p == "quiver is not connected"; });
  if (!rep.ok())
    throw std::invalid_argument("not a triangulation quiver: " + rep.describe());
  return TriangulationQuiver(std::move(q), std::move(f));
}

std::vector<std::vector<int>> TriangulationQuiver::f_cycles() const {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> done(f_.size(), false);
  for (int a = 0; a < static_cast<int>(f_.size()); ++a) {
    if (done[a]) continue;
    std::vector<int> cyc;
    int x = a;
    do {
      done[x] = true;
      cyc.push_back(x);
      x = f_[x];
    } while (x != a);
    cycles.push_back(std::move(cyc));
  }
  return cycles;  // leaders ascend because outer loop scans ascending ids
}

std::vector<int> TriangulationQuiver::border_vertices() const {
  std::vector<int> out;
  for (int a = 0; a < q_.arrow_count(); ++a)
    if (f_[a] == a) out.push_back(q_.src(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TriangulationQuiver TriangulationQuiver::opposite() const {
  Quiver op = q_.opposite();
  // arrow ids are preserved, so indices survive; f_op = f^{-1} on the
  // reversed arrows keeps s(f(a)) = t(a)
  std::vector<int> finv(f_.size());
  for (int a = 0; a < static_cast<int>(f_.size()); ++a) finv[f_[a]] = a;
  return create(std::move(op), std::move(finv));
}

OrbitData compute_orbit_data(const TriangulationQuiver& tq) {
  const Quiver& q = tq.quiver();
  OrbitData od;
  od.bar.assign(q.arrow_count(), -1);
  for (int v = 0; v < q.vertex_count(); ++v) {
    const auto& out = q.out_arrows(v);
    od.bar[out[0]] = out[1];
    od.bar[out[1]] = out[0];
  }
  od.g.resize(q.arrow_count());
  for (int a = 0; a < q.arrow_count(); ++a) od.g[a] = od.bar[tq.f(a)];

  od.orbit_of.assign(q.arrow_count(), -1);
  od.pos_in_orbit.assign(q.arrow_count(), -1);
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (od.orbit_of[a] >= 0) continue;
    std::vector<int> orbit;
    int x = a;
    do {
      od.orbit_of[x] = static_cast<int>(od.orbits.size());
      od.pos_in_orbit[x] = static_cast<int>(orbit.size());
      orbit.push_back(x);
      x = od.g[x];
    } while (x != a);
    od.orbits.push_back(std::move(orbit));
  }
  return od;
}

FOrbitCensus f_orbit_census(const TriangulationQuiver& tq) {
  FOrbitCensus c;
  for (const auto& cyc : tq.f_cycles()) {
    if (cyc.size() == 1) ++c.fixed;
    else if (cyc.size() == 2) ++c.two_cycles;
    else if (cyc.size() == 3) ++c.three_cycles;
  }
  return c;
}

std::string cycles_to_string(const Quiver& q, const std::vector<int>& f) {
  std::ostringstream os;
  bool first_cycle = true;
  for (const auto& cyc : permutation_cycles(f)) {
    if (!first_cycle) os << " ";
    first_cycle = false;
    os << "(";
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << " ";
      os << q.arrow_id(cyc[i]);
    }
    os << ")";
  }
  return os.str();
}

}  // namespace gdq
