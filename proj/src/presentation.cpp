#include "gdq/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gdq {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("invalid presentation: " + msg);
}

}  // namespace

Presentation Presentation::create(Quiver q,
                                  std::vector<std::vector<FCycleToken>> f_cycles,
                                  const std::map<std::string, int>& arrow_weights,
                                  const std::map<std::string, Scalar>& border,
                                  Field field) {
  Presentation p;
  p.q_ = std::move(q);
  p.field_ = field;
  const Quiver& Q = p.q_;

  if (Q.vertex_count() < 2) fail("at least 2 vertices required");
  if (!Q.connected()) fail("quiver is not connected");

  p.one_vertex_out_.assign(Q.vertex_count(), -1);
  for (int v = 0; v < Q.vertex_count(); ++v) {
    size_t outd = Q.out_arrows(v).size(), ind = Q.in_arrows(v).size();
    if (outd != ind || outd < 1 || outd > 2)
      fail("vertex " + Q.vertex_id(v) + " has valence out " + std::to_string(outd) +
           " / in " + std::to_string(ind) + ", expected equal 1 or 2");
    if (outd == 1) {
      p.one_vertex_out_[v] = Q.out_arrows(v)[0];
      p.one_vertices_.push_back(v);
    }
  }

  // resolve cycle tokens; arrows take precedence over vertex ids
  p.f_arrow_.assign(Q.arrow_count(), FTarget{});
  std::vector<bool> arrow_seen(Q.arrow_count(), false);
  std::vector<bool> vertex_seen(Q.vertex_count(), false);
  struct Item {
    bool is_vertex;
    int index;
  };
  for (const auto& cyc : f_cycles) {
    if (cyc.empty()) fail("empty f-cycle");
    if (cyc.size() > 3)
      fail("f-cycle of length " + std::to_string(cyc.size()) + ", at most 3 allowed");
    std::vector<Item> items;
    bool has_vertex = false;
    for (const auto& tok : cyc) {
      if (!tok.is_vertex) {
        auto a = Q.arrow_index(tok.id);
        if (a) {
          if (arrow_seen[*a]) fail("arrow '" + tok.id + "' appears twice in f");
          arrow_seen[*a] = true;
          items.push_back({false, *a});
          continue;
        }
      }
      auto v = Q.vertex_index(tok.id);
      if (!v) fail("unknown f-cycle token '" + tok.id + "'");
      if (p.one_vertex_out_[*v] < 0)
        fail("vertex '" + tok.id + "' in an f-cycle is not a 1-vertex");
      if (vertex_seen[*v]) fail("vertex '" + tok.id + "' appears twice in f");
      vertex_seen[*v] = true;
      has_vertex = true;
      items.push_back({true, *v});
    }
    if (has_vertex && items.size() != 3)
      fail("an f-cycle through a 1-vertex must have length 3");
    for (size_t i = 0; i < items.size(); ++i) {
      const Item& x = items[i];
      const Item& y = items[(i + 1) % items.size()];
      if (x.is_vertex) {
        if (y.is_vertex) fail("two consecutive vertices in an f-cycle");
        if (Q.src(y.index) != x.index)
          fail("f(" + Q.vertex_id(x.index) + ") must be its outgoing arrow, got '" +
               Q.arrow_id(y.index) + "'");
        continue;  // the vertex's successor is implied by one_vertex_out_
      }
      if (y.is_vertex) {
        if (Q.dst(x.index) != y.index)
          fail("f(" + Q.arrow_id(x.index) + ") = vertex '" + Q.vertex_id(y.index) +
               "' but the arrow does not end there");
        p.f_arrow_[x.index] = FTarget{FTarget::kVertex, y.index};
      } else {
        if (Q.src(y.index) != Q.dst(x.index))
          fail("s(f(" + Q.arrow_id(x.index) + ")) != t(" + Q.arrow_id(x.index) + ")");
        p.f_arrow_[x.index] = FTarget{FTarget::kArrow, y.index};
      }
    }
  }
  for (int a = 0; a < Q.arrow_count(); ++a)
    if (!arrow_seen[a]) fail("arrow '" + Q.arrow_id(a) + "' missing from f");
  for (int v : p.one_vertices_)
    if (!vertex_seen[v]) fail("1-vertex '" + Q.vertex_id(v) + "' missing from f");

  // structural consequence: an arrow ending at a 1-vertex must have f = that
  // vertex (its kernel is the simple there)
  for (int a = 0; a < Q.arrow_count(); ++a) {
    int t = Q.dst(a);
    if (p.one_vertex_out_[t] >= 0 &&
        !(p.f_arrow_[a].kind == FTarget::kVertex && p.f_arrow_[a].index == t))
      fail("arrow '" + Q.arrow_id(a) + "' ends at 1-vertex '" + Q.vertex_id(t) +
           "' so its f-value must be that vertex");
  }

  // g: at a 1-vertex target the unique outgoing arrow, otherwise the other
  // arrow out of the target than f'(a)
  p.g_.assign(Q.arrow_count(), -1);
  for (int a = 0; a < Q.arrow_count(); ++a) {
    int t = Q.dst(a);
    if (p.one_vertex_out_[t] >= 0) {
      p.g_[a] = p.one_vertex_out_[t];
    } else {
      const auto& out = Q.out_arrows(t);
      p.g_[a] = out[0] == p.f_arrow_[a].index ? out[1] : out[0];
    }
  }

  p.orbit_of_.assign(Q.arrow_count(), -1);
  p.pos_in_orbit_.assign(Q.arrow_count(), -1);
  for (int a = 0; a < Q.arrow_count(); ++a) {
    if (p.orbit_of_[a] >= 0) continue;
    std::vector<int> orbit;
    int x = a;
    do {
      p.orbit_of_[x] = static_cast<int>(p.orbits_.size());
      p.pos_in_orbit_[x] = static_cast<int>(orbit.size());
      orbit.push_back(x);
      x = p.g_[x];
    } while (x != a);
    p.orbits_.push_back(std::move(orbit));
  }

  // weights: consistent on orbits, present for every orbit, positive
  for (const auto& [id, w] : arrow_weights)
    if (!Q.arrow_index(id)) fail("weight given for unknown arrow '" + id + "'");
  p.weights_.assign(p.orbits_.size(), 0);
  for (size_t o = 0; o < p.orbits_.size(); ++o) {
    for (int a : p.orbits_[o]) {
      auto it = arrow_weights.find(Q.arrow_id(a));
      if (it == arrow_weights.end()) continue;
      if (it->second <= 0)
        fail("weight of arrow '" + Q.arrow_id(a) + "' must be positive, got " +
             std::to_string(it->second));
      if (p.weights_[o] != 0 && p.weights_[o] != it->second)
        fail("conflicting weights on the g-orbit of '" + Q.arrow_id(p.orbits_[o][0]) + "'");
      p.weights_[o] = it->second;
    }
    if (p.weights_[o] == 0)
      fail("weight missing for the g-orbit of '" + Q.arrow_id(p.orbits_[o][0]) + "'");
  }

  // border: exactly at sources of f'-fixed loops, default 0
  std::set<int> border_vs;
  for (int a = 0; a < Q.arrow_count(); ++a)
    if (p.is_border_loop(a)) {
      if (!Q.is_loop(a)) fail("f-fixed arrow '" + Q.arrow_id(a) + "' is not a loop");
      border_vs.insert(Q.src(a));
    }
  for (int v : border_vs) p.border_[v] = Scalar{0, 1};
  for (const auto& [id, val] : border) {
    auto v = Q.vertex_index(id);
    if (!v) fail("border scalar for unknown vertex '" + id + "'");
    if (!border_vs.count(*v))
      fail("border scalar at non-border vertex '" + id + "'");
    p.border_[*v] = make_scalar(field, val.num, val.den);
  }
  return p;
}

std::vector<int> Presentation::border_vertices() const {
  std::vector<int> out;
  for (const auto& [v, b] : border_) out.push_back(v);
  return out;
}

Scalar Presentation::border_value(int vertex) const {
  auto it = border_.find(vertex);
  return it == border_.end() ? Scalar{0, 1} : it->second;
}

bool Presentation::has_deformation() const {
  for (const auto& [v, b] : border_)
    if (!b.is_zero()) return true;
  return false;
}

std::vector<std::vector<FCycleToken>> Presentation::f_cycles() const {
  // walk the permutation on arrows + 1-vertices
  int A = q_.arrow_count();
  auto next = [&](const FCycleToken& t) -> FCycleToken {
    if (t.is_vertex) {
      int a = one_vertex_out_[*q_.vertex_index(t.id)];
      return {false, q_.arrow_id(a)};
    }
    FTarget ft = f_arrow_[*q_.arrow_index(t.id)];
    if (ft.is_arrow()) return {false, q_.arrow_id(ft.index)};
    return {true, q_.vertex_id(ft.index)};
  };
  (void)A;
  std::set<std::string> done_arrows;
  std::vector<std::vector<FCycleToken>> cycles;
  for (int a = 0; a < q_.arrow_count(); ++a) {
    if (done_arrows.count(q_.arrow_id(a))) continue;
    std::vector<FCycleToken> cyc;
    FCycleToken start{false, q_.arrow_id(a)};
    FCycleToken cur = start;
    do {
      if (!cur.is_vertex) done_arrows.insert(cur.id);
      cyc.push_back(cur);
      cur = next(cur);
    } while (!(cur == start));
    // rotate to the least arrow id
    size_t best = 0;
    for (size_t i = 1; i < cyc.size(); ++i)
      if (!cyc[i].is_vertex && (cyc[best].is_vertex || cyc[i].id < cyc[best].id)) best = i;
    std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a[0].id < b[0].id; });
  return cycles;
}

std::vector<int> Presentation::cycle_b(int arrow) const {
  const auto& orbit = orbits_[orbit_of_[arrow]];
  int n = static_cast<int>(orbit.size());
  int m = weights_[orbit_of_[arrow]];
  std::vector<int> seq;
  seq.reserve(static_cast<size_t>(n) * m);
  int start = pos_in_orbit_[arrow];
  for (int k = 0; k < n * m; ++k) seq.push_back(orbit[(start + k) % n]);
  return seq;
}

std::vector<int> Presentation::cycle_a(int arrow) const {
  std::vector<int> seq = cycle_b(arrow);
  seq.pop_back();
  return seq;
}

bool Presentation::operator==(const Presentation& o) const {
  return q_ == o.q_ && field_ == o.field_ && f_arrow_ == o.f_arrow_ &&
         weights_ == o.weights_ && border_ == o.border_;
}

Presentation build_presentation(const TriangulationQuiver& tq,
                                const std::map<std::string, int>& arrow_weights,
                                const std::map<std::string, Scalar>& border,
                                Field field) {
  std::vector<std::vector<FCycleToken>> cycles;
  for (const auto& cyc : tq.f_cycles()) {
    std::vector<FCycleToken> toks;
    for (int a : cyc) toks.push_back({false, tq.quiver().arrow_id(a)});
    cycles.push_back(std::move(toks));
  }
  return Presentation::create(tq.quiver(), std::move(cycles), arrow_weights, border, field);
}

Presentation build_presentation(const TriangulationQuiver& tq,
                                const std::vector<int>& orbit_weights,
                                const std::map<int, Scalar>& border_by_vertex,
                                Field field) {
  OrbitData od = compute_orbit_data(tq);
  if (orbit_weights.size() != od.orbits.size())
    throw std::invalid_argument("expected " + std::to_string(od.orbits.size()) +
                                " orbit weights, got " + std::to_string(orbit_weights.size()));
  std::map<std::string, int> by_arrow;
  for (size_t o = 0; o < od.orbits.size(); ++o)
    by_arrow[tq.quiver().arrow_id(od.orbits[o][0])] = orbit_weights[o];
  std::map<std::string, Scalar> border;
  for (const auto& [v, b] : border_by_vertex) border[tq.quiver().vertex_id(v)] = b;
  return build_presentation(tq, by_arrow, border, field);
}

Quiver gabriel_quiver(const Presentation& p) {
  const Quiver& q = p.quiver();
  std::vector<std::string> vertices;
  for (int v = 0; v < q.vertex_count(); ++v) vertices.push_back(q.vertex_id(v));
  std::vector<std::array<std::string, 3>> arrows;
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (p.orbit_length(a) == 1 && p.weight(a) == 1) continue;  // B_a = a in rad^2
    arrows.push_back({q.arrow_id(a), q.vertex_id(q.src(a)), q.vertex_id(q.dst(a))});
  }
  return Quiver::make(std::move(vertices), std::move(arrows));
}

long long dimension(const Presentation& p) {
  long long dim = 0;
  for (size_t o = 0; o < p.g_orbits().size(); ++o) {
    long long n = static_cast<long long>(p.g_orbits()[o].size());
    dim += p.orbit_weight(static_cast<int>(o)) * n * n;
  }
  return dim + static_cast<long long>(p.one_vertices().size());
}

}  // namespace gdq
