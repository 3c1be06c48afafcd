#include "gdq/enumerate.hpp"

#include "gdq/iso.hpp"
#include "gdq/surface.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gdq {

namespace {

// A structure is a multiset of oriented triangles (cyclic vertex triples,
// self-folded allowed) plus boundary loops, consuming exactly two out-slots
// per vertex.  Every triangulation quiver decomposes this way: f-cycles of
// length 3 are the triangles, fixed arrows the boundary loops.  Elements are
// anchored at their least vertex; when one anchor emits two single-slot
// elements, they are generated in nondecreasing order, so each structure
// appears exactly once.
struct StructureSearch {
  int n;
  std::vector<int> rem;
  std::vector<std::array<int, 3>> triangles;
  int loops_pending = 0;  // boundary loops, positions implied by leftover slots
  std::vector<TriangulationQuiver>* sink;

  // element codes: (-1,-1) = boundary loop, (x,y) = triangle (v x y)
  using Elem = std::pair<int, int>;

  void emit() {
    std::vector<std::string> edges;
    for (int v = 0; v < n; ++v) edges.push_back(std::to_string(v + 1));
    std::vector<std::array<std::string, 3>> tris;
    for (const auto& t : triangles)
      tris.push_back({edges[t[0]], edges[t[1]], edges[t[2]]});
    SurfaceTriangulation s = SurfaceTriangulation::make(edges, tris);
    if (!validate_triangulation(s).ok()) return;  // some vertex got two loops
    TriangulationQuiver tq = quiver_from_surface(s);
    if (!tq.quiver().connected()) return;
    sink->push_back(std::move(tq));
  }

  void for_each_elem(int v, const Elem& at_least, const std::function<void(const Elem&)>& fn) {
    Elem loop{-1, -1};
    if (!(loop < at_least)) fn(loop);
    for (int x = v + 1; x < n; ++x) {
      if (rem[x] < 1) continue;
      for (int y = v + 1; y < n; ++y) {
        if (y == x) {
          if (rem[x] < 2) continue;
        } else if (rem[y] < 1) {
          continue;
        }
        Elem e{x, y};
        if (e < at_least) continue;
        fn(e);
      }
    }
  }

  void search() {
    int v = 0;
    while (v < n && rem[v] == 0) ++v;
    if (v == n) {
      emit();
      return;
    }

    if (rem[v] == 2) {
      // a single element consuming both slots: self-folded (v v w)
      for (int w = v + 1; w < n; ++w) {
        if (rem[w] < 1) continue;
        rem[v] -= 2;
        rem[w] -= 1;
        triangles.push_back({v, v, w});
        search();
        triangles.pop_back();
        rem[v] += 2;
        rem[w] += 1;
      }
      // or an ordered pair of single-slot elements e1 <= e2
      for_each_elem(v, {-2, -2}, [&](const Elem& e1) {
        push(v, e1);
        for_each_elem(v, e1, [&](const Elem& e2) {
          push(v, e2);
          search();
          pop(v, e2);
        });
        pop(v, e1);
      });
    } else {
      for_each_elem(v, {-2, -2}, [&](const Elem& e) {
        push(v, e);
        search();
        pop(v, e);
      });
    }
  }

  void push(int v, const Elem& e) {
    rem[v] -= 1;
    if (e.first >= 0) {
      rem[e.first] -= 1;
      rem[e.second] -= 1;
      triangles.push_back({v, e.first, e.second});
    } else {
      ++loops_pending;
    }
  }

  void pop(int v, const Elem& e) {
    rem[v] += 1;
    if (e.first >= 0) {
      rem[e.first] += 1;
      rem[e.second] += 1;
      triangles.pop_back();
    } else {
      --loops_pending;
    }
  }
};

std::string bucket_key(const TriangulationQuiver& tq) {
  const Quiver& q = tq.quiver();
  OrbitData od = compute_orbit_data(tq);
  std::vector<int> orbit_lengths;
  for (const auto& o : od.orbits) orbit_lengths.push_back(static_cast<int>(o.size()));
  std::sort(orbit_lengths.begin(), orbit_lengths.end());
  FOrbitCensus c = f_orbit_census(tq);

  // one refinement round of vertex colors
  std::vector<int> color(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) {
    int loops = 0, fixed = 0;
    for (int a : q.out_arrows(v)) {
      loops += q.is_loop(a);
      fixed += tq.f(a) == a;
    }
    color[v] = loops * 4 + fixed;
  }
  std::vector<std::string> refined;
  for (int v = 0; v < q.vertex_count(); ++v) {
    std::vector<int> nb;
    for (int a : q.out_arrows(v)) nb.push_back(color[q.dst(a)]);
    for (int a : q.in_arrows(v)) nb.push_back(100 + color[q.src(a)]);
    std::sort(nb.begin(), nb.end());
    std::ostringstream os;
    os << color[v] << ":";
    for (int x : nb) os << x << ",";
    refined.push_back(os.str());
  }
  std::sort(refined.begin(), refined.end());

  std::ostringstream os;
  os << q.vertex_count() << "/" << c.fixed << "." << c.three_cycles << "/";
  for (int l : orbit_lengths) os << l << ",";
  os << "/";
  for (const auto& r : refined) os << r << "|";
  return os.str();
}

}  // namespace

std::vector<TriangulationQuiver> enumerate_triangulation_quivers(int max_vertices) {
  if (max_vertices < 2)
    throw std::invalid_argument(
        "triangulation quivers have at least 2 vertices (got max_vertices = " +
        std::to_string(max_vertices) + ")");
  if (max_vertices > 6)
    throw std::invalid_argument("search budget exceeded: max_vertices is limited to 6, got " +
                                std::to_string(max_vertices));

  std::vector<TriangulationQuiver> classes;
  std::map<std::string, std::vector<int>> buckets;  // key -> indices into classes
  std::vector<TriangulationQuiver> labeled;
  for (int n = 2; n <= max_vertices; ++n) {
    labeled.clear();
    StructureSearch s{n, std::vector<int>(n, 2), {}, 0, &labeled};
    s.search();
    for (auto& tq : labeled) {
      std::string key = bucket_key(tq);
      auto& bucket = buckets[key];
      bool dup = false;
      for (int idx : bucket)
        if (quiver_isomorphic(tq, classes[idx])) {
          dup = true;
          break;
        }
      if (dup) continue;
      bucket.push_back(static_cast<int>(classes.size()));
      classes.push_back(std::move(tq));
    }
  }

  std::vector<std::pair<std::string, int>> keyed;
  for (size_t i = 0; i < classes.size(); ++i)
    keyed.emplace_back(std::to_string(classes[i].quiver().vertex_count()) + "#" +
                           canonical_key(classes[i]),
                       static_cast<int>(i));
  std::sort(keyed.begin(), keyed.end());
  std::vector<TriangulationQuiver> out;
  for (const auto& [key, idx] : keyed) out.push_back(canonical_form(classes[idx]));
  return out;
}

TriangulationQuiver random_triangulation_quiver(int n, std::mt19937_64& rng,
                                                const RandomQuiverOptions& opts) {
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  if (opts.require_disk && n < 4)
    throw std::invalid_argument("a 2-triangle disk needs at least 4 vertices");
  for (int attempt = 0; attempt < 4000; ++attempt) {
    std::vector<int> slots;
    for (int v = 0; v < n; ++v) {
      slots.push_back(v);
      slots.push_back(v);
    }
    std::shuffle(slots.begin(), slots.end(), rng);

    std::vector<std::array<int, 3>> triangles;
    bool bad = false;

    if (opts.require_disk) {
      // seed a disk: triangles (a c d), (d c b) on four distinct vertices
      std::vector<int> verts(n);
      std::iota(verts.begin(), verts.end(), 0);
      std::shuffle(verts.begin(), verts.end(), rng);
      int a = verts[0], b = verts[1], c = verts[2], d = verts[3];
      triangles.push_back({a, c, d});
      triangles.push_back({d, c, b});
      for (int used : {a, b, c, c, d, d}) {
        auto it = std::find(slots.begin(), slots.end(), used);
        slots.erase(it);  // always present: every vertex starts with 2 slots
      }
    }

    while (!slots.empty() && !bad) {
      int v = slots.back();
      slots.pop_back();
      bool loop = static_cast<int>(rng() % 100) < opts.boundary_percent ||
                  slots.size() < 2;
      if (loop) continue;  // boundary loop; derived from leftover incidence
      int x = slots.back();
      slots.pop_back();
      int y = slots.back();
      slots.pop_back();
      if (v == x && x == y) { bad = true; break; }
      triangles.push_back({v, x, y});
    }
    if (bad) continue;

    std::vector<std::string> edges;
    for (int v = 0; v < n; ++v) edges.push_back(std::to_string(v + 1));
    std::vector<std::array<std::string, 3>> tris;
    for (const auto& t : triangles)
      tris.push_back({edges[t[0]], edges[t[1]], edges[t[2]]});
    SurfaceTriangulation s = SurfaceTriangulation::make(edges, tris);
    if (!validate_triangulation(s).ok()) continue;
    TriangulationQuiver tq = quiver_from_surface(s);
    if (!tq.quiver().connected()) continue;
    return tq;
  }
  throw std::runtime_error("random triangulation quiver generation did not converge");
}

}  // namespace gdq
