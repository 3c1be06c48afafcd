#include "gdq/disks.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace gdq {

namespace {

// f'-cycles of length 3 consisting purely of arrows, as (x, f(x), f^2(x))
std::vector<std::array<int, 3>> arrow_three_cycles(const Presentation& p) {
  std::vector<std::array<int, 3>> out;
  int A = p.quiver().arrow_count();
  std::vector<bool> seen(A, false);
  for (int a = 0; a < A; ++a) {
    if (seen[a]) continue;
    std::vector<int> cyc;
    int x = a;
    bool pure = true;
    do {
      seen[x] = true;
      cyc.push_back(x);
      FTarget t = p.f(x);
      if (!t.is_arrow()) { pure = false; break; }
      x = t.index;
    } while (x != a);
    if (pure && cyc.size() == 3) out.push_back({cyc[0], cyc[1], cyc[2]});
  }
  return out;
}

std::optional<std::pair<std::string, std::string>> parse_via_tag(const std::string& id) {
  if (id.rfind("via(", 0) != 0) return std::nullopt;
  auto close = id.find("):");
  if (close == std::string::npos) return std::nullopt;
  std::string inner = id.substr(4, close - 4);
  auto comma = inner.find(',');
  if (comma == std::string::npos) return std::nullopt;
  std::string c = inner.substr(0, comma), d = inner.substr(comma + 1);
  if (c.empty() || d.empty()) return std::nullopt;
  return std::make_pair(c, d);
}

std::string unique_name(std::set<std::string>& taken, std::string base) {
  while (taken.count(base)) base += "~";
  taken.insert(base);
  return base;
}

void check_disk_in(const Presentation& p, const TwoTriangleDisk& dk) {
  const Quiver& q = p.quiver();
  auto arrow_f = [&](int x) -> int {
    FTarget t = p.f(x);
    return t.is_arrow() ? t.index : -1;
  };
  bool ok = q.src(dk.theta) == dk.a && q.dst(dk.theta) == dk.c &&
            q.src(dk.eps) == dk.c && q.dst(dk.eps) == dk.d &&
            q.src(dk.mu) == dk.d && q.dst(dk.mu) == dk.a &&
            q.src(dk.sigma) == dk.c && q.dst(dk.sigma) == dk.b &&
            q.src(dk.rho) == dk.b && q.dst(dk.rho) == dk.d &&
            q.src(dk.xi) == dk.d && q.dst(dk.xi) == dk.c &&
            arrow_f(dk.theta) == dk.eps && arrow_f(dk.eps) == dk.mu &&
            arrow_f(dk.mu) == dk.theta && arrow_f(dk.sigma) == dk.rho &&
            arrow_f(dk.rho) == dk.xi && arrow_f(dk.xi) == dk.sigma;
  std::set<int> vs{dk.a, dk.b, dk.c, dk.d};
  if (!ok || vs.size() != 4)
    throw std::invalid_argument("2-triangle disk not present in the presentation");
}

}  // namespace

std::vector<TwoTriangleDisk> find_disks(const Presentation& p) {
  const Quiver& q = p.quiver();
  auto cycles = arrow_three_cycles(p);
  std::vector<TwoTriangleDisk> out;
  for (size_t i = 0; i < cycles.size(); ++i) {
    for (size_t j = 0; j < cycles.size(); ++j) {
      if (i == j) continue;
      for (int ei = 0; ei < 3; ++ei) {
        int eps = cycles[i][ei];
        int c = q.src(eps), d = q.dst(eps);
        if (c == d) continue;
        int theta = cycles[i][(ei + 2) % 3];
        int mu = cycles[i][(ei + 1) % 3];
        int a = q.src(theta);
        if (a == c || a == d) continue;
        for (int xi : cycles[j]) {
          if (q.src(xi) != d || q.dst(xi) != c) continue;
          if (q.arrow_id(eps) >= q.arrow_id(xi)) continue;  // canonical orientation
          // locate xi's cycle position to read sigma, rho
          int k = xi == cycles[j][0] ? 0 : (xi == cycles[j][1] ? 1 : 2);
          int sigma = cycles[j][(k + 1) % 3];
          int rho = cycles[j][(k + 2) % 3];
          int b = q.dst(sigma);
          if (b == a || b == c || b == d) continue;
          out.push_back(TwoTriangleDisk{a, b, c, d, theta, eps, mu, sigma, rho, xi});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const TwoTriangleDisk& x, const TwoTriangleDisk& y) {
    return q.arrow_id(x.eps) < q.arrow_id(y.eps);
  });
  return out;
}

std::vector<TwoTriangleDisk> find_disks(const TriangulationQuiver& tq) {
  // weights are irrelevant for disk detection; borrow a throwaway presentation
  OrbitData od = compute_orbit_data(tq);
  std::vector<int> ones(od.orbits.size(), 1);
  return find_disks(build_presentation(tq, ones));
}

DiskFamily DiskFamily::make(std::vector<TwoTriangleDisk> disks, const Presentation& p) {
  std::set<int> cd;
  for (const auto& dk : disks) {
    check_disk_in(p, dk);
    if (!cd.insert(dk.c).second || !cd.insert(dk.d).second)
      throw std::invalid_argument(
          "overlapping disks: a 2-cycle vertex belongs to two disks");
  }
  return DiskFamily{std::move(disks)};
}

std::vector<int> DiskFamily::surviving_vertices(const Quiver& q) const {
  std::set<int> removed;
  for (const auto& dk : disks) {
    removed.insert(dk.c);
    removed.insert(dk.d);
  }
  std::vector<int> out;
  for (int v = 0; v < q.vertex_count(); ++v)
    if (!removed.count(v)) out.push_back(v);
  return out;
}

Presentation contract(const Presentation& p, const DiskFamily& sigma) {
  const Quiver& q = p.quiver();
  for (int a = 0; a < q.arrow_count(); ++a) {
    FTarget t = p.f(a);
    if (t.is_arrow() && t.index != a && p.f(t.index).is_arrow() &&
        p.f(t.index).index == a)
      throw std::invalid_argument("contract expects a presentation without f'-2-cycles");
  }
  for (const auto& dk : sigma.disks) check_disk_in(p, dk);
  DiskFamily::make(sigma.disks, p);  // re-validate disjointness

  std::set<int> removed_vertices, removed_arrows;
  for (const auto& dk : sigma.disks) {
    removed_vertices.insert(dk.c);
    removed_vertices.insert(dk.d);
    for (int a : dk.arrows()) removed_arrows.insert(a);
  }

  std::set<std::string> arrow_names;
  for (int a = 0; a < q.arrow_count(); ++a)
    if (!removed_arrows.count(a)) arrow_names.insert(q.arrow_id(a));

  std::vector<std::string> vertices;
  for (int v : sigma.surviving_vertices(q)) vertices.push_back(q.vertex_id(v));
  std::vector<std::array<std::string, 3>> arrows;
  for (int a = 0; a < q.arrow_count(); ++a)
    if (!removed_arrows.count(a))
      arrows.push_back({q.arrow_id(a), q.vertex_id(q.src(a)), q.vertex_id(q.dst(a))});

  // composite arrows and the origin of every contracted arrow in p
  std::map<std::string, int> origin;  // contracted arrow id -> p arrow
  for (int a = 0; a < q.arrow_count(); ++a)
    if (!removed_arrows.count(a)) origin[q.arrow_id(a)] = a;
  std::vector<std::array<std::string, 2>> composite_cycles;
  for (const auto& dk : sigma.disks) {
    const std::string &A = q.vertex_id(dk.a), &B = q.vertex_id(dk.b),
                      &C = q.vertex_id(dk.c), &D = q.vertex_id(dk.d);
    std::string ab = unique_name(arrow_names, "via(" + C + "," + D + "):" + A + ">" + B);
    std::string ba = unique_name(arrow_names, "via(" + D + "," + C + "):" + B + ">" + A);
    arrows.push_back({ab, A, B});
    arrows.push_back({ba, B, A});
    composite_cycles.push_back({ab, ba});
    origin[ab] = dk.theta;  // theta sigma, spliced into theta's g-orbit slot
    origin[ba] = dk.rho;    // rho mu
  }

  std::vector<std::vector<FCycleToken>> fcycles;
  for (const auto& cyc : p.f_cycles()) {
    bool keep = true;
    for (const auto& tok : cyc)
      if (!tok.is_vertex && removed_arrows.count(*q.arrow_index(tok.id))) keep = false;
    if (keep) fcycles.push_back(cyc);
  }
  for (const auto& [ab, ba] : composite_cycles)
    fcycles.push_back({{false, ab}, {false, ba}});

  Quiver nq = Quiver::make(vertices, arrows);
  // provisional weights expose the contracted orbit structure
  std::map<std::string, int> provisional;
  for (const auto& entry : origin) provisional[entry.first] = 1;
  Presentation probe =
      Presentation::create(nq, fcycles, provisional, {}, p.field());

  // each contracted orbit inherits the weight of the p-orbit it came from;
  // splicing is position-preserving, so all members must agree
  std::map<std::string, int> weights;
  for (const auto& orbit : probe.g_orbits()) {
    int porbit = -1;
    for (int a : orbit) {
      int src = origin.at(probe.quiver().arrow_id(a));
      if (porbit < 0) porbit = p.orbit_of(src);
      if (p.orbit_of(src) != porbit)
        throw std::runtime_error(
            "internal: contracted g'-orbit drawn from two different g-orbits");
    }
    weights[probe.quiver().arrow_id(orbit[0])] = p.orbit_weight(porbit);
  }

  std::map<std::string, Scalar> border;
  for (int v : p.border_vertices())
    if (!removed_vertices.count(v)) border[q.vertex_id(v)] = p.border_value(v);

  return Presentation::create(std::move(nq), std::move(fcycles), weights, border,
                              p.field());
}

ExpansionResult expand(const Presentation& p) {
  const Quiver& q = p.quiver();

  std::set<std::string> vertex_names, arrow_names;
  for (int v = 0; v < q.vertex_count(); ++v) vertex_names.insert(q.vertex_id(v));
  for (int a = 0; a < q.arrow_count(); ++a) arrow_names.insert(q.arrow_id(a));

  std::vector<std::string> vertices(vertex_names.begin(), vertex_names.end());
  std::vector<std::array<std::string, 3>> arrows;
  for (int a = 0; a < q.arrow_count(); ++a)
    arrows.push_back({q.arrow_id(a), q.vertex_id(q.src(a)), q.vertex_id(q.dst(a))});

  // f over arrow ids; filled below
  std::map<std::string, std::string> fmap;
  for (int a = 0; a < q.arrow_count(); ++a)
    if (p.f(a).is_arrow()) fmap[q.arrow_id(a)] = q.arrow_id(p.f(a).index);

  std::map<std::string, int> origin;  // expanded arrow id -> p arrow (or absent)
  for (int a = 0; a < q.arrow_count(); ++a) origin[q.arrow_id(a)] = a;

  // (I) close each 1-vertex cycle with a new loop
  int n_one = static_cast<int>(p.one_vertices().size());
  for (int i : p.one_vertices()) {
    int gamma = p.one_vertex_out(i);           // f'(i)
    int delta = q.in_arrows(i)[0];             // the arrow with f'(delta) = i
    std::string vi = q.vertex_id(i);
    std::string eta = unique_name(arrow_names, "x:" + vi + ">" + vi);
    arrows.push_back({eta, vi, vi});
    fmap[eta] = q.arrow_id(gamma);
    fmap[q.arrow_id(delta)] = eta;
  }

  // (II) blow each f'-2-cycle up into a 2-triangle disk
  struct PendingDisk {
    std::string a, b, c, d;
    std::string theta, eps, mu, sigma, rho, xi;
    int alpha, beta;  // the contracted pair in p
  };
  std::vector<PendingDisk> pending;
  std::set<int> in_two_cycle;
  for (int a = 0; a < q.arrow_count(); ++a) {
    FTarget t = p.f(a);
    if (!t.is_arrow() || t.index == a) continue;
    if (!(p.f(t.index).is_arrow() && p.f(t.index).index == a)) continue;
    if (in_two_cycle.count(a)) continue;
    int alpha = q.arrow_id(a) < q.arrow_id(t.index) ? a : t.index;
    int beta = alpha == a ? t.index : a;
    in_two_cycle.insert(a);
    in_two_cycle.insert(t.index);

    PendingDisk dk;
    dk.alpha = alpha;
    dk.beta = beta;
    dk.a = q.vertex_id(q.src(alpha));
    dk.b = q.vertex_id(q.dst(alpha));
    auto via = parse_via_tag(q.arrow_id(alpha));
    if (via && !vertex_names.count(via->first) && !vertex_names.count(via->second) &&
        via->first != via->second) {
      dk.c = via->first;
      dk.d = via->second;
      vertex_names.insert(dk.c);
      vertex_names.insert(dk.d);
    } else {
      std::string base = q.arrow_id(alpha);
      dk.c = unique_name(vertex_names, base + ".c");
      dk.d = unique_name(vertex_names, base + ".d");
    }
    vertices.push_back(dk.c);
    vertices.push_back(dk.d);

    dk.theta = unique_name(arrow_names, "x:" + dk.a + ">" + dk.c);
    dk.eps = unique_name(arrow_names, "x:" + dk.c + ">" + dk.d);
    dk.mu = unique_name(arrow_names, "x:" + dk.d + ">" + dk.a);
    dk.sigma = unique_name(arrow_names, "x:" + dk.c + ">" + dk.b);
    dk.rho = unique_name(arrow_names, "x:" + dk.b + ">" + dk.d);
    dk.xi = unique_name(arrow_names, "x:" + dk.d + ">" + dk.c);
    arrows.push_back({dk.theta, dk.a, dk.c});
    arrows.push_back({dk.eps, dk.c, dk.d});
    arrows.push_back({dk.mu, dk.d, dk.a});
    arrows.push_back({dk.sigma, dk.c, dk.b});
    arrows.push_back({dk.rho, dk.b, dk.d});
    arrows.push_back({dk.xi, dk.d, dk.c});
    fmap[dk.theta] = dk.eps;
    fmap[dk.eps] = dk.mu;
    fmap[dk.mu] = dk.theta;
    fmap[dk.sigma] = dk.rho;
    fmap[dk.rho] = dk.xi;
    fmap[dk.xi] = dk.sigma;
    fmap.erase(q.arrow_id(alpha));
    fmap.erase(q.arrow_id(beta));

    origin.erase(q.arrow_id(alpha));
    origin.erase(q.arrow_id(beta));
    origin[dk.theta] = alpha;
    origin[dk.sigma] = alpha;
    origin[dk.rho] = beta;
    origin[dk.mu] = beta;
    pending.push_back(std::move(dk));
  }

  // drop the contracted pair arrows themselves
  std::erase_if(arrows, [&](const std::array<std::string, 3>& ar) {
    for (const auto& dk : pending) {
      if (ar[0] == q.arrow_id(dk.alpha) || ar[0] == q.arrow_id(dk.beta)) return true;
    }
    return false;
  });

  Quiver nq = Quiver::make(vertices, arrows);
  std::vector<int> f(nq.arrow_count(), -1);
  for (const auto& [from, to] : fmap) f[*nq.arrow_index(from)] = *nq.arrow_index(to);
  TriangulationQuiver tq = TriangulationQuiver::create(std::move(nq), std::move(f));

  OrbitData od = compute_orbit_data(tq);
  if (static_cast<int>(od.orbits.size()) !=
      static_cast<int>(p.g_orbits().size()) + n_one + static_cast<int>(pending.size()))
    throw std::runtime_error("internal: |O(g~)| != |O(g)| + |I0| + |Delta|");

  std::map<std::string, int> weights;
  for (const auto& orbit : od.orbits) {
    int porbit = -1;
    bool mixed = false;
    for (int a : orbit) {
      auto it = origin.find(tq.quiver().arrow_id(a));
      if (it == origin.end()) continue;  // new loop or disk-internal arrow
      int po = p.orbit_of(it->second);
      if (porbit < 0) porbit = po;
      else if (porbit != po) mixed = true;
    }
    if (mixed) throw std::runtime_error("internal: expanded orbit mixes source orbits");
    weights[tq.quiver().arrow_id(orbit[0])] = porbit < 0 ? 1 : p.orbit_weight(porbit);
  }

  std::map<std::string, Scalar> border;
  for (int v : p.border_vertices())
    border[q.vertex_id(v)] = p.border_value(v);

  ExpansionResult res{tq, DiskFamily{}, weights, border,
                      build_presentation(tq, weights, border, p.field())};
  for (const auto& dk : pending) {
    const Quiver& eq = tq.quiver();
    TwoTriangleDisk t{*eq.vertex_index(dk.a),    *eq.vertex_index(dk.b),
                      *eq.vertex_index(dk.c),    *eq.vertex_index(dk.d),
                      *eq.arrow_index(dk.theta), *eq.arrow_index(dk.eps),
                      *eq.arrow_index(dk.mu),    *eq.arrow_index(dk.sigma),
                      *eq.arrow_index(dk.rho),   *eq.arrow_index(dk.xi)};
    // normalize to the find_disks orientation (eps before xi)
    if (eq.arrow_id(t.eps) > eq.arrow_id(t.xi))
      t = TwoTriangleDisk{t.b, t.a, t.d, t.c, t.rho, t.xi, t.sigma, t.mu, t.theta, t.eps};
    res.disks.disks.push_back(t);
  }
  std::sort(res.disks.disks.begin(), res.disks.disks.end(),
            [&](const TwoTriangleDisk& x, const TwoTriangleDisk& y) {
              return tq.quiver().arrow_id(x.eps) < tq.quiver().arrow_id(y.eps);
            });
  return res;
}

}  // namespace gdq
