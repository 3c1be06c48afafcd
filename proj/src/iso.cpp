#include "gdq/iso.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gdq {

namespace {

struct IsoSearch {
  const Quiver& qa;
  const Quiver& qb;
  const std::vector<int>& fa;
  const std::vector<int>& fb;
  const std::function<bool(const QuiverIsomorphism&)>& visit;
  std::vector<int> vmap;   // A vertex -> B vertex or -1
  std::vector<bool> used;  // B vertex taken
  bool stopped = false;

  int count_arrows(const Quiver& q, int s, int t) const {
    int c = 0;
    for (int a : q.out_arrows(s)) c += q.dst(a) == t;
    return c;
  }

  bool vertex_compatible(int v, int w) const {
    if (count_arrows(qa, v, v) != count_arrows(qb, w, w)) return false;
    for (int u = 0; u < qa.vertex_count(); ++u) {
      if (vmap[u] < 0) continue;
      if (count_arrows(qa, v, u) != count_arrows(qb, w, vmap[u])) return false;
      if (count_arrows(qa, u, v) != count_arrows(qb, vmap[u], w)) return false;
    }
    return true;
  }

  // With the vertex map fixed, enumerate arrow matchings fiber by fiber.
  void match_arrows() {
    std::vector<int> amap(qa.arrow_count(), -1);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> fibers;
    for (int v = 0; v < qa.vertex_count(); ++v) {
      // group out-arrows of v by target
      std::vector<int> outs = qa.out_arrows(v);
      std::sort(outs.begin(), outs.end(),
                [&](int x, int y) { return qa.dst(x) != qa.dst(y) ? qa.dst(x) < qa.dst(y)
                                                                 : qa.arrow_id(x) < qa.arrow_id(y); });
      for (size_t i = 0; i < outs.size();) {
        size_t j = i;
        while (j < outs.size() && qa.dst(outs[j]) == qa.dst(outs[i])) ++j;
        std::vector<int> fib_a(outs.begin() + i, outs.begin() + j);
        std::vector<int> fib_b;
        for (int b : qb.out_arrows(vmap[v]))
          if (qb.dst(b) == vmap[qa.dst(outs[i])]) fib_b.push_back(b);
        if (fib_a.size() != fib_b.size()) return;  // pruned earlier, defensive
        std::sort(fib_b.begin(), fib_b.end(),
                  [&](int x, int y) { return qb.arrow_id(x) < qb.arrow_id(y); });
        fibers.emplace_back(std::move(fib_a), std::move(fib_b));
        i = j;
      }
    }
    match_fiber(fibers, 0, amap);
  }

  void match_fiber(std::vector<std::pair<std::vector<int>, std::vector<int>>>& fibers,
                   size_t k, std::vector<int>& amap) {
    if (stopped) return;
    if (k == fibers.size()) {
      for (int a = 0; a < qa.arrow_count(); ++a)
        if (amap[fa[a]] != fb[amap[a]]) return;
      QuiverIsomorphism iso;
      for (int v = 0; v < qa.vertex_count(); ++v)
        iso.vertex_map[qa.vertex_id(v)] = qb.vertex_id(vmap[v]);
      for (int a = 0; a < qa.arrow_count(); ++a)
        iso.arrow_map[qa.arrow_id(a)] = qb.arrow_id(amap[a]);
      if (!visit(iso)) stopped = true;
      return;
    }
    auto& [fib_a, fib_b] = fibers[k];
    std::vector<int> perm(fib_b.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (size_t i = 0; i < fib_a.size(); ++i) amap[fib_a[i]] = fib_b[perm[i]];
      match_fiber(fibers, k + 1, amap);
      if (stopped) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int a : fib_a) amap[a] = -1;
  }

  void extend(int v) {
    if (stopped) return;
    if (v == qa.vertex_count()) {
      match_arrows();
      return;
    }
    for (int w = 0; w < qb.vertex_count(); ++w) {
      if (used[w] || !vertex_compatible(v, w)) continue;
      vmap[v] = w;
      used[w] = true;
      extend(v + 1);
      vmap[v] = -1;
      used[w] = false;
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_isomorphism(const TriangulationQuiver& a, const TriangulationQuiver& b,
                          const std::function<bool(const QuiverIsomorphism&)>& visit) {
  if (a.quiver().vertex_count() != b.quiver().vertex_count()) return;
  if (a.quiver().arrow_count() != b.quiver().arrow_count()) return;
  FOrbitCensus ca = f_orbit_census(a), cb = f_orbit_census(b);
  if (!(ca == cb)) return;
  IsoSearch search{a.quiver(), b.quiver(), a.f_map(), b.f_map(), visit,
                   std::vector<int>(a.quiver().vertex_count(), -1),
                   std::vector<bool>(b.quiver().vertex_count(), false)};
  search.extend(0);
}

std::optional<QuiverIsomorphism> quiver_isomorphic(const TriangulationQuiver& a,
                                                   const TriangulationQuiver& b) {
  std::optional<QuiverIsomorphism> found;
  for_each_isomorphism(a, b, [&](const QuiverIsomorphism& iso) {
    found = iso;
    return false;
  });
  return found;
}

namespace {

struct CanonicalChoice {
  std::string key;
  std::vector<int> vertex_label;  // old vertex -> new label
  std::vector<int> arrow_order;   // canonical position -> old arrow
};

CanonicalChoice canonical_choice(const TriangulationQuiver& tq) {
  const Quiver& q = tq.quiver();
  int n = q.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);  // perm[i] = new label of vertex i

  CanonicalChoice best;
  std::vector<int> order(q.arrow_count());
  do {
    // arrows sorted by relabeled endpoints; parallel arrows (<= 2) swapped
    // exhaustively to minimize the f table
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      if (perm[q.src(x)] != perm[q.src(y)]) return perm[q.src(x)] < perm[q.src(y)];
      return perm[q.dst(x)] < perm[q.dst(y)];
    });
    std::vector<std::pair<size_t, size_t>> doubles;
    for (size_t i = 0; i + 1 < order.size(); ++i)
      if (perm[q.src(order[i])] == perm[q.src(order[i + 1])] &&
          perm[q.dst(order[i])] == perm[q.dst(order[i + 1])])
        doubles.emplace_back(i, i + 1);

    for (unsigned mask = 0; mask < (1u << doubles.size()); ++mask) {
      std::vector<int> ord = order;
      for (size_t d = 0; d < doubles.size(); ++d)
        if (mask & (1u << d)) std::swap(ord[doubles[d].first], ord[doubles[d].second]);
      std::vector<int> pos(q.arrow_count());
      for (size_t i = 0; i < ord.size(); ++i) pos[ord[i]] = static_cast<int>(i);
      std::ostringstream os;
      os << n << "|";
      for (int a : ord) os << perm[q.src(a)] << ">" << perm[q.dst(a)] << ";";
      os << "f:";
      for (int a : ord) os << pos[tq.f(a)] << ",";
      std::string s = os.str();
      if (best.key.empty() || s < best.key) best = {std::move(s), perm, std::move(ord)};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::string canonical_key(const TriangulationQuiver& tq) {
  return canonical_choice(tq).key;
}

TriangulationQuiver canonical_form(const TriangulationQuiver& tq) {
  const Quiver& q = tq.quiver();
  CanonicalChoice c = canonical_choice(tq);
  std::vector<std::string> vnames(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v)
    vnames[c.vertex_label[v]] = std::to_string(c.vertex_label[v] + 1);

  auto aname = [&](int canonical_pos) {
    std::string num = std::to_string(canonical_pos + 1);
    if (num.size() < 2) num = "0" + num;
    return "a" + num;
  };
  std::vector<int> pos(q.arrow_count());
  for (size_t i = 0; i < c.arrow_order.size(); ++i)
    pos[c.arrow_order[i]] = static_cast<int>(i);

  std::vector<std::array<std::string, 3>> arrows;
  for (size_t i = 0; i < c.arrow_order.size(); ++i) {
    int a = c.arrow_order[i];
    arrows.push_back({aname(static_cast<int>(i)),
                      std::to_string(c.vertex_label[q.src(a)] + 1),
                      std::to_string(c.vertex_label[q.dst(a)] + 1)});
  }
  Quiver nq = Quiver::make(vnames, std::move(arrows));
  // names "aXX" sort by canonical position, so index == position
  std::vector<int> f(q.arrow_count());
  for (int a = 0; a < q.arrow_count(); ++a) f[pos[a]] = pos[tq.f(a)];
  return TriangulationQuiver::create(std::move(nq), std::move(f));
}

}  // namespace gdq
