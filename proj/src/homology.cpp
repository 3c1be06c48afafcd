#include "gdq/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace gdq {

ArrowModule arrow_module(const PathBasis& basis, int arrow) {
  const Presentation& p = basis.presentation();
  // direct count of the right multiples of the arrow among basis elements:
  // the words starting with it plus the socle class B_a
  long long count = 1;
  for (int i = 0; i < basis.size(); ++i) {
    const BasisEntry& e = basis.entry(i);
    if (e.kind == BasisKind::kWord && e.arrow == arrow) ++count;
  }
  long long expected = p.cycle_length(arrow);
  if (count != expected)
    throw std::runtime_error("internal: dim U(a) disagrees with basis count");
  return ArrowModule{arrow, expected, p.quiver().src(arrow)};
}

SyzygyStep syzygy_arrow(const PathBasis& basis, int arrow) {
  const Presentation& p = basis.presentation();
  const Quiver& q = p.quiver();
  int t = q.dst(arrow);
  long long dim_u = arrow_module(basis, arrow).dim;
  long long dim_p = basis.dim_projective(t);

  FTarget ft = p.f(arrow);
  if (ft.is_arrow()) {
    long long dim_next = arrow_module(basis, ft.index).dim;
    if (dim_next + dim_u != dim_p)
      throw std::runtime_error("internal: dim U(f(a)) + dim U(a) != dim P_{t(a)}");
    // the product a f(a) vanishes; border loops with b != 0 instead satisfy
    // a^2 = b B_a, which the deformed multiply reproduces
    Element prod = basis.mul(basis.arrow_element(arrow), basis.arrow_element(ft.index));
    bool border_deformed =
        p.is_border_loop(arrow) && !p.border_value(q.src(arrow)).is_zero();
    if (!border_deformed && !prod.is_zero())
      throw std::runtime_error("internal: a f(a) != 0 in multiply");
    return SyzygyStep{false, ft.index, -1};
  }
  // f'(a) is a 1-vertex: the syzygy is the simple module there
  if (dim_p - dim_u != 1)
    throw std::runtime_error("internal: syzygy at a 1-vertex is not simple");
  return SyzygyStep{true, -1, ft.index};
}

TubeCensus tube_census(const Presentation& p) {
  TubeCensus c;
  c.period_per_arrow.assign(p.quiver().arrow_count(), 0);
  std::vector<bool> seen(p.quiver().arrow_count(), false);
  for (int a = 0; a < p.quiver().arrow_count(); ++a) {
    if (seen[a]) continue;
    // walk the f'-cycle; a 1-vertex occupies one slot
    std::vector<int> arrows;
    bool has_vertex = false;
    int x = a;
    do {
      seen[x] = true;
      arrows.push_back(x);
      FTarget t = p.f(x);
      if (t.is_arrow()) {
        x = t.index;
      } else {
        has_vertex = true;
        x = p.one_vertex_out(t.index);
      }
    } while (x != a);
    int len = static_cast<int>(arrows.size()) + (has_vertex ? 1 : 0);
    for (int ar : arrows) c.period_per_arrow[ar] = len;
    if (len == 1) ++c.rank1_arrow_count;
    else if (len == 2) ++c.period2_pairs;
    else if (len == 3) ++c.rank3_count;
    else throw std::runtime_error("internal: f'-cycle of length > 3");
  }
  return c;
}

SimplesReport simple_periodicity(const Presentation& p) {
  Quiver gq = gabriel_quiver(p);
  SimplesReport rep;
  rep.per_vertex.assign(p.quiver().vertex_count(), SimpleClass::kNonPeriodic);
  bool two_regular = true;
  for (int v = 0; v < gq.vertex_count(); ++v) {
    size_t outs = gq.out_arrows(v).size();
    if (outs != 2 || gq.in_arrows(v).size() != 2) two_regular = false;
    if (outs == 1) rep.per_vertex[v] = SimpleClass::kPeriodicPeriod3;
  }
  rep.all_non_periodic =
      std::all_of(rep.per_vertex.begin(), rep.per_vertex.end(),
                  [](SimpleClass c) { return c == SimpleClass::kNonPeriodic; });
  rep.gabriel_two_regular = two_regular;
  return rep;
}

BipartiteWalk primitive_walk(const Presentation& p, int arrow) {
  const Quiver& q = p.quiver();
  if (q.is_loop(arrow))
    throw std::invalid_argument("primitive walks start at a non-loop arrow");
  for (int v = 0; v < q.vertex_count(); ++v)
    if (q.out_arrows(v).size() != 2)
      throw std::invalid_argument("primitive walks need a 2-regular quiver");

  auto star = [&](int a) {  // the other arrow with the same target
    const auto& in = q.in_arrows(q.dst(a));
    return in[0] == a ? in[1] : in[0];
  };
  auto bar = [&](int a) {  // the other arrow with the same source
    const auto& out = q.out_arrows(q.src(a));
    return out[0] == a ? out[1] : out[0];
  };

  BipartiteWalk w;
  int x = arrow;
  do {
    int xs = star(x);
    w.steps.push_back({x, false});
    w.steps.push_back({xs, true});
    x = bar(xs);  // h(x)
  } while (x != arrow);

  // consecutive steps share endpoints; the closing step returns to s(arrow)
  auto step_src = [&](const WalkStep& s) { return s.inverse ? q.dst(s.arrow) : q.src(s.arrow); };
  auto step_dst = [&](const WalkStep& s) { return s.inverse ? q.src(s.arrow) : q.dst(s.arrow); };
  for (size_t i = 0; i < w.steps.size(); ++i) {
    const WalkStep& cur = w.steps[i];
    const WalkStep& nxt = w.steps[(i + 1) % w.steps.size()];
    if (step_dst(cur) != step_src(nxt))
      throw std::runtime_error("internal: walk steps do not chain");
    if (cur.arrow == nxt.arrow && cur.inverse != nxt.inverse)
      throw std::runtime_error("internal: walk backtracks");
  }
  w.closed = true;

  for (const WalkStep& s : w.steps) {
    if (p.orbit_length(s.arrow) == 1 && p.weight(s.arrow) == 1) continue;
    w.reduced.push_back(s);
  }
  return w;
}

}  // namespace gdq
