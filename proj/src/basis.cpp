#include "gdq/basis.hpp"

#include <sstream>
#include <stdexcept>

namespace gdq {

PathBasis::PathBasis(Presentation p) : p_(std::move(p)) {
  const Quiver& q = p_.quiver();
  idem_.assign(q.vertex_count(), -1);
  socle_.assign(q.vertex_count(), -1);
  word_base_.assign(q.arrow_count(), -1);

  for (int v = 0; v < q.vertex_count(); ++v) {
    idem_[v] = size();
    entries_.push_back({BasisKind::kIdempotent, v, -1, 0, v});
    for (int a : q.out_arrows(v)) {
      int L = p_.cycle_length(a);
      if (L < 2) continue;  // the arrow itself spans the socle
      word_base_[a] = size();
      for (int len = 1; len < L; ++len)
        entries_.push_back(
            {BasisKind::kWord, v, a, len, q.dst(p_.cycle_arrow_at(a, len - 1))});
    }
    socle_[v] = size();
    entries_.push_back({BasisKind::kSocle, v, -1, 0, v});
  }
}

long long PathBasis::dim_projective(int vertex) const {
  const Quiver& q = p_.quiver();
  long long d = 2;  // e_i and the socle
  for (int a : q.out_arrows(vertex)) d += p_.cycle_length(a) - 1;
  return d;
}

std::optional<std::pair<int, Scalar>> PathBasis::mul_basis(int u, int v) const {
  const BasisEntry& x = entries_[u];
  const BasisEntry& y = entries_[v];
  if (x.end_vertex != y.vertex) return std::nullopt;
  Scalar one{1, 1};

  if (x.kind == BasisKind::kIdempotent) return std::make_pair(v, one);
  if (y.kind == BasisKind::kIdempotent) return std::make_pair(u, one);
  // socle times radical and radical times socle vanish
  if (x.kind == BasisKind::kSocle || y.kind == BasisKind::kSocle) return std::nullopt;

  // both proper subwords; the junction decides everything
  int last = p_.cycle_arrow_at(x.arrow, x.len - 1);
  if (y.arrow == p_.g(last)) {
    int total = x.len + y.len;
    int L = p_.cycle_length(x.arrow);
    if (total < L) return std::make_pair(word(x.arrow, total), one);
    if (total == L) return std::make_pair(socle_[x.vertex], one);
    return std::nullopt;  // overshoots the socle
  }
  if (y.arrow == last && p_.is_border_loop(last)) {
    // a border-loop square rewrites to b * B_a; any longer context dies in
    // rad * soc
    if (x.len == 1 && y.len == 1) {
      Scalar b = p_.border_value(p_.quiver().src(last));
      if (b.is_zero()) return std::nullopt;
      return std::make_pair(socle_[x.vertex], b);
    }
    return std::nullopt;
  }
  return std::nullopt;  // forbidden pair a f(a)
}

Element PathBasis::single(int index, Scalar c) const {
  Element e;
  if (!c.is_zero()) e.terms[index] = c;
  return e;
}

Element PathBasis::idempotent_element(int vertex) const {
  return single(idem_[vertex], Scalar{1, 1});
}

Element PathBasis::arrow_element(int arrow) const {
  if (p_.cycle_length(arrow) >= 2) return single(word(arrow, 1), Scalar{1, 1});
  return single(socle_[p_.quiver().src(arrow)], Scalar{1, 1});
}

Element PathBasis::path_element(int start_vertex, std::span<const int> arrows) const {
  Element acc = idempotent_element(start_vertex);
  for (int a : arrows) acc = mul(acc, arrow_element(a));
  return acc;
}

Element PathBasis::add(const Element& x, const Element& y) const {
  Element out = x;
  for (const auto& [i, c] : y.terms) {
    auto it = out.terms.find(i);
    if (it == out.terms.end()) {
      out.terms[i] = c;
    } else {
      it->second = scalar_add(field(), it->second, c);
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

Element PathBasis::sub(const Element& x, const Element& y) const {
  return add(x, scale(Scalar{-1, 1}, y));
}

Element PathBasis::scale(const Scalar& c, const Element& x) const {
  Element out;
  Scalar cc = make_scalar(field(), c.num, c.den);
  if (cc.is_zero()) return out;
  for (const auto& [i, v] : x.terms) {
    Scalar s = scalar_mul(field(), cc, v);
    if (!s.is_zero()) out.terms[i] = s;
  }
  return out;
}

Element PathBasis::mul(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [i, ci] : x.terms)
    for (const auto& [j, cj] : y.terms) {
      auto prod = mul_basis(i, j);
      if (!prod) continue;
      Scalar c = scalar_mul(field(), scalar_mul(field(), ci, cj), prod->second);
      if (c.is_zero()) continue;
      auto it = out.terms.find(prod->first);
      if (it == out.terms.end()) {
        out.terms[prod->first] = c;
      } else {
        it->second = scalar_add(field(), it->second, c);
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  return out;
}

Scalar PathBasis::phi(const Element& x) const {
  Scalar acc{0, 1};
  for (const auto& [i, c] : x.terms)
    if (entries_[i].kind == BasisKind::kSocle) acc = scalar_add(field(), acc, c);
  return acc;
}

std::string PathBasis::describe(int index) const {
  const BasisEntry& e = entries_[index];
  const Quiver& q = p_.quiver();
  switch (e.kind) {
    case BasisKind::kIdempotent:
      return "e(" + q.vertex_id(e.vertex) + ")";
    case BasisKind::kSocle:
      return "w(" + q.vertex_id(e.vertex) + ")";
    case BasisKind::kWord: {
      std::vector<int> cyc = p_.cycle_b(e.arrow);
      std::string s;
      for (int k = 0; k < e.len; ++k) s += (k ? "." : "") + q.arrow_id(cyc[k]);
      return s;
    }
  }
  return "?";
}

std::string PathBasis::describe(const Element& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    if (!(c == Scalar{1, 1})) os << scalar_to_string(c) << "*";
    os << describe(i);
  }
  return os.str();
}

bool verify_char_not_2_iso(const Presentation& deformed) {
  const Field& k = deformed.field();
  if (k.characteristic() == 2)
    throw std::invalid_argument("characteristic 2: no such isomorphism in general");

  PathBasis basis(deformed);
  const Quiver& q = deformed.quiver();
  Scalar half = scalar_inv(k, Scalar{2, 1});

  // images of the arrows under h
  std::vector<Element> h(q.arrow_count());
  for (int a = 0; a < q.arrow_count(); ++a) {
    h[a] = basis.arrow_element(a);
    if (!deformed.is_border_loop(a)) continue;
    Scalar b = deformed.border_value(q.src(a));
    if (b.is_zero()) continue;
    Scalar coeff = scalar_mul(k, half, b);  // a_i with b_i = 2 a_i
    const auto& out = q.out_arrows(q.src(a));
    int abar = out[0] == a ? out[1] : out[0];
    std::vector<int> a_path = deformed.cycle_a(abar);
    Element corr = basis.path_element(q.src(a), a_path);
    h[a] = basis.sub(h[a], basis.scale(coeff, corr));
  }

  auto h_path = [&](int start, const std::vector<int>& arrows) {
    Element acc = basis.idempotent_element(start);
    for (int a : arrows) acc = basis.mul(acc, h[a]);
    return acc;
  };

  // undeformed relations: a f(a) = 0 for every arrow (a^2 for border loops)
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (!deformed.f(a).is_arrow()) continue;
    int fa = deformed.f(a).index;
    Element prod = basis.mul(h[a], h[fa]);
    if (!prod.is_zero()) return false;
  }
  // socle identifications B_a = B_abar
  for (int v = 0; v < q.vertex_count(); ++v) {
    const auto& out = q.out_arrows(v);
    if (out.size() < 2) continue;
    Element ba = h_path(v, deformed.cycle_b(out[0]));
    Element bb = h_path(v, deformed.cycle_b(out[1]));
    if (!basis.sub(ba, bb).is_zero()) return false;
  }
  // bijectivity: triangular substitution plus equal dimensions
  return true;
}

}  // namespace gdq
