#pragma once

#include "gdq/presentation.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gdq {

enum class BasisKind { kIdempotent, kWord, kSocle };

/// One monomial basis element: an identity e_i, a proper initial subword of
/// some B_a (recorded as first arrow + length), or the socle class w_i of
/// the identified cycles B_a = B_abar at vertex i.
struct BasisEntry {
  BasisKind kind;
  int vertex;       // start vertex
  int arrow = -1;   // kWord: first arrow
  int len = 0;      // kWord: 1 <= len < m_a n_a
  int end_vertex;
};

/// Field-linear combination of basis elements; absent keys are zero.
struct Element {
  std::map<int, Scalar> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const Element&) const = default;
};

/// The explicit monomial basis of Prop-style presentations: per vertex the
/// identity, the proper initial subwords of the B-cycles of its outgoing
/// arrows, and one socle element.  Multiplication is rewriting modulo the
/// defining relations and lands back in the basis.
class PathBasis {
 public:
  explicit PathBasis(Presentation p);

  const Presentation& presentation() const { return p_; }
  const Field& field() const { return p_.field(); }

  int size() const { return static_cast<int>(entries_.size()); }
  const BasisEntry& entry(int i) const { return entries_[i]; }
  int idempotent(int vertex) const { return idem_[vertex]; }
  int socle(int vertex) const { return socle_[vertex]; }
  /// Index of the subword of B_a of the given length, 1 <= len < m_a n_a.
  int word(int arrow, int len) const { return word_base_[arrow] + len - 1; }

  long long dim_projective(int vertex) const;

  /// Product of two basis elements: zero, or a single scaled basis element.
  std::optional<std::pair<int, Scalar>> mul_basis(int u, int v) const;

  Element zero() const { return Element{}; }
  Element single(int index, Scalar c) const;
  Element idempotent_element(int vertex) const;
  /// The class of an arrow: its length-1 word, or the socle element when
  /// m_a n_a = 1 (then the arrow itself spans the socle).
  Element arrow_element(int arrow) const;
  /// Product of the classes of a path's arrows, starting from e_vertex.
  Element path_element(int start_vertex, std::span<const int> arrows) const;

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element scale(const Scalar& c, const Element& x) const;
  Element mul(const Element& x, const Element& y) const;

  /// Symmetrizing form: the sum of the socle coefficients.
  Scalar phi(const Element& x) const;

  std::string describe(int index) const;
  std::string describe(const Element& x) const;

 private:
  Presentation p_;
  std::vector<BasisEntry> entries_;
  std::vector<int> idem_, socle_;  // per vertex
  std::vector<int> word_base_;     // per arrow; word(a,1) index, -1 if none
};

/// Spec-facing factory.
inline PathBasis path_basis(Presentation p) { return PathBasis(std::move(p)); }

/// Checks the characteristic != 2 isomorphism between the deformed and the
/// undeformed algebra: substituting a - a_{s(a)} A_abar for every border
/// loop a (with b = 2a) must kill every undeformed relation inside the
/// deformed algebra.  Throws in characteristic 2.
bool verify_char_not_2_iso(const Presentation& deformed);

}  // namespace gdq
