#pragma once

#include "gdq/basis.hpp"
#include "gdq/presentation.hpp"

#include <vector>

namespace gdq {

/// Uniserial module U(a) = aB generated by an arrow.
struct ArrowModule {
  int arrow;
  long long dim;  // m_a n_a
  int base_vertex;
};

ArrowModule arrow_module(const PathBasis& basis, int arrow);

/// Syzygy of U(a): U(f'(a)) when f'(a) is an arrow, the simple at the
/// 1-vertex f'(a) otherwise.  The dimension bookkeeping
/// dim U(f'(a)) + dim U(a) = dim P_{t(a)} is asserted, as is a f'(a) = 0 for
/// undeformed presentations.
struct SyzygyStep {
  bool is_simple;
  int arrow = -1;   // when !is_simple
  int vertex = -1;  // when is_simple
};

SyzygyStep syzygy_arrow(const PathBasis& basis, int arrow);

/// Census of stable-tube data read off the f'-cycle structure: f'-3-cycles
/// carry the rank-3 tubes, f'-fixed arrows rank-1 tubes, f'-2-cycles the
/// period-2 pairs of rank-1 tubes.
struct TubeCensus {
  int rank3_count = 0;
  int rank1_arrow_count = 0;
  int period2_pairs = 0;
  std::vector<int> period_per_arrow;  // 1, 2 or 3
};

TubeCensus tube_census(const Presentation& p);

enum class SimpleClass { kPeriodicPeriod3, kNonPeriodic };

/// Per-vertex periodicity of the simple modules: S_i is periodic (of period
/// 3) exactly when i is a 1-vertex of the Gabriel quiver.  Also evaluates
/// the equivalence "all simples non-periodic <=> Gabriel quiver 2-regular".
struct SimplesReport {
  std::vector<SimpleClass> per_vertex;
  bool all_non_periodic;
  bool gabriel_two_regular;
};

SimplesReport simple_periodicity(const Presentation& p);

struct WalkStep {
  int arrow;
  bool inverse;
  bool operator==(const WalkStep&) const = default;
};

/// Closed bipartite walk through a non-loop arrow, built from the bijection
/// h(a) = bar(a*), plus its reduction with weight-1 g-fixed loops removed.
struct BipartiteWalk {
  std::vector<WalkStep> steps;
  std::vector<WalkStep> reduced;
  bool closed = true;
};

BipartiteWalk primitive_walk(const Presentation& p, int arrow);

enum class Growth { kPolynomial, kNonPolynomial };

/// Polynomial growth happens exactly for Lambda(1,1,b), Gamma(1,1,1) and
/// Omega(1,1,1); everything else in this class is tame of non-polynomial
/// growth.  Defined in classify.cpp next to the family matcher.
Growth growth_class(const Presentation& p);

}  // namespace gdq
