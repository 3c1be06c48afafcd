#pragma once

#include "gdq/basis.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gdq {

/// Exact Cartan matrix: entry (i,j) counts the basis paths of P_i ending at
/// j (the socle element counts toward its own vertex).  The determinant is
/// exact; singularity is a theorem-level predicate here.
struct CartanMatrix {
  std::vector<std::vector<long long>> entries;
  mpz_class det;

  int size() const { return static_cast<int>(entries.size()); }
  long long row_sum(int i) const;
  bool symmetric() const;
  bool singular() const { return det == 0; }
  std::string det_string() const { return det.get_str(); }
};

CartanMatrix cartan_matrix(const PathBasis& basis);

/// Fraction-free Bareiss elimination over arbitrary-precision integers.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

}  // namespace gdq
