#include "gdq/cartan.hpp"

#include <numeric>
#include <stdexcept>

namespace gdq {

long long CartanMatrix::row_sum(int i) const {
  return std::accumulate(entries[i].begin(), entries[i].end(), 0LL);
}

bool CartanMatrix::symmetric() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (entries[i][j] != entries[j][i]) return false;
  return true;
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) { swap = r; break; }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_class quot;
        mpz_divexact(quot.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = quot;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

CartanMatrix cartan_matrix(const PathBasis& basis) {
  const Presentation& p = basis.presentation();
  int n = p.quiver().vertex_count();
  CartanMatrix c;
  c.entries.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < basis.size(); ++i) {
    const BasisEntry& e = basis.entry(i);
    ++c.entries[e.vertex][e.end_vertex];
  }

  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = c.entries[i][j];
  c.det = bareiss_determinant(std::move(m));

  if (!c.symmetric())
    throw std::runtime_error("internal: Cartan matrix of a symmetric algebra not symmetric");
  return c;
}

}  // namespace gdq
