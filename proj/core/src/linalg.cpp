#include "bessel/linalg.hpp"

#include <utility>

#include "bessel/error.hpp"

namespace bessel::linalg {

std::size_t rank(IntegerMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  for (const auto& row : m)
    if (row.size() != cols) throw DomainError("ragged matrix");
  const std::size_t rows = m.size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const RationalMatrix& m) {
  IntegerMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Integer den = 1;
    for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> r;
    r.reserve(row.size());
    for (const auto& q : row) r.push_back(q.get_num() * (den / q.get_den()));
    out.push_back(std::move(r));
  }
  return rank(std::move(out));
}

}  // namespace bessel::linalg
