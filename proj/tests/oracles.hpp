#pragma once

// Brute-force reference computations shared by the tests.  None of these
// call the enumerators, counters or rank routines they are compared with.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "bessel/forest.hpp"
#include "bessel/rational.hpp"

namespace oracle {

// Every forest on `labels`, reached from the singletons by repeatedly
// grafting two of its trees.  Returned as sorted canonical text.
inline std::vector<std::string> forests_by_grafting(const bessel::LabelSet& labels) {
  using bessel::Forest;
  std::set<std::string> seen;
  std::vector<Forest> frontier{Forest::minimum(labels)};
  seen.insert(frontier.front().text());
  while (!frontier.empty()) {
    std::vector<Forest> next;
    for (const auto& f : frontier) {
      const auto& ts = f.trees();
      for (std::size_t a = 0; a < ts.size(); ++a)
        for (std::size_t b = a + 1; b < ts.size(); ++b) {
          std::vector<bessel::Tree> rest;
          for (std::size_t k = 0; k < ts.size(); ++k)
            if (k != a && k != b) rest.push_back(ts[k]);
          rest.push_back(bessel::Tree::graft(ts[a], ts[b]));
          Forest g(std::move(rest));
          if (seen.insert(g.text()).second) next.push_back(g);
        }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Trees on n labels: (2n-3)!!.
inline bessel::Integer odd_double_factorial(std::size_t n) {
  bessel::Integer r = 1;
  for (long k = 2 * static_cast<long>(n) - 3; k > 1; k -= 2) r *= k;
  return r;
}

// Bell numbers through the Bell triangle.
inline std::size_t bell(std::size_t n) {
  std::vector<std::size_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> nxt{row.back()};
    for (auto x : row) nxt.push_back(nxt.back() + x);
    row = std::move(nxt);
  }
  return row.front();
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Plain Gaussian elimination over Q.
inline std::size_t rank(std::vector<std::vector<bessel::Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const bessel::Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Sign of a permutation of 0..n-1 by counting inversions.
inline int inversion_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace oracle
