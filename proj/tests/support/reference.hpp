// Independent reference implementations used as test oracles. Nothing here
// calls into the matrix kernels or constructions under test.
#ifndef SOSQ_TESTS_REFERENCE_HPP
#define SOSQ_TESTS_REFERENCE_HPP

#include "sosq/matrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sosq::testing {

using Grid = std::vector<std::vector<Entry>>;

inline Grid to_grid(const IntMatrix &m) {
  Grid g(m.rows(), std::vector<Entry>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      g[i][j] = m(i, j);
  return g;
}

inline IntMatrix from_grid(const Grid &g) {
  std::vector<Entry> e;
  for (const auto &row : g)
    e.insert(e.end(), row.begin(), row.end());
  return IntMatrix(g.size(), g.front().size(), std::move(e));
}

// Textbook triple loop over nested vectors.
inline Grid naive_multiply(const Grid &a, const Grid &b) {
  Grid c(a.size(), std::vector<Entry>(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.front().size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Grid naive_transpose(const Grid &a) {
  Grid t(a.front().size(), std::vector<Entry>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.front().size(); ++j)
      t[j][i] = a[i][j];
  return t;
}

// Block-scaling Kronecker product straight from its definition: block
// (alpha, beta) of the result is t[alpha][beta] * m.
inline Grid naive_kron(const Grid &m, const Grid &t) {
  const std::size_t mr = m.size(), mc = m.front().size();
  Grid out(mr * t.size(), std::vector<Entry>(mc * t.front().size(), 0));
  for (std::size_t alpha = 0; alpha < t.size(); ++alpha)
    for (std::size_t beta = 0; beta < t.front().size(); ++beta)
      for (std::size_t i = 0; i < mr; ++i)
        for (std::size_t j = 0; j < mc; ++j)
          out[alpha * mr + i][beta * mc + j] = t[alpha][beta] * m[i][j];
  return out;
}

// n = 2^(4a + b) * odd with 0 <= b <= 3  =>  rho(n) = 8a + 2^b.
inline std::uint64_t rho_closed_form(std::uint64_t n) {
  unsigned v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return 8 * (v / 4) + (std::uint64_t{1} << (v % 4));
}

inline IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows,
                               std::size_t cols, Entry lo = -3, Entry hi = 3) {
  std::uniform_int_distribution<Entry> dist(lo, hi);
  std::vector<Entry> e(rows * cols);
  for (Entry &x : e)
    x = dist(rng);
  return IntMatrix(rows, cols, std::move(e));
}

} // namespace sosq::testing

#endif // SOSQ_TESTS_REFERENCE_HPP
