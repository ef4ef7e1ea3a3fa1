#include "sosq/generators.hpp"

#include "sosq/constructions.hpp"

#include <array>
#include <string>

namespace sosq {

namespace {

struct Triple {
  std::size_t a, b, c;
};

constexpr std::array<Triple, 1> kQuaternionTriples{{{1, 2, 3}}};

constexpr std::array<Triple, 7> kOctonionTriples{{
    {1, 2, 4},
    {2, 3, 5},
    {3, 4, 6},
    {4, 5, 7},
    {5, 6, 1},
    {6, 7, 2},
    {7, 1, 3},
}};

// product[a][b] = (sign, index) with e_a e_b = sign * e_index.
struct UnitProduct {
  Entry sign = 0;
  std::size_t index = 0;
};

template <std::size_t N>
HurwitzSystem left_multiplication_system(std::size_t dim,
                                         const std::array<Triple, N> &triples) {
  std::vector<std::vector<UnitProduct>> product(
      dim, std::vector<UnitProduct>(dim));
  for (std::size_t a = 0; a < dim; ++a) {
    product[0][a] = {1, a};
    product[a][0] = {1, a};
  }
  for (std::size_t a = 1; a < dim; ++a)
    product[a][a] = {-1, 0};
  for (const Triple &t : triples) {
    const std::array<std::size_t, 3> cyc{t.a, t.b, t.c};
    for (std::size_t r = 0; r < 3; ++r) {
      const std::size_t x = cyc[r], y = cyc[(r + 1) % 3], z = cyc[(r + 2) % 3];
      product[x][y] = {1, z};
      product[y][x] = {-1, z};
    }
  }

  std::vector<IntMatrix> matrices;
  matrices.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Entry> entries(dim * dim, 0);
    for (std::size_t j = 0; j < dim; ++j) {
      const UnitProduct p = product[i][j];
      entries[p.index * dim + j] = p.sign;
    }
    matrices.emplace_back(dim, dim, std::move(entries));
  }
  return HurwitzSystem(std::move(matrices));
}

} // namespace

HurwitzSystem classical(std::size_t dim) {
  switch (dim) {
  case 1:
    return HurwitzSystem({IntMatrix{{1}}});
  case 2:
    return left_multiplication_system(2, std::array<Triple, 0>{});
  case 4:
    return left_multiplication_system(4, kQuaternionTriples);
  case 8:
    return left_multiplication_system(8, kOctonionTriples);
  default:
    throw DomainError("classical formulas exist only for dimension 1, 2, 4 "
                      "or 8, got " +
                      std::to_string(dim));
  }
}

HurwitzSystem hr_family(unsigned m, std::size_t max_rows) {
  if (m >= 63 || (std::size_t{1} << m) > max_rows)
    throw ResourceError("hr_family(" + std::to_string(m) + ") has 2^" +
                        std::to_string(m) + " rows, above the cap of " +
                        std::to_string(max_rows));
  if (m <= 3)
    return classical(std::size_t{1} << m);
  // 2 * 8 * 2^(m-4) = 2^m and 8 + rho(2^(m-4)) = rho(2^m).
  return combine(classical(8), hr_family(m - 4, max_rows), max_rows);
}

} // namespace sosq
