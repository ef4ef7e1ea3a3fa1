#ifndef SOSQ_GENERATORS_HPP
#define SOSQ_GENERATORS_HPP

#include "sosq/hurwitz.hpp"

#include <cstddef>

namespace sosq {

/// Default guard on the row count n of any constructed system.
inline constexpr std::size_t kDefaultMaxRows = 4096;

/// The [d, d, d] system of left multiplications in the real composition
/// algebra of dimension d in {1, 2, 4, 8}: reals, complex numbers,
/// quaternions (1, i, j, k), octonions. A_i(k, j) is the e_k-coefficient
/// of e_i * e_j, so z = x * y componentwise.
///
/// Octonion convention: e_a e_b = e_c for every cyclic shift (mod 7, on
/// indices 1..7) of the triple (1, 2, 4); e_a^2 = -1.
///
/// Throws DomainError for any other dimension.
HurwitzSystem classical(std::size_t dim);

/// The [rho(2^m), 2^m, 2^m] family: classical(2^m) for m <= 3, otherwise
/// combine(classical(8), hr_family(m - 4)). Throws ResourceError when 2^m
/// exceeds max_rows.
HurwitzSystem hr_family(unsigned m, std::size_t max_rows = kDefaultMaxRows);

} // namespace sosq

#endif // SOSQ_GENERATORS_HPP
