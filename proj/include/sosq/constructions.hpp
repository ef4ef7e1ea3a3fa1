#ifndef SOSQ_CONSTRUCTIONS_HPP
#define SOSQ_CONSTRUCTIONS_HPP

#include "sosq/generators.hpp"
#include "sosq/hurwitz.hpp"

#include <cstddef>
#include <optional>

namespace sosq {

/// The 2x2 sign patterns the doubling constructions tensor with.
namespace pattern {
const IntMatrix &E(); ///< [[1, 0], [0, 1]]
const IntMatrix &J(); ///< [[0, 1], [-1, 0]]
const IntMatrix &H(); ///< [[1, 0], [0, -1]]
const IntMatrix &S(); ///< [[0, 1], [1, 0]]
} // namespace pattern

// Every construction below throws ResourceError when its output would have
// more than max_rows rows. None of them verifies its input: an invalid input
// gives an invalid output, which verify_hurwitz will catch.

/// [r, s, n] -> [r + 1, 2s, 2n]. With A = sys[special], the output is
///   kron(A, E), kron(A, J), kron(A_j, H) for the other j in input order.
HurwitzSystem doubling(const HurwitzSystem &sys, std::size_t special = 0,
                       std::size_t max_rows = kDefaultMaxRows);

/// Amicable [p, s, n] / [q, s, n] -> amicable [p + 1, 2s, 2n] / [q + 1, 2s, 2n].
/// First output: the doubling of pair.first() around `special`.
/// Second output: kron(A, S), then kron(B_k, H) for every k.
AmicablePair amicable_doubling(const AmicablePair &pair,
                               std::size_t special = 0,
                               std::size_t max_rows = kDefaultMaxRows);

/// Tensor combinator. base holds r + 1 matrices; base[b_index] plays B and
/// the rest, in order, are A_1..A_r. amic.first() is the C-system [p, q, m]
/// and amic.second() must be a single matrix D of shape m x q. Output:
///   kron(A_j, D) for each A_j, then kron(B, C_k) for each k
/// of size [r + p, s q, n m]. Valid whenever base and amic are valid; D must
/// be amicable with every C_k, otherwise the cross equations fail.
HurwitzSystem full_doubling(const HurwitzSystem &base, std::size_t b_index,
                            const AmicablePair &amic,
                            std::size_t max_rows = kDefaultMaxRows);

/// [r, s, n] and [r', s', n'] -> [r + r', 2 s s', 2 n n'].
///
/// amicable_doubling turns b into amicable [r' + 1, 2s', 2n'] and
/// [1, 2s', 2n'] systems; full_doubling then consumes a with one matrix
/// designated as B (default: the last). Since full_doubling takes an
/// [(r - 1) + 1, s, n] input, the count lands on (r - 1) + (r' + 1) = r + r'.
/// Asymmetric in its arguments: combine(a, b) and combine(b, a) have the
/// same size but different matrices.
HurwitzSystem combine(const HurwitzSystem &a, const HurwitzSystem &b,
                      std::size_t max_rows = kDefaultMaxRows,
                      std::optional<std::size_t> b_index = std::nullopt);

/// [r, s, n] -> [r + rho(2^(k-1)), 2^k s, 2^k n], as combine(sys,
/// hr_family(k - 1)). Throws DomainError for k = 0.
HurwitzSystem extended_doubling(const HurwitzSystem &sys, unsigned k,
                                std::size_t max_rows = kDefaultMaxRows);

} // namespace sosq

#endif // SOSQ_CONSTRUCTIONS_HPP
