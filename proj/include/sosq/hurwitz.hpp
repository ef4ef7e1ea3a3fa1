#ifndef SOSQ_HURWITZ_HPP
#define SOSQ_HURWITZ_HPP

#include "sosq/matrix.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sosq {

/// Size [r, s, n] of a composition formula
///   (x_1^2 + ... + x_r^2)(y_1^2 + ... + y_s^2) = z_1^2 + ... + z_n^2.
/// r counts the matrices, s their columns, n their rows. All three >= 1;
/// s <= n is not enforced.
struct FormulaSize {
  std::size_t r = 1;
  std::size_t s = 1;
  std::size_t n = 1;

  friend auto operator<=>(const FormulaSize &, const FormulaSize &) = default;
  std::string to_string() const;
};

/// r matrices A_1..A_r of shape n x s claimed to satisfy
///   A_i^t A_i = 1_s  and  A_i^t A_j + A_j^t A_i = 0  (i != j).
///
/// Construction only checks shapes (StructuralError); validity is the
/// separate predicate verify_hurwitz.
class HurwitzSystem {
public:
  explicit HurwitzSystem(std::vector<IntMatrix> matrices);
  HurwitzSystem(FormulaSize size, std::vector<IntMatrix> matrices);

  FormulaSize size() const noexcept { return size_; }
  std::size_t r() const noexcept { return size_.r; }
  std::size_t s() const noexcept { return size_.s; }
  std::size_t n() const noexcept { return size_.n; }

  std::span<const IntMatrix> matrices() const noexcept { return matrices_; }
  const IntMatrix &operator[](std::size_t i) const noexcept {
    return matrices_[i];
  }

  bool is_sign_system() const noexcept;

  friend bool operator==(const HurwitzSystem &,
                         const HurwitzSystem &) = default;

private:
  void validate() const;

  FormulaSize size_;
  std::vector<IntMatrix> matrices_;
};

/// Two systems of sizes [p, s, n] and [q, s, n]. The second may be empty
/// (q = 0); an empty system only exists as a pair member.
class AmicablePair {
public:
  explicit AmicablePair(HurwitzSystem first,
                        std::optional<HurwitzSystem> second = std::nullopt);

  const HurwitzSystem &first() const noexcept { return first_; }
  const std::optional<HurwitzSystem> &second() const noexcept {
    return second_;
  }
  std::size_t p() const noexcept { return first_.r(); }
  std::size_t q() const noexcept { return second_ ? second_->r() : 0; }

private:
  HurwitzSystem first_;
  std::optional<HurwitzSystem> second_;
};

/// Which Hurwitz or amicability equation broke.
enum class Equation {
  Norm,        ///< A_i^t A_i = 1_s
  Anticommute, ///< A_i^t A_j + A_j^t A_i = 0
  Amicable,    ///< A_i^t B_k = B_k^t A_i
};

/// First failing equation. Indices are zero-based; `member` is 0 or 1 for
/// the first/second system of a pair (always 0 for a single system). For
/// Amicable, `i` indexes the first system and `j` the second. `row`, `col`
/// locate the first wrong entry of the s x s residual.
struct EquationFailure {
  Equation equation = Equation::Norm;
  int member = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  Entry actual = 0;
  Entry expected = 0;

  friend bool operator==(const EquationFailure &,
                         const EquationFailure &) = default;
};

struct VerifyReport {
  std::optional<EquationFailure> failure;

  bool passed() const noexcept { return !failure.has_value(); }
  explicit operator bool() const noexcept { return passed(); }
  /// One-line human-readable summary with 1-based indices.
  std::string describe() const;
};

/// Checks the Hurwitz Equations in lexicographic (i, j) order, i <= j, and
/// reports the first failure.
VerifyReport verify_hurwitz(const HurwitzSystem &sys);

/// Both members pass verify_hurwitz and A_i^t B_k = B_k^t A_i for all i, k.
/// Member checks run first (first system, then second), then cross pairs.
VerifyReport verify_amicable(const AmicablePair &pair);

/// Hurwitz-Radon function: rho(2^m * odd) = rho(2^m), rho(16 n) = 8 + rho(n),
/// rho(n) = n for n in {1, 2, 4, 8}. Throws DomainError for n = 0.
std::uint64_t rho(std::uint64_t n);

} // namespace sosq

#endif // SOSQ_HURWITZ_HPP
