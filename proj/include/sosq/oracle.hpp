#ifndef SOSQ_ORACLE_HPP
#define SOSQ_ORACLE_HPP

#include "sosq/hurwitz.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sosq {

/// Coefficient tensor of z_k = sum_{i,j} c(k, i, j) x_i y_j, with
/// k < n, i < r, j < s (zero-based).
class BilinearFormula {
public:
  /// Zero tensor.
  explicit BilinearFormula(FormulaSize size);
  /// coeffs in (k, i, j) row-major order; length must be n * r * s.
  BilinearFormula(FormulaSize size, std::vector<Entry> coeffs);

  FormulaSize size() const noexcept { return size_; }
  Entry coeff(std::size_t k, std::size_t i, std::size_t j) const noexcept {
    return coeffs_[(k * size_.r + i) * size_.s + j];
  }
  BilinearFormula with_coeff(std::size_t k, std::size_t i, std::size_t j,
                             Entry value) const;

  friend bool operator==(const BilinearFormula &,
                         const BilinearFormula &) = default;

private:
  FormulaSize size_;
  std::vector<Entry> coeffs_;
};

/// Exponent vector over x_1..x_r, y_1..y_s (x-block first).
using Exponent = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial with exact integer coefficients. Terms are
/// kept in lexicographic exponent order; zero coefficients are never stored.
class Polynomial {
public:
  explicit Polynomial(std::size_t arity) : arity_(arity) {}

  static Polynomial variable(std::size_t arity, std::size_t index);

  std::size_t arity() const noexcept { return arity_; }
  const std::map<Exponent, Entry> &terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Entry coefficient(const Exponent &e) const;

  void add_term(const Exponent &e, Entry c);
  /// *this += a * b, accumulated term by term.
  void add_product(const Polynomial &a, const Polynomial &b);

  Polynomial &operator+=(const Polynomial &other);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) {
    return a += b;
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
  std::size_t arity_;
  std::map<Exponent, Entry> terms_;
};

/// Reads a system as bilinear forms: c(k, i, j) = A_i(k, j).
BilinearFormula system_to_formula(const HurwitzSystem &sys);
/// Inverse of system_to_formula. No validity check.
HurwitzSystem formula_to_system(const BilinearFormula &f);

/// (x_1^2 + ... + x_r^2)(y_1^2 + ... + y_s^2) over r + s variables.
Polynomial expand_lhs(FormulaSize size);
/// z_1^2 + ... + z_n^2 with all squares accumulated into one map.
Polynomial expand_rhs(const BilinearFormula &f);
/// The linear form z_k as a polynomial (degree 2: one x, one y).
Polynomial bilinear_form(const BilinearFormula &f, std::size_t k);

struct MonomialMismatch {
  Exponent monomial;
  Entry lhs = 0;
  Entry rhs = 0;
};

struct IdentityReport {
  FormulaSize size;
  std::optional<MonomialMismatch> mismatch;

  bool passed() const noexcept { return !mismatch.has_value(); }
  explicit operator bool() const noexcept { return passed(); }
  std::string describe() const;
};

/// Expands both sides of the composition identity and compares them
/// monomial by monomial. Reports the lexicographically first monomial whose
/// coefficients differ. Independent of verify_hurwitz: no matrix products.
IdentityReport check_identity(const BilinearFormula &f);

/// "x1^2 y2^2" style rendering of a monomial of arity r + s.
std::string format_monomial(const Exponent &e, std::size_t r);

enum class RenderFormat { Text, Latex };

/// Renders the whole identity, e.g.
///   (x1^2 + x2^2)(y1^2 + y2^2) = (x1 y1 - x2 y2)^2 + (x1 y2 + x2 y1)^2
/// Terms of each z_k appear in (i, j) order. A vanishing z_k renders as
/// (0)^2. Output is deterministic.
std::string render(const BilinearFormula &f,
                   RenderFormat format = RenderFormat::Text);

} // namespace sosq

#endif // SOSQ_ORACLE_HPP
