#include "sosq/hurwitz.hpp"

#include <sstream>

namespace sosq {

std::string FormulaSize::to_string() const {
  return "[" + std::to_string(r) + ", " + std::to_string(s) + ", " +
         std::to_string(n) + "]";
}

namespace {

FormulaSize infer_size(const std::vector<IntMatrix> &matrices) {
  if (matrices.empty())
    throw StructuralError("a Hurwitz system needs at least one matrix");
  return {matrices.size(), matrices.front().cols(), matrices.front().rows()};
}

} // namespace

HurwitzSystem::HurwitzSystem(std::vector<IntMatrix> matrices)
    : size_(infer_size(matrices)), matrices_(std::move(matrices)) {
  validate();
}

HurwitzSystem::HurwitzSystem(FormulaSize size, std::vector<IntMatrix> matrices)
    : size_(size), matrices_(std::move(matrices)) {
  validate();
}

void HurwitzSystem::validate() const {
  if (size_.r == 0 || size_.s == 0 || size_.n == 0)
    throw StructuralError("formula size " + size_.to_string() +
                          " must be positive");
  if (matrices_.size() != size_.r)
    throw StructuralError("size " + size_.to_string() + " expects " +
                          std::to_string(size_.r) + " matrices, got " +
                          std::to_string(matrices_.size()));
  for (std::size_t i = 0; i < matrices_.size(); ++i)
    if (matrices_[i].rows() != size_.n || matrices_[i].cols() != size_.s)
      throw StructuralError(
          "matrix " + std::to_string(i + 1) + " is " +
          std::to_string(matrices_[i].rows()) + "x" +
          std::to_string(matrices_[i].cols()) + ", size " +
          size_.to_string() + " requires " + std::to_string(size_.n) + "x" +
          std::to_string(size_.s));
}

bool HurwitzSystem::is_sign_system() const noexcept {
  for (const IntMatrix &m : matrices_)
    if (!m.is_sign_matrix())
      return false;
  return true;
}

AmicablePair::AmicablePair(HurwitzSystem first,
                           std::optional<HurwitzSystem> second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (second_ && (second_->s() != first_.s() || second_->n() != first_.n()))
    throw StructuralError("amicable members " + first_.size().to_string() +
                          " and " + second_->size().to_string() +
                          " do not share (s, n)");
}

namespace {

// Compares `actual` against `expected` (identity or zero) and fills the
// location of the first mismatch.
bool residual_matches(const IntMatrix &actual, bool expect_identity,
                      EquationFailure &f) {
  for (std::size_t a = 0; a < actual.rows(); ++a)
    for (std::size_t b = 0; b < actual.cols(); ++b) {
      const Entry want = (expect_identity && a == b) ? 1 : 0;
      if (actual(a, b) != want) {
        f.row = a;
        f.col = b;
        f.actual = actual(a, b);
        f.expected = want;
        return false;
      }
    }
  return true;
}

std::optional<EquationFailure> first_failure(const HurwitzSystem &sys,
                                             int member) {
  const auto mats = sys.matrices();
  for (std::size_t i = 0; i < mats.size(); ++i) {
    EquationFailure f{Equation::Norm, member, i, i};
    if (!residual_matches(transpose_multiply(mats[i], mats[i]), true, f))
      return f;
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      const IntMatrix ij = transpose_multiply(mats[i], mats[j]);
      // A_j^t A_i is the transpose of A_i^t A_j.
      IntMatrix sum = add(ij, transpose(ij));
      EquationFailure g{Equation::Anticommute, member, i, j};
      if (!residual_matches(sum, false, g))
        return g;
    }
  }
  return std::nullopt;
}

} // namespace

VerifyReport verify_hurwitz(const HurwitzSystem &sys) {
  return {first_failure(sys, 0)};
}

VerifyReport verify_amicable(const AmicablePair &pair) {
  if (auto f = first_failure(pair.first(), 0))
    return {f};
  if (!pair.second())
    return {};
  if (auto f = first_failure(*pair.second(), 1))
    return {f};
  const auto as = pair.first().matrices();
  const auto bs = pair.second()->matrices();
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t k = 0; k < bs.size(); ++k) {
      const IntMatrix ab = transpose_multiply(as[i], bs[k]);
      // Amicable iff A^t B is symmetric, since B^t A = (A^t B)^t.
      const IntMatrix diff = add(ab, negate(transpose(ab)));
      EquationFailure f{Equation::Amicable, 0, i, k};
      if (!residual_matches(diff, false, f))
        return {f};
    }
  return {};
}

std::string VerifyReport::describe() const {
  if (!failure)
    return "pass: all equations hold";
  const EquationFailure &f = *failure;
  const char *sys = f.member == 0 ? "A" : "B";
  std::ostringstream os;
  os << "fail: ";
  switch (f.equation) {
  case Equation::Norm:
    os << sys << f.i + 1 << "^t " << sys << f.i + 1 << " != 1_s";
    break;
  case Equation::Anticommute:
    os << sys << f.i + 1 << "^t " << sys << f.j + 1 << " + " << sys << f.j + 1
       << "^t " << sys << f.i + 1 << " != 0 at pair (" << f.i + 1 << ", "
       << f.j + 1 << ")";
    break;
  case Equation::Amicable:
    os << "A" << f.i + 1 << "^t B" << f.j + 1 << " != B" << f.j + 1 << "^t A"
       << f.i + 1 << " at pair (" << f.i + 1 << ", " << f.j + 1 << ")";
    break;
  }
  os << "; residual entry (" << f.row + 1 << ", " << f.col + 1 << ") is "
     << f.actual << ", expected " << f.expected;
  return os.str();
}

std::uint64_t rho(std::uint64_t n) {
  if (n == 0)
    throw DomainError("rho is defined for n >= 1");
  // Odd part does not matter.
  std::uint64_t power = n & (~n + 1);
  std::uint64_t sixteens = 0;
  while (power >= 16) {
    power /= 16;
    ++sixteens;
  }
  // power is now one of the base cases 1, 2, 4, 8.
  return 8 * sixteens + power;
}

} // namespace sosq
