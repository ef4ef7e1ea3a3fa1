#ifndef SOSQ_MATRIX_HPP
#define SOSQ_MATRIX_HPP

#include "sosq/checked.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace sosq {

/// Dense row-major matrix of exact signed integers.
///
/// Values are immutable once built; every operation below is a pure function
/// returning a fresh matrix. Arithmetic is checked, so an overflow raises
/// ArithmeticError instead of wrapping. Both dimensions are at least 1.
class IntMatrix {
public:
  /// Zero matrix.
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);
  /// Row-list literal, e.g. IntMatrix{{0, -1}, {1, 0}}.
  IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Entry operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }
  /// Bounds-checked access; throws DimensionError.
  Entry at(std::size_t i, std::size_t j) const;

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::span<const Entry> row(std::size_t i) const noexcept {
    return std::span<const Entry>(entries_).subspan(i * cols_, cols_);
  }

  /// Copy with entry (i, j) replaced.
  IntMatrix with_entry(std::size_t i, std::size_t j, Entry value) const;

  bool is_zero() const noexcept;
  /// True when every entry lies in {-1, 0, 1}.
  bool is_sign_matrix() const noexcept;

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Entry> entries_;
};

IntMatrix transpose(const IntMatrix &m);
IntMatrix multiply(const IntMatrix &m, const IntMatrix &n);
/// transpose(a) * b without materializing the transpose; skips zero entries,
/// which makes the Hurwitz checks on signed-permutation-like systems cheap.
IntMatrix transpose_multiply(const IntMatrix &a, const IntMatrix &b);
IntMatrix add(const IntMatrix &a, const IntMatrix &b);
IntMatrix negate(const IntMatrix &m);

/// Kronecker product in block-scaling form: the result is a grid of
/// t.rows() x t.cols() blocks and block (a, b) equals t(a, b) * m, i.e.
///
///   entry (a * m.rows() + i, b * m.cols() + j) = t(a, b) * m(i, j).
///
/// This is operand-swapped relative to the textbook definition, so
/// kron(M, [[a, b], [c, d]]) reads literally as [[aM, bM], [cM, dM]].
/// The mixed-product law kron(M, T) * kron(M', T') = kron(MM', TT') and
/// transpose(kron(M, T)) = kron(transpose(M), transpose(T)) still hold.
IntMatrix kron(const IntMatrix &m, const IntMatrix &t);

/// Assembles a rectangular grid of blocks. Blocks in one grid row must share
/// a row count, blocks in one grid column must share a column count.
IntMatrix assemble_blocks(
    std::initializer_list<std::initializer_list<IntMatrix>> grid);

std::ostream &operator<<(std::ostream &os, const IntMatrix &m);

} // namespace sosq

#endif // SOSQ_MATRIX_HPP
