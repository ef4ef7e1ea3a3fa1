#include "sosq/matrix.hpp"

#include <ostream>
#include <string>

namespace sosq {

namespace {

std::size_t checked_area(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0)
    throw DimensionError("matrix dimensions must be positive, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  std::size_t area;
  if (__builtin_mul_overflow(rows, cols, &area))
    throw DimensionError("matrix area overflows size_t");
  return area;
}

std::string shape(const IntMatrix &m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(checked_area(rows, cols), 0) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != checked_area(rows, cols))
    throw DimensionError("expected " + std::to_string(rows * cols) +
                         " entries for a " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " matrix, got " +
                         std::to_string(entries_.size()));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(checked_area(rows_, cols_));
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    out.entries_[i * n + i] = 1;
  return out;
}

Entry IntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw DimensionError("index (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") outside " + shape(*this));
  return (*this)(i, j);
}

IntMatrix IntMatrix::with_entry(std::size_t i, std::size_t j,
                                Entry value) const {
  at(i, j);
  IntMatrix out = *this;
  out.entries_[i * cols_ + j] = value;
  return out;
}

bool IntMatrix::is_zero() const noexcept {
  for (Entry e : entries_)
    if (e != 0)
      return false;
  return true;
}

bool IntMatrix::is_sign_matrix() const noexcept {
  for (Entry e : entries_)
    if (e < -1 || e > 1)
      return false;
  return true;
}

IntMatrix transpose(const IntMatrix &m) {
  std::vector<Entry> out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[j * m.rows() + i] = m(i, j);
  return IntMatrix(m.cols(), m.rows(), std::move(out));
}

IntMatrix multiply(const IntMatrix &m, const IntMatrix &n) {
  if (m.cols() != n.rows())
    throw DimensionError("cannot multiply " + shape(m) + " by " + shape(n));
  std::vector<Entry> out(m.rows() * n.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Entry *dst = out.data() + i * n.cols();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Entry a = m(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < n.cols(); ++j)
        dst[j] = checked_fma(dst[j], a, n(k, j));
    }
  }
  return IntMatrix(m.rows(), n.cols(), std::move(out));
}

IntMatrix transpose_multiply(const IntMatrix &a, const IntMatrix &b) {
  if (a.rows() != b.rows())
    throw DimensionError("cannot form transpose(" + shape(a) + ") * " +
                         shape(b));
  std::vector<Entry> out(a.cols() * b.cols(), 0);
  for (std::size_t k = 0; k < a.rows(); ++k) {
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const Entry x = a(k, i);
      if (x == 0)
        continue;
      Entry *dst = out.data() + i * b.cols();
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Entry y = b(k, j);
        if (y != 0)
          dst[j] = checked_fma(dst[j], x, y);
      }
    }
  }
  return IntMatrix(a.cols(), b.cols(), std::move(out));
}

IntMatrix add(const IntMatrix &a, const IntMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("cannot add " + shape(a) + " and " + shape(b));
  std::vector<Entry> out(a.entries().begin(), a.entries().end());
  auto rhs = b.entries();
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = checked_add(out[k], rhs[k]);
  return IntMatrix(a.rows(), a.cols(), std::move(out));
}

IntMatrix negate(const IntMatrix &m) {
  std::vector<Entry> out(m.entries().begin(), m.entries().end());
  for (Entry &e : out)
    e = checked_neg(e);
  return IntMatrix(m.rows(), m.cols(), std::move(out));
}

IntMatrix kron(const IntMatrix &m, const IntMatrix &t) {
  std::size_t rows, cols, area;
  if (__builtin_mul_overflow(m.rows(), t.rows(), &rows) ||
      __builtin_mul_overflow(m.cols(), t.cols(), &cols) ||
      __builtin_mul_overflow(rows, cols, &area))
    throw DimensionError("Kronecker product shape overflows size_t");
  std::vector<Entry> entries(area, 0);
  for (std::size_t a = 0; a < t.rows(); ++a)
    for (std::size_t b = 0; b < t.cols(); ++b) {
      const Entry scale = t(a, b);
      if (scale == 0)
        continue;
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          entries[(a * m.rows() + i) * cols + (b * m.cols() + j)] =
              checked_mul(scale, m(i, j));
    }
  return IntMatrix(rows, cols, std::move(entries));
}

IntMatrix assemble_blocks(
    std::initializer_list<std::initializer_list<IntMatrix>> grid) {
  if (grid.size() == 0 || grid.begin()->size() == 0)
    throw DimensionError("empty block grid");
  const std::size_t grid_cols = grid.begin()->size();
  std::vector<std::size_t> col_widths;
  for (const IntMatrix &blk : *grid.begin())
    col_widths.push_back(blk.cols());

  std::size_t total_rows = 0, total_cols = 0;
  for (std::size_t w : col_widths)
    total_cols += w;
  for (const auto &grow : grid) {
    if (grow.size() != grid_cols)
      throw DimensionError("ragged block grid");
    const std::size_t h = grow.begin()->rows();
    std::size_t c = 0;
    for (const IntMatrix &blk : grow) {
      if (blk.rows() != h || blk.cols() != col_widths[c++])
        throw DimensionError("block " + shape(blk) + " does not fit grid");
    }
    total_rows += h;
  }

  std::vector<Entry> entries(total_rows * total_cols, 0);
  std::size_t row0 = 0;
  for (const auto &grow : grid) {
    std::size_t col0 = 0;
    for (const IntMatrix &blk : grow) {
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j)
          entries[(row0 + i) * total_cols + col0 + j] = blk(i, j);
      col0 += blk.cols();
    }
    row0 += grow.begin()->rows();
  }
  return IntMatrix(total_rows, total_cols, std::move(entries));
}

std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

} // namespace sosq
