#include "sosq/constructions.hpp"

#include <string>

namespace sosq {

namespace pattern {
const IntMatrix &E() {
  static const IntMatrix m{{1, 0}, {0, 1}};
  return m;
}
const IntMatrix &J() {
  static const IntMatrix m{{0, 1}, {-1, 0}};
  return m;
}
const IntMatrix &H() {
  static const IntMatrix m{{1, 0}, {0, -1}};
  return m;
}
const IntMatrix &S() {
  static const IntMatrix m{{0, 1}, {1, 0}};
  return m;
}
} // namespace pattern

namespace {

void guard_rows(std::size_t rows, std::size_t factor, std::size_t max_rows,
                const char *what) {
  std::size_t out;
  if (__builtin_mul_overflow(rows, factor, &out) || out > max_rows)
    throw ResourceError(std::string(what) + " output would have " +
                        std::to_string(rows) + "*" + std::to_string(factor) +
                        " rows, above the cap of " + std::to_string(max_rows));
}

void check_index(std::size_t index, std::size_t count, const char *what) {
  if (index >= count)
    throw DomainError(std::string(what) + " index " +
                      std::to_string(index + 1) + " outside 1.." +
                      std::to_string(count));
}

std::vector<IntMatrix> doubled_first_row(const HurwitzSystem &sys,
                                         std::size_t special) {
  const IntMatrix &a = sys[special];
  std::vector<IntMatrix> out;
  out.reserve(sys.r() + 1);
  out.push_back(kron(a, pattern::E()));
  out.push_back(kron(a, pattern::J()));
  for (std::size_t j = 0; j < sys.r(); ++j)
    if (j != special)
      out.push_back(kron(sys[j], pattern::H()));
  return out;
}

} // namespace

HurwitzSystem doubling(const HurwitzSystem &sys, std::size_t special,
                       std::size_t max_rows) {
  check_index(special, sys.r(), "special matrix");
  guard_rows(sys.n(), 2, max_rows, "doubling");
  return HurwitzSystem({sys.r() + 1, 2 * sys.s(), 2 * sys.n()},
                       doubled_first_row(sys, special));
}

AmicablePair amicable_doubling(const AmicablePair &pair, std::size_t special,
                               std::size_t max_rows) {
  const HurwitzSystem &first = pair.first();
  check_index(special, first.r(), "special matrix");
  guard_rows(first.n(), 2, max_rows, "amicable doubling");
  const FormulaSize doubled{first.r() + 1, 2 * first.s(), 2 * first.n()};

  std::vector<IntMatrix> second;
  second.reserve(pair.q() + 1);
  second.push_back(kron(first[special], pattern::S()));
  if (pair.second())
    for (const IntMatrix &b : pair.second()->matrices())
      second.push_back(kron(b, pattern::H()));
  const FormulaSize second_size{pair.q() + 1, doubled.s, doubled.n};

  return AmicablePair(
      HurwitzSystem(doubled, doubled_first_row(first, special)),
      HurwitzSystem(second_size, std::move(second)));
}

HurwitzSystem full_doubling(const HurwitzSystem &base, std::size_t b_index,
                            const AmicablePair &amic, std::size_t max_rows) {
  check_index(b_index, base.r(), "B");
  if (!amic.second() || amic.second()->r() != 1)
    throw StructuralError("full doubling needs a second amicable member of "
                          "size [1, q, m], got " +
                          std::to_string(amic.q()) + " matrices");
  const HurwitzSystem &c = amic.first();
  const IntMatrix &d = (*amic.second())[0];
  guard_rows(base.n(), c.n(), max_rows, "full doubling");

  const std::size_t r = base.r() - 1;
  const FormulaSize out_size{r + c.r(), base.s() * c.s(), base.n() * c.n()};
  std::vector<IntMatrix> out;
  out.reserve(out_size.r);
  for (std::size_t j = 0; j < base.r(); ++j)
    if (j != b_index)
      out.push_back(kron(base[j], d));
  for (const IntMatrix &ck : c.matrices())
    out.push_back(kron(base[b_index], ck));
  return HurwitzSystem(out_size, std::move(out));
}

HurwitzSystem combine(const HurwitzSystem &a, const HurwitzSystem &b,
                      std::size_t max_rows,
                      std::optional<std::size_t> b_index) {
  guard_rows(a.n(), 2 * b.n(), max_rows, "combine");
  // C-system [r' + 1, 2s', 2n'] and D-system [1, 2s', 2n'].
  const AmicablePair cd = amicable_doubling(AmicablePair(b), 0, max_rows);
  return full_doubling(a, b_index.value_or(a.r() - 1), cd, max_rows);
}

HurwitzSystem extended_doubling(const HurwitzSystem &sys, unsigned k,
                                std::size_t max_rows) {
  if (k == 0)
    throw DomainError("extended doubling needs k >= 1");
  if (k >= 63)
    throw ResourceError("extended doubling factor 2^" + std::to_string(k) +
                        " is too large");
  guard_rows(sys.n(), std::size_t{1} << k, max_rows, "extended doubling");
  return combine(sys, hr_family(k - 1, max_rows), max_rows);
}

} // namespace sosq
