#include "sosq/oracle.hpp"

#include <sstream>

namespace sosq {

BilinearFormula::BilinearFormula(FormulaSize size)
    : size_(size), coeffs_(size.n * size.r * size.s, 0) {}

BilinearFormula::BilinearFormula(FormulaSize size, std::vector<Entry> coeffs)
    : size_(size), coeffs_(std::move(coeffs)) {
  if (size_.r == 0 || size_.s == 0 || size_.n == 0)
    throw StructuralError("formula size " + size_.to_string() +
                          " must be positive");
  if (coeffs_.size() != size_.n * size_.r * size_.s)
    throw StructuralError("coefficient tensor for " + size_.to_string() +
                          " needs " +
                          std::to_string(size_.n * size_.r * size_.s) +
                          " entries, got " + std::to_string(coeffs_.size()));
}

BilinearFormula BilinearFormula::with_coeff(std::size_t k, std::size_t i,
                                            std::size_t j, Entry value) const {
  if (k >= size_.n || i >= size_.r || j >= size_.s)
    throw DimensionError("coefficient index outside " + size_.to_string());
  BilinearFormula out = *this;
  out.coeffs_[(k * size_.r + i) * size_.s + j] = value;
  return out;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  if (index >= arity)
    throw DimensionError("variable index outside polynomial arity");
  Polynomial p(arity);
  Exponent e(arity, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), 1);
  return p;
}

Entry Polynomial::coefficient(const Exponent &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Exponent &e, Entry c) {
  if (e.size() != arity_)
    throw DimensionError("exponent arity mismatch");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted)
    return;
  it->second = checked_add(it->second, c);
  if (it->second == 0)
    terms_.erase(it);
}

void Polynomial::add_product(const Polynomial &a, const Polynomial &b) {
  if (a.arity_ != arity_ || b.arity_ != arity_)
    throw DimensionError("polynomial arity mismatch");
  Exponent e(arity_);
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < arity_; ++v) {
        const unsigned sum = unsigned{ea[v]} + unsigned{eb[v]};
        if (sum > 0xFFFF)
          throw ArithmeticError("exponent overflow");
        e[v] = static_cast<std::uint16_t>(sum);
      }
      add_term(e, checked_mul(ca, cb));
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  if (other.arity_ != arity_)
    throw DimensionError("polynomial arity mismatch");
  for (const auto &[e, c] : other.terms_)
    add_term(e, c);
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  Polynomial out(a.arity_);
  out.add_product(a, b);
  return out;
}

BilinearFormula system_to_formula(const HurwitzSystem &sys) {
  const FormulaSize sz = sys.size();
  std::vector<Entry> coeffs(sz.n * sz.r * sz.s);
  for (std::size_t k = 0; k < sz.n; ++k)
    for (std::size_t i = 0; i < sz.r; ++i)
      for (std::size_t j = 0; j < sz.s; ++j)
        coeffs[(k * sz.r + i) * sz.s + j] = sys[i](k, j);
  return BilinearFormula(sz, std::move(coeffs));
}

HurwitzSystem formula_to_system(const BilinearFormula &f) {
  const FormulaSize sz = f.size();
  std::vector<IntMatrix> matrices;
  matrices.reserve(sz.r);
  for (std::size_t i = 0; i < sz.r; ++i) {
    std::vector<Entry> entries(sz.n * sz.s);
    for (std::size_t k = 0; k < sz.n; ++k)
      for (std::size_t j = 0; j < sz.s; ++j)
        entries[k * sz.s + j] = f.coeff(k, i, j);
    matrices.emplace_back(sz.n, sz.s, std::move(entries));
  }
  return HurwitzSystem(sz, std::move(matrices));
}

Polynomial expand_lhs(FormulaSize size) {
  const std::size_t arity = size.r + size.s;
  Polynomial xs(arity), ys(arity);
  for (std::size_t i = 0; i < size.r; ++i) {
    const Polynomial x = Polynomial::variable(arity, i);
    xs.add_product(x, x);
  }
  for (std::size_t j = 0; j < size.s; ++j) {
    const Polynomial y = Polynomial::variable(arity, size.r + j);
    ys.add_product(y, y);
  }
  return xs * ys;
}

Polynomial bilinear_form(const BilinearFormula &f, std::size_t k) {
  const FormulaSize sz = f.size();
  const std::size_t arity = sz.r + sz.s;
  Polynomial z(arity);
  Exponent e(arity, 0);
  for (std::size_t i = 0; i < sz.r; ++i)
    for (std::size_t j = 0; j < sz.s; ++j) {
      const Entry c = f.coeff(k, i, j);
      if (c == 0)
        continue;
      e[i] = 1;
      e[sz.r + j] = 1;
      z.add_term(e, c);
      e[i] = 0;
      e[sz.r + j] = 0;
    }
  return z;
}

Polynomial expand_rhs(const BilinearFormula &f) {
  Polynomial rhs(f.size().r + f.size().s);
  for (std::size_t k = 0; k < f.size().n; ++k) {
    const Polynomial z = bilinear_form(f, k);
    rhs.add_product(z, z);
  }
  return rhs;
}

IdentityReport check_identity(const BilinearFormula &f) {
  const Polynomial lhs = expand_lhs(f.size());
  const Polynomial rhs = expand_rhs(f);
  IdentityReport report{f.size(), std::nullopt};

  auto l = lhs.terms().begin(), le = lhs.terms().end();
  auto r = rhs.terms().begin(), re = rhs.terms().end();
  while (l != le || r != re) {
    if (r == re || (l != le && l->first < r->first)) {
      report.mismatch = MonomialMismatch{l->first, l->second, 0};
      break;
    }
    if (l == le || r->first < l->first) {
      report.mismatch = MonomialMismatch{r->first, 0, r->second};
      break;
    }
    if (l->second != r->second) {
      report.mismatch = MonomialMismatch{l->first, l->second, r->second};
      break;
    }
    ++l;
    ++r;
  }
  return report;
}

std::string format_monomial(const Exponent &e, std::size_t r) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0)
      continue;
    if (!out.empty())
      out += ' ';
    out += v < r ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - r + 1);
    if (e[v] > 1)
      out += "^" + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

std::string IdentityReport::describe() const {
  if (!mismatch)
    return "pass: identity holds for " + size.to_string();
  std::ostringstream os;
  os << "fail: coefficient of " << format_monomial(mismatch->monomial, size.r)
     << " is " << mismatch->lhs << " on the left and " << mismatch->rhs
     << " on the right";
  return os.str();
}

namespace {

std::string var(char name, std::size_t index, RenderFormat fmt) {
  const std::string idx = std::to_string(index + 1);
  if (fmt == RenderFormat::Text)
    return name + idx;
  return std::string(1, name) + "_" + (idx.size() > 1 ? "{" + idx + "}" : idx);
}

std::string sum_of_squares(char name, std::size_t count, RenderFormat fmt) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i)
    out += (i ? " + " : "") + var(name, i, fmt) + "^2";
  return out;
}

std::string render_form(const BilinearFormula &f, std::size_t k,
                        RenderFormat fmt) {
  std::string out;
  const char *sep = fmt == RenderFormat::Text ? " " : "";
  for (std::size_t i = 0; i < f.size().r; ++i)
    for (std::size_t j = 0; j < f.size().s; ++j) {
      const Entry c = f.coeff(k, i, j);
      if (c == 0)
        continue;
      const Entry mag = c < 0 ? -c : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (mag != 1)
        out += std::to_string(mag) + " ";
      out += var('x', i, fmt) + sep + var('y', j, fmt);
    }
  return out.empty() ? "0" : out;
}

} // namespace

std::string render(const BilinearFormula &f, RenderFormat format) {
  const FormulaSize sz = f.size();
  const bool tex = format == RenderFormat::Latex;
  const std::string open = tex ? "\\left(" : "(";
  const std::string close = tex ? "\\right)" : ")";

  std::string out = open + sum_of_squares('x', sz.r, format) + close +
                    (tex ? " \\cdot " : "") + open +
                    sum_of_squares('y', sz.s, format) + close + " = ";
  for (std::size_t k = 0; k < sz.n; ++k)
    out += (k ? " + " : "") + open + render_form(f, k, format) + close + "^2";
  return out;
}

} // namespace sosq
