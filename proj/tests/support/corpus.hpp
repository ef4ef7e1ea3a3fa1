// Named systems shared by the unit, property and acceptance suites.
#ifndef SOSQ_TESTS_CORPUS_HPP
#define SOSQ_TESTS_CORPUS_HPP

#include "sosq/constructions.hpp"
#include "sosq/generators.hpp"

#include <string>
#include <vector>

namespace sosq::testing {

struct Named {
  std::string name;
  HurwitzSystem sys;
};

inline const std::vector<std::size_t> &classical_dims() {
  static const std::vector<std::size_t> dims{1, 2, 4, 8};
  return dims;
}

inline std::vector<Named> generator_corpus(unsigned max_m = 7) {
  std::vector<Named> out;
  for (std::size_t d : classical_dims())
    out.push_back({"classical(" + std::to_string(d) + ")", classical(d)});
  for (unsigned m = 0; m <= max_m; ++m)
    out.push_back({"hr_family(" + std::to_string(m) + ")", hr_family(m)});
  return out;
}

/// Which construction produced a corpus entry.
enum class Rule { Doubling, AmicableDoubling, FullDoubling, Combine, Extended };

struct Built {
  std::string name;
  Rule rule;
  FormulaSize expected;
  HurwitzSystem sys;
};

/// Every construction applied to valid inputs whose output has at most
/// max_n rows. Inputs: classical(1, 2, 4, 8) and hr_family(4).
inline std::vector<Built> construction_corpus(std::size_t max_n = 64) {
  std::vector<Named> inputs;
  for (std::size_t d : classical_dims())
    inputs.push_back({"classical(" + std::to_string(d) + ")", classical(d)});
  inputs.push_back({"hr_family(4)", hr_family(4)});

  std::vector<Built> out;
  auto sz = [](std::size_t r, std::size_t s, std::size_t n) {
    return FormulaSize{r, s, n};
  };

  for (const Named &in : inputs) {
    const FormulaSize f = in.sys.size();
    if (2 * f.n > max_n)
      continue;
    for (std::size_t sp = 0; sp < f.r; ++sp) {
      const std::string tag = "(" + in.name + ", special=" +
                              std::to_string(sp + 1) + ")";
      out.push_back({"doubling" + tag, Rule::Doubling,
                     sz(f.r + 1, 2 * f.s, 2 * f.n), doubling(in.sys, sp)});
      const AmicablePair pair = amicable_doubling(AmicablePair(in.sys), sp);
      out.push_back({"amicable_doubling.first" + tag, Rule::AmicableDoubling,
                     sz(f.r + 1, 2 * f.s, 2 * f.n), pair.first()});
      out.push_back({"amicable_doubling.second" + tag, Rule::AmicableDoubling,
                     sz(1, 2 * f.s, 2 * f.n), *pair.second()});
    }
  }

  // Doubling ladder from the octonions.
  HurwitzSystem rung = classical(8);
  for (int step = 1; step <= 3 && 2 * rung.n() <= max_n; ++step) {
    const FormulaSize f = rung.size();
    rung = doubling(rung);
    out.push_back({"ladder(" + std::to_string(step) + ")", Rule::Doubling,
                   sz(f.r + 1, 2 * f.s, 2 * f.n), rung});
  }

  for (const Named &a : inputs)
    for (const Named &b : inputs) {
      const FormulaSize fa = a.sys.size(), fb = b.sys.size();
      if (2 * fa.n * fb.n > max_n)
        continue;
      out.push_back({"combine(" + a.name + ", " + b.name + ")", Rule::Combine,
                     sz(fa.r + fb.r, 2 * fa.s * fb.s, 2 * fa.n * fb.n),
                     combine(a.sys, b.sys)});
      // Tensor combinator with every choice of B in a.
      const AmicablePair cd = amicable_doubling(AmicablePair(b.sys));
      for (std::size_t bi = 0; bi < fa.r; ++bi)
        out.push_back({"full_doubling(" + a.name + ", B=" +
                           std::to_string(bi + 1) + ", " + b.name + ")",
                       Rule::FullDoubling,
                       sz(fa.r - 1 + cd.p(), fa.s * cd.first().s(),
                          fa.n * cd.first().n()),
                       full_doubling(a.sys, bi, cd)});
    }
  {
    const HurwitzSystem hr2 = hr_family(2);
    out.push_back({"combine(classical(8), hr_family(2))", Rule::Combine,
                   sz(12, 64, 64), combine(classical(8), hr2)});
  }

  for (const Named &in : inputs) {
    const FormulaSize f = in.sys.size();
    for (unsigned k = 1; (std::size_t{1} << k) * f.n <= max_n; ++k) {
      const std::size_t p = std::size_t{1} << k;
      out.push_back({"extended_doubling(" + in.name + ", k=" +
                         std::to_string(k) + ")",
                     Rule::Extended, sz(f.r + rho(p / 2), p * f.s, p * f.n),
                     extended_doubling(in.sys, k)});
    }
  }
  return out;
}

} // namespace sosq::testing

#endif // SOSQ_TESTS_CORPUS_HPP
