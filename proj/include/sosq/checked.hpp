#ifndef SOSQ_CHECKED_HPP
#define SOSQ_CHECKED_HPP

#include "sosq/error.hpp"

#include <cstdint>

namespace sosq {

using Entry = std::int64_t;

inline Entry checked_add(Entry a, Entry b) {
  Entry out;
  if (__builtin_add_overflow(a, b, &out))
    throw ArithmeticError("integer overflow in addition");
  return out;
}

inline Entry checked_mul(Entry a, Entry b) {
  Entry out;
  if (__builtin_mul_overflow(a, b, &out))
    throw ArithmeticError("integer overflow in multiplication");
  return out;
}

inline Entry checked_neg(Entry a) {
  Entry out;
  if (__builtin_sub_overflow(Entry{0}, a, &out))
    throw ArithmeticError("integer overflow in negation");
  return out;
}

// Fused a + b*c, the inner step of every product and expansion loop.
inline Entry checked_fma(Entry a, Entry b, Entry c) {
  return checked_add(a, checked_mul(b, c));
}

} // namespace sosq

#endif // SOSQ_CHECKED_HPP
