#pragma once

#include <concepts>
#include <stdexcept>

namespace schubert {

// Integer arithmetic that refuses to wrap. Every coordinate and multiplicity
// in the engine goes through these helpers.

template <std::integral T>
T checked_add(T a, T b) {
  T out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

template <std::integral T>
T checked_sub(T a, T b) {
  T out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in subtraction");
  return out;
}

template <std::integral T>
T checked_mul(T a, T b) {
  T out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

template <std::integral To, std::integral From>
To checked_cast(From v) {
  To out;
  if (__builtin_add_overflow(v, From{0}, &out)) throw std::overflow_error("integer overflow in narrowing");
  return out;
}

}  // namespace schubert
