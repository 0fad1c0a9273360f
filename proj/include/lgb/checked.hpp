#pragma once

#include <cstdint>
#include <stdexcept>

// Overflow-checked 64-bit arithmetic. Series coefficients and candidate
// counts must never wrap silently; anything that would is a hard error.

namespace lgb::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in series arithmetic (add)");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in series arithmetic (sub)");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in series arithmetic (mul)");
  return r;
}

}  // namespace lgb::checked
