#pragma once

#include <cstdint>
#include <stdexcept>

namespace edhr::detail {

using int128 = __int128;

// Product of two 64-bit values; always fits in 128 bits.
inline int128 mul(std::int64_t a, std::int64_t b) {
  return static_cast<int128>(a) * b;
}

// i * a * b with an explicit overflow check on the final multiply.
inline int128 mul3(std::int64_t i, std::int64_t a, std::int64_t b) {
  int128 out;
  if (__builtin_mul_overflow(static_cast<int128>(i), mul(a, b), &out)) {
    throw std::overflow_error("128-bit overflow in scaled density test");
  }
  return out;
}

}  // namespace edhr::detail
