#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace invarr {

// Counting results never wrap; every accumulation goes through these.
template <typename T>
T checked_add(T a, T b, const char* what) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error(std::string("integer overflow in ") + what);
  }
  return r;
}

template <typename T>
T checked_sub(T a, T b, const char* what) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error(std::string("integer overflow in ") + what);
  }
  return r;
}

template <typename T>
T checked_mul(T a, T b, const char* what) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error(std::string("integer overflow in ") + what);
  }
  return r;
}

}  // namespace invarr
