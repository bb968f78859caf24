#pragma once

#include <string>

#include "hnlab/errors.hpp"
#include "hnlab/semigroup.hpp"

namespace hnlab::detail {

inline Integer checked_mul(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow,
                "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

inline Integer checked_add(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow,
                "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline Integer checked_sub(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow,
                "integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

}  // namespace hnlab::detail
