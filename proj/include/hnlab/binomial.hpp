#pragma once

#include <span>
#include <string>
#include <vector>

#include "hnlab/semigroup.hpp"

namespace hnlab {

/// Exponent vector over a fixed, positionally indexed variable list.
using ExponentVector = std::vector<Integer>;

/// first +/- second, with both monomials monic. Only the two exponent vectors
/// matter for weight homogeneity; the sign is kept for display.
struct Binomial {
  ExponentVector first;
  ExponentVector second;
  int second_sign = -1;

  std::size_t arity() const noexcept { return first.size(); }

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Throws InvalidArgument unless both sides have the same length, all
/// exponents are non-negative and the two monomials differ.
void validate(const Binomial& b);

/// Dot product of a weight vector with an exponent vector; throws
/// DimensionMismatch when the lengths differ and Overflow on overflow.
Integer weighted_degree(std::span<const Integer> weights,
                        std::span<const Integer> exponents);

/// Renders e.g. "x^3*y" over the given variable names; "1" for the empty monomial.
std::string monomial_to_string(std::span<const Integer> exponents,
                               std::span<const std::string> variables);

/// Renders e.g. "x^3-y*z" over the given variable names.
std::string to_string(const Binomial& b, std::span<const std::string> variables);

}  // namespace hnlab
