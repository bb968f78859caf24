#include "hnlab/binomial.hpp"

#include <algorithm>

#include "checked.hpp"
#include "hnlab/errors.hpp"

namespace hnlab {

void validate(const Binomial& b) {
  if (b.first.size() != b.second.size()) {
    throw Error(ErrorCode::InvalidArgument, "binomial sides have different arity");
  }
  auto negative = [](Integer e) { return e < 0; };
  if (std::any_of(b.first.begin(), b.first.end(), negative) ||
      std::any_of(b.second.begin(), b.second.end(), negative)) {
    throw Error(ErrorCode::InvalidArgument, "binomial has a negative exponent");
  }
  if (b.first == b.second) {
    throw Error(ErrorCode::InvalidArgument, "binomial has identical monomials");
  }
}

Integer weighted_degree(std::span<const Integer> weights,
                        std::span<const Integer> exponents) {
  if (weights.size() != exponents.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "weight vector has " + std::to_string(weights.size()) +
                    " entries, monomial has " + std::to_string(exponents.size()));
  }
  Integer total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    total = detail::checked_add(total, detail::checked_mul(weights[i], exponents[i]));
  }
  return total;
}

std::string monomial_to_string(std::span<const Integer> e,
                               std::span<const std::string> vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < vars.size() ? vars[i] : "v" + std::to_string(i);
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Binomial& b, std::span<const std::string> variables) {
  return monomial_to_string(b.first, variables) + (b.second_sign < 0 ? "-" : "+") +
         monomial_to_string(b.second, variables);
}

}  // namespace hnlab
