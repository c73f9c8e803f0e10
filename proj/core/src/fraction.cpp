#include "koutgraph/fraction.hpp"

#include <numeric>
#include <stdexcept>

namespace kout {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("fraction overflow");
  return out;
}

}  // namespace

Fraction::Fraction(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw std::domain_error("fraction with zero denominator");
  const std::uint64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Fraction::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction Fraction::operator*(const Fraction& other) const {
  // Cross-reduce first so intermediate products stay small.
  const std::uint64_t g1 = std::gcd(num_, other.den_);
  const std::uint64_t g2 = std::gcd(other.num_, den_);
  return Fraction(checked_mul(num_ / g1, other.num_ / g2),
                  checked_mul(den_ / g2, other.den_ / g1));
}

Fraction Fraction::pow(std::uint64_t exponent) const {
  Fraction result(1, 1);
  for (std::uint64_t i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const std::uint64_t g = std::gcd(result, i);
    result = checked_mul(result / g, (n - k + i) / (i / g));
  }
  return result;
}

}  // namespace kout
