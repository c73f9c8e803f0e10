#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace kout {

/// Nonnegative exact rational in lowest terms. Arithmetic throws
/// std::overflow_error instead of wrapping.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string to_string() const;  // "num/den", or "num" when den == 1

  Fraction operator*(const Fraction& other) const;
  Fraction pow(std::uint64_t exponent) const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.to_string();
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace kout
