#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace polylock {

__extension__ typedef __int128 Wide;

// Exact fraction with 64-bit numerator and positive denominator, always in
// lowest terms. Arithmetic throws DomainError when a result leaves that range.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "3", "-2", "3/2", "1.25", "-0.5".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& b) { return *this = *this + b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational reduce(Wide num, Wide den);
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace polylock
