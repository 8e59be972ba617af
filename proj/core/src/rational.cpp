#include "polylock/rational.hpp"

#include <cctype>
#include <limits>

#include "polylock/error.hpp"

namespace polylock {
namespace {

Wide gcd128(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (text.empty()) throw DomainError("malformed number '" + std::string(whole) + "'");
  Wide v = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("malformed number '" + std::string(whole) + "'");
    }
    v = v * 10 + (c - '0');
    if (!fits(v)) throw DomainError("number out of range '" + std::string(whole) + "'");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  *this = reduce(num, den);
}

Rational Rational::reduce(Wide num, Wide den) {
  if (den == 0) throw DomainError("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw DomainError("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational r;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    r = Rational(parse_int(text.substr(0, slash), whole), parse_int(text.substr(slash + 1), whole));
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 18) throw DomainError("too many decimals in '" + std::string(whole) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t ip = dot == 0 ? 0 : parse_int(text.substr(0, dot), whole);
    const std::int64_t fp = frac.empty() ? 0 : parse_int(frac, whole);
    if (dot == 0 && frac.empty()) throw DomainError("malformed number '" + std::string(whole) + "'");
    r = reduce(static_cast<Wide>(ip) * scale + fp, scale);
  } else {
    r = Rational(parse_int(text, whole));
  }
  return negative ? -r : r;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::reduce(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                          static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::reduce(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return Rational::reduce(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
}

Rational Rational::operator-() const { return reduce(-static_cast<Wide>(num_), den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Wide l = static_cast<Wide>(a.num_) * b.den_;
  const Wide r = static_cast<Wide>(b.num_) * a.den_;
  return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace polylock
