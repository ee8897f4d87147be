#include "sturmlab/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sturmlab {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ <= 0) throw std::invalid_argument("Rational: denominator must be positive");
  if (num_ < 0) throw std::invalid_argument("Rational: numerator must be nonnegative");
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::int64_t Rational::ceil_mul(std::int64_t p) const {
  if (p < 0) throw std::invalid_argument("Rational::ceil_mul: negative multiplier");
  if (num_ != 0 && p > (INT64_MAX - den_) / num_)
    throw std::overflow_error("Rational::ceil_mul: overflow");
  return (num_ * p + den_ - 1) / den_;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  // cross multiplication; values are desk scale, no overflow concern after reduction
  const std::int64_t lhs = num_ * o.den_;
  const std::int64_t rhs = o.num_ * den_;
  return lhs <=> rhs;
}

Rational Rational::parse(std::string_view text) {
  const auto parse_int = [](std::string_view s) -> std::int64_t {
    std::int64_t v = 0;
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
      throw std::invalid_argument("Rational: malformed integer '" + std::string(s) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace sturmlab
