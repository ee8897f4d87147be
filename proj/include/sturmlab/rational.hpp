#ifndef STURMLAB_RATIONAL_HPP
#define STURMLAB_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sturmlab {

/// Exact nonnegative rational, always kept in lowest terms.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(std::int64_t value) : Rational(value, 1) {}

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// ceil(*this * p), computed as (num*p + den - 1) / den in integers.
  std::int64_t ceil_mul(std::int64_t p) const;

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  /// Accepts "7/3" or "2". Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);
  std::string str() const;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace sturmlab

#endif
