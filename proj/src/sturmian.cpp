#include "sturmlab/sturmian.hpp"

#include <stdexcept>
#include <vector>

namespace sturmlab {

BinaryWord mechanical_word(const QuadraticIrrational& slope, const QuadraticIrrational& intercept,
                           std::size_t len) {
  if (slope.is_rational())
    throw std::invalid_argument("mechanical_word: slope must be irrational");
  if (compare_to_rational(slope, Rational(0)) <= 0 || compare_to_rational(slope, Rational(1)) >= 0)
    throw std::invalid_argument("mechanical_word: slope must lie in (0,1)");
  if (intercept.sign() < 0 || compare_to_rational(intercept, Rational(1)) >= 0)
    throw std::invalid_argument("mechanical_word: intercept must lie in [0,1)");

  BinaryWord w;
  if (len == 0) return w;
  mpz_class prev = floor_linear(1, slope, intercept);
  for (std::size_t i = 0; i < len; ++i) {
    mpz_class next = floor_linear(static_cast<std::uint64_t>(i) + 2, slope, intercept);
    const mpz_class step = next - prev;
    if (step != 0 && step != 1)
      throw std::logic_error("mechanical_word: consecutive floors differ by more than 1");
    w.push_back(static_cast<int>(step.get_si()));
    prev = std::move(next);
  }
  return w;
}

BinaryWord fibonacci_word(std::size_t len) {
  BinaryWord w;
  if (len == 0) return w;
  std::vector<std::uint8_t> cur{0};
  while (cur.size() < len) {
    std::vector<std::uint8_t> next;
    next.reserve(2 * cur.size());
    for (const std::uint8_t s : cur) {
      if (s == 0) {
        next.push_back(0);
        next.push_back(1);
      } else {
        next.push_back(0);
      }
    }
    cur.swap(next);
  }
  for (std::size_t i = 0; i < len; ++i) w.push_back(cur[i]);
  return w;
}

QuadraticIrrational parse_slope(std::string_view text) {
  if (text == "sqrt2-1") return QuadraticIrrational(-1, 1, 1, 2);
  if (text == "fib") return QuadraticIrrational(3, -1, 2, 5);
  return QuadraticIrrational::parse(text);
}

}  // namespace sturmlab
