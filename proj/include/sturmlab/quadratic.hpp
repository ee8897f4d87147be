#ifndef STURMLAB_QUADRATIC_HPP
#define STURMLAB_QUADRATIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "sturmlab/rational.hpp"

namespace sturmlab {

/// Floor of the square root, Newton iteration with a certified final check
/// r*r <= x < (r+1)*(r+1). Rejects negative input.
mpz_class isqrt(const mpz_class& x);

/// Sign of a + b*sqrt(d) for integers a, b and nonnegative d, by squaring
/// with sign tracking. Returns -1, 0 or 1.
int sign_of_surd(const mpz_class& a, const mpz_class& b, const mpz_class& d);

/// Exact value (a + b*sqrt(d)) / c with c > 0.
///
/// Canonical form: gcd(a, b, c) = 1, and whenever the value is rational
/// (b = 0, d = 0, or d a perfect square) it is stored with b = 0, d = 0.
/// Text form is "(a+b*sqrt(d))/c", e.g. "(-1+1*sqrt(2))/1" for sqrt(2)-1;
/// parsing and printing round-trip exactly.
class QuadraticIrrational {
public:
  QuadraticIrrational() : a_(0), b_(0), c_(1), d_(0) {}
  QuadraticIrrational(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

  static QuadraticIrrational from_rational(const Rational& q);
  static QuadraticIrrational parse(std::string_view text);
  std::string str() const;

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  const mpz_class& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  int sign() const { return sign_of_surd(a_, b_, d_); }

  bool operator==(const QuadraticIrrational& o) const;

private:
  mpz_class a_, b_, c_, d_;
};

/// Exact sign of x - q: -1 (less), 0 (equal), 1 (greater).
int compare_to_rational(const QuadraticIrrational& x, const Rational& q);

/// floor(n*gamma + beta), exactly. gamma and beta must not mix two distinct
/// irrational radicands (rational values pair with anything).
mpz_class floor_linear(std::uint64_t n, const QuadraticIrrational& gamma,
                       const QuadraticIrrational& beta);

}  // namespace sturmlab

#endif
