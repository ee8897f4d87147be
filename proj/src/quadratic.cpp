#include "sturmlab/quadratic.hpp"

#include <stdexcept>
#include <utility>

namespace sturmlab {

mpz_class isqrt(const mpz_class& x) {
  if (x < 0) throw std::domain_error("isqrt: negative argument");
  if (x == 0) return 0;
  // start above the root, Newton steps descend monotonically
  const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  mpz_class r = mpz_class(1) << (bits / 2 + 1);
  while (true) {
    mpz_class next = (r + x / r) >> 1;
    if (next >= r) break;
    r = std::move(next);
  }
  // certify r^2 <= x < (r+1)^2
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

int sign_of_surd(const mpz_class& a, const mpz_class& b, const mpz_class& d) {
  if (d < 0) throw std::domain_error("sign_of_surd: negative radicand");
  const int sa = sgn(a);
  if (b == 0 || d == 0) return sa;
  const int sb = sgn(b);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 against b^2*d
  const mpz_class lhs = a * a;
  const mpz_class rhs = b * b * d;
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return (c > 0) ? sa : sb;
}

QuadraticIrrational::QuadraticIrrational(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_ == 0) throw std::invalid_argument("QuadraticIrrational: zero denominator");
  if (d_ < 0) throw std::invalid_argument("QuadraticIrrational: negative radicand");
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (d_ == 0) b_ = 0;
  if (b_ == 0) {
    d_ = 0;
  } else {
    const mpz_class r = isqrt(d_);
    if (r * r == d_) {  // fold a perfect-square radicand into the rational part
      a_ += b_ * r;
      b_ = 0;
      d_ = 0;
    }
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

QuadraticIrrational QuadraticIrrational::from_rational(const Rational& q) {
  return QuadraticIrrational(mpz_class(static_cast<long>(q.num())), 0,
                             mpz_class(static_cast<long>(q.den())), 0);
}

bool QuadraticIrrational::operator==(const QuadraticIrrational& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

namespace {

[[noreturn]] void bad_syntax(std::string_view text) {
  throw std::invalid_argument("QuadraticIrrational: malformed text '" + std::string(text) + "'");
}

class Cursor {
public:
  Cursor(std::string_view s) : s_(s) {}
  bool literal(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }
  bool digits(mpz_class& out, bool allow_sign) {
    std::size_t start = pos_;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t first_digit = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (pos_ == first_digit) {
      pos_ = start;
      return false;
    }
    out = mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
    return true;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void advance() { ++pos_; }
  bool done() const { return pos_ == s_.size(); }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadraticIrrational QuadraticIrrational::parse(std::string_view text) {
  Cursor cur(text);
  mpz_class a, b, d, c;
  if (!cur.literal("(")) bad_syntax(text);
  if (!cur.digits(a, true)) bad_syntax(text);
  const char op = cur.peek();
  if (op != '+' && op != '-') bad_syntax(text);
  cur.advance();
  if (!cur.digits(b, false)) bad_syntax(text);
  if (op == '-') b = -b;
  if (!cur.literal("*sqrt(")) bad_syntax(text);
  if (!cur.digits(d, false)) bad_syntax(text);
  if (!cur.literal("))/")) bad_syntax(text);
  if (!cur.digits(c, false)) bad_syntax(text);
  if (!cur.done()) bad_syntax(text);
  if (c == 0) bad_syntax(text);
  return QuadraticIrrational(a, b, c, d);
}

std::string QuadraticIrrational::str() const {
  std::string out = "(";
  out += a_.get_str();
  out += (b_ < 0) ? "-" : "+";
  out += mpz_class(abs(b_)).get_str();
  out += "*sqrt(";
  out += d_.get_str();
  out += "))/";
  out += c_.get_str();
  return out;
}

int compare_to_rational(const QuadraticIrrational& x, const Rational& q) {
  // sign of (a*qden - qnum*c) + (b*qden) * sqrt(d)
  const mpz_class qnum(static_cast<long>(q.num()));
  const mpz_class qden(static_cast<long>(q.den()));
  return sign_of_surd(x.a() * qden - qnum * x.c(), x.b() * qden, x.d());
}

namespace {

// floor(b*sqrt(d)) for signed b
mpz_class floor_sqrt_term(const mpz_class& b, const mpz_class& d) {
  if (b == 0 || d == 0) return 0;
  const mpz_class m = b * b * d;
  const mpz_class r = isqrt(m);
  if (b > 0) return r;
  return (r * r == m) ? mpz_class(-r) : mpz_class(-r - 1);
}

}  // namespace

mpz_class floor_linear(std::uint64_t n, const QuadraticIrrational& gamma,
                       const QuadraticIrrational& beta) {
  if (!gamma.is_rational() && !beta.is_rational() && gamma.d() != beta.d())
    throw std::invalid_argument("floor_linear: mismatched radicands");
  const mpz_class d = gamma.is_rational() ? beta.d() : gamma.d();
  const mpz_class nz(static_cast<unsigned long>(n));
  // n*gamma + beta = (A + B*sqrt(d)) / C
  const mpz_class A = nz * gamma.a() * beta.c() + beta.a() * gamma.c();
  const mpz_class B = nz * gamma.b() * beta.c() + beta.b() * gamma.c();
  const mpz_class C = gamma.c() * beta.c();
  // floor(x/C) = floor(floor(x)/C) for integer C > 0
  const mpz_class t = A + floor_sqrt_term(B, d);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), C.get_mpz_t());
  return q;
}

}  // namespace sturmlab
