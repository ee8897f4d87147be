#include "sturmlab/words.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace sturmlab {

namespace {

template <class Seq>
bool has_period_impl(const Seq& w, std::size_t n, std::size_t p) {
  if (p == 0) throw std::invalid_argument("has_period: period must be positive");
  if (p >= n) return true;
  for (std::size_t i = 0; i + p < n; ++i)
    if (w[i] != w[i + p]) return false;
  return true;
}

template <class Seq>
std::size_t least_period_impl(const Seq& w, std::size_t n) {
  if (n == 0) throw std::invalid_argument("least_period: empty word");
  for (std::size_t p = 1; p < n; ++p)
    if (has_period_impl(w, n, p)) return p;
  return n;
}

}  // namespace

bool has_period(const BinaryWord& w, std::size_t p) { return has_period_impl(w, w.size(), p); }
bool has_period(std::string_view w, std::size_t p) { return has_period_impl(w, w.size(), p); }

std::size_t least_period(const BinaryWord& w) { return least_period_impl(w, w.size()); }
std::size_t least_period(std::string_view w) { return least_period_impl(w, w.size()); }

Rational exponent_of(const BinaryWord& w) {
  return Rational(static_cast<std::int64_t>(w.size()),
                  static_cast<std::int64_t>(least_period(w)));
}
Rational exponent_of(std::string_view w) {
  return Rational(static_cast<std::int64_t>(w.size()),
                  static_cast<std::int64_t>(least_period(w)));
}

namespace {
template <class Seq>
bool is_e_power_impl(const Seq& w, std::size_t n, const Rational& e) {
  if (n == 0) throw std::invalid_argument("is_e_power: empty word");
  if (e.num() < e.den()) throw std::invalid_argument("is_e_power: exponent must be >= 1");
  const std::size_t p = least_period_impl(w, n);
  return e.ceil_mul(static_cast<std::int64_t>(p)) == static_cast<std::int64_t>(n);
}
}  // namespace

bool is_e_power(const BinaryWord& w, const Rational& e) { return is_e_power_impl(w, w.size(), e); }
bool is_e_power(std::string_view w, const Rational& e) { return is_e_power_impl(w, w.size(), e); }

bool is_balanced(const BinaryWord& w) {
  const std::size_t n = w.size();
  if (n < 2) return true;
  std::vector<std::uint32_t> ones(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ones[i + 1] = ones[i] + static_cast<std::uint32_t>(w[i]);
  for (std::size_t len = 1; len < n; ++len) {
    std::uint32_t mn = ones[len] - ones[0];
    std::uint32_t mx = mn;
    for (std::size_t i = 1; i + len <= n; ++i) {
      const std::uint32_t c = ones[i + len] - ones[i];
      mn = std::min(mn, c);
      mx = std::max(mx, c);
      if (mx - mn > 1) return false;
    }
  }
  return true;
}

std::size_t subword_complexity(const BinaryWord& w, std::size_t len) {
  const std::size_t n = w.size();
  if (len > n) throw std::invalid_argument("subword_complexity: factor length exceeds word length");
  if (len == 0) return 1;
  if (len <= 64) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(n - len + 2);
    std::uint64_t window = 0;
    const std::uint64_t keep = len == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
    for (std::size_t i = 0; i < n; ++i) {
      window = ((window << 1) | static_cast<std::uint64_t>(w[i])) & keep;
      if (i + 1 >= len) seen.insert(window);
    }
    return seen.size();
  }
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i + len <= n; ++i) seen.insert(w.substr(i, len).str());
  return seen.size();
}

// ---------------------------------------------------------------------------
// Bit-parallel ending scan
// ---------------------------------------------------------------------------

namespace {

// dst[j] = bits (j + shift) of src, for j < nd; src has ns limbs
void shift_down(const std::uint64_t* src, std::size_t ns, std::uint64_t* dst, std::size_t nd,
                std::size_t shift) {
  const std::size_t q = shift >> 6;
  const unsigned r = static_cast<unsigned>(shift & 63);
  for (std::size_t j = 0; j < nd; ++j) {
    std::uint64_t v = 0;
    if (j + q < ns) {
      v = src[j + q] >> r;
      if (r && j + q + 1 < ns) v |= src[j + q + 1] << (64 - r);
    }
    dst[j] = v;
  }
}

// a &= (a << shift) with zero fill, in place (bit j moves to j + shift)
void and_self_shift_up(std::uint64_t* a, std::size_t n, std::size_t shift) {
  const std::size_t q = shift >> 6;
  const unsigned r = static_cast<unsigned>(shift & 63);
  for (std::size_t j = n; j-- > 0;) {
    std::uint64_t v = 0;
    if (j >= q) {
      v = a[j - q] << r;
      if (r && j > q) v |= a[j - q - 1] >> (64 - r);
    }
    a[j] &= v;
  }
}

// dst |= (src << shift); dst has nd limbs, src has ns
void or_shift_up(std::uint64_t* dst, std::size_t nd, const std::uint64_t* src, std::size_t ns,
                 std::size_t shift) {
  const std::size_t q = shift >> 6;
  const unsigned r = static_cast<unsigned>(shift & 63);
  for (std::size_t j = 0; j < ns; ++j) {
    const std::uint64_t v = src[j];
    if (!v) continue;
    const std::size_t t = j + q;
    if (t < nd) dst[t] |= (r ? v << r : v);
    if (r && t + 1 < nd) dst[t + 1] |= v >> (64 - r);
  }
}

void set_bit_range(std::uint64_t* a, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i <= hi; ++i) a[i >> 6] |= std::uint64_t{1} << (i & 63);
}

// largest p with ceil(e*p) <= len, clamped by max_period; 0 when none
std::size_t period_scan_bound(std::size_t len, const Rational& e,
                              std::optional<std::size_t> max_period) {
  if (len == 0) return 0;
  // ceil(e*p) <= len implies p <= len/e; add one slot of slack, the scan
  // breaks as soon as ceil(e*p) exceeds len anyway
  std::size_t hi = (len * static_cast<std::size_t>(e.den())) / static_cast<std::size_t>(e.num()) + 1;
  if (max_period) hi = std::min(hi, *max_period);
  return hi;
}

}  // namespace

void EndingScanner::scan(std::span<const std::uint64_t> word, std::size_t len, const Rational& e,
                         std::optional<std::size_t> max_period) {
  if (e.num() < e.den()) throw std::invalid_argument("EndingScanner: exponent must be >= 1");
  if (max_period && *max_period == 0)
    throw std::invalid_argument("EndingScanner: max_period must be positive");
  len_ = len;
  nlimbs_ = (len + 63) / 64;
  endings_.assign(nlimbs_, 0);
  if (len == 0) return;
  win_.resize(nlimbs_);
  tmp_.resize(nlimbs_);

  const std::size_t p_hi = period_scan_bound(len, e, max_period);
  for (std::size_t p = 1; p <= p_hi; ++p) {
    const std::size_t L = static_cast<std::size_t>(e.ceil_mul(static_cast<std::int64_t>(p)));
    if (L > len) break;  // ceil(e*p) is nondecreasing in p
    const std::size_t T = L - p;
    if (T == 0) {
      // e == 1: any factor of length p has period p
      set_bit_range(endings_.data(), L - 1, len - 1);
      continue;
    }
    const std::size_t dl = len - p;  // positions i with both w[i], w[i+p] defined
    if (T > dl) continue;
    const std::size_t dn = (dl + 63) / 64;
    shift_down(word.data(), word.size(), tmp_.data(), dn, p);
    for (std::size_t j = 0; j < dn; ++j) win_[j] = ~(tmp_[j] ^ word[j]);
    if (dl & 63) win_[dn - 1] &= (std::uint64_t{1} << (dl & 63)) - 1;
    // shrink the match window to T consecutive positions ending at each bit
    std::size_t cover = 1;
    while (cover < T) {
      const std::size_t s = std::min(cover, T - cover);
      and_self_shift_up(win_.data(), dn, s);
      cover += s;
    }
    or_shift_up(endings_.data(), nlimbs_, win_.data(), dn, p);
  }
}

std::size_t EndingScanner::ending_count() const {
  std::size_t c = 0;
  for (std::size_t j = 0; j < nlimbs_; ++j) c += static_cast<std::size_t>(std::popcount(endings_[j]));
  return c;
}

void EndingScanner::extract_positions(std::vector<std::size_t>& out) const {
  out.clear();
  for (std::size_t j = 0; j < nlimbs_; ++j) {
    std::uint64_t v = endings_[j];
    while (v) {
      out.push_back(64 * j + static_cast<std::size_t>(std::countr_zero(v)));
      v &= v - 1;
    }
  }
}

EndingScanner::GapSummary EndingScanner::gap_summary() const {
  GapSummary s;
  std::size_t prev = 0;
  bool have_prev = false;
  for (std::size_t j = 0; j < nlimbs_; ++j) {
    std::uint64_t v = endings_[j];
    while (v) {
      const std::size_t pos = 64 * j + static_cast<std::size_t>(std::countr_zero(v));
      v &= v - 1;
      ++s.endings;
      if (have_prev) s.max_gap = std::max(s.max_gap, pos - prev);
      prev = pos;
      have_prev = true;
    }
  }
  return s;
}

void EndingScanner::collect_gaps(std::set<std::size_t>& gaps) const {
  std::size_t prev = 0;
  bool have_prev = false;
  for (std::size_t j = 0; j < nlimbs_; ++j) {
    std::uint64_t v = endings_[j];
    while (v) {
      const std::size_t pos = 64 * j + static_cast<std::size_t>(std::countr_zero(v));
      v &= v - 1;
      if (have_prev) gaps.insert(pos - prev);
      prev = pos;
      have_prev = true;
    }
  }
}

namespace detail {

bool has_power_of_period(std::span<const std::uint64_t> word, std::size_t len, std::size_t p,
                         std::size_t length) {
  if (p == 0 || length < p) throw std::invalid_argument("has_power_of_period: bad arguments");
  if (length > len) return false;
  const std::size_t T = length - p;
  if (T == 0) return true;
  // longest run of matching positions in w[i] == w[i+p]
  const std::size_t dl = len - p;
  std::size_t run = 0;
  for (std::size_t i = 0; i < dl; ++i) {
    const int a = static_cast<int>((word[i >> 6] >> (i & 63)) & 1u);
    const std::size_t ip = i + p;
    const int b = static_cast<int>((word[ip >> 6] >> (ip & 63)) & 1u);
    run = (a == b) ? run + 1 : 0;
    if (run >= T) return true;
  }
  return false;
}

}  // namespace detail

std::vector<std::size_t> e_power_endings(const BinaryWord& w, const Rational& e,
                                         std::optional<std::size_t> max_period) {
  EndingScanner scanner;
  scanner.scan(w.limbs(), w.size(), e, max_period);
  std::vector<std::size_t> out;
  scanner.extract_positions(out);
  return out;
}

PowerOccurrence PowerOccurrence::checked(const BinaryWord& w, const Rational& e, std::size_t end,
                                         std::size_t period) {
  if (period == 0) throw std::invalid_argument("PowerOccurrence: period must be positive");
  const std::size_t length = static_cast<std::size_t>(e.ceil_mul(static_cast<std::int64_t>(period)));
  if (end >= w.size() || end + 1 < length)
    throw std::invalid_argument("PowerOccurrence: occurrence does not fit");
  const std::size_t start = end + 1 - length;
  for (std::size_t i = start; i + period <= end; ++i)
    if (w[i] != w[i + period]) throw std::invalid_argument("PowerOccurrence: period does not hold");
  return PowerOccurrence{end, period, length};
}

std::optional<PowerOccurrence> find_power_ending_at(const BinaryWord& w, const Rational& e,
                                                    std::size_t end,
                                                    std::optional<std::size_t> max_period) {
  if (end >= w.size()) throw std::out_of_range("find_power_ending_at: index out of range");
  if (e.num() < e.den())
    throw std::invalid_argument("find_power_ending_at: exponent must be >= 1");
  const std::size_t p_hi = period_scan_bound(end + 1, e, max_period);
  for (std::size_t p = 1; p <= p_hi; ++p) {
    const std::size_t L = static_cast<std::size_t>(e.ceil_mul(static_cast<std::int64_t>(p)));
    if (L > end + 1) break;
    const std::size_t start = end + 1 - L;
    bool ok = true;
    for (std::size_t i = start; i + p <= end && ok; ++i) ok = w[i] == w[i + p];
    if (ok) return PowerOccurrence{end, p, L};
  }
  return std::nullopt;
}

}  // namespace sturmlab
