#include "sturmlab/balanced.hpp"

#include <algorithm>
#include <stdexcept>

namespace sturmlab {

namespace detail {

namespace {
constexpr std::uint16_t kMinSentinel = 0xFFFF;
constexpr std::size_t kMaxTrackedLength = 4096;  // (n+2)^2 uint16 tables
}  // namespace

BalanceTracker::BalanceTracker(std::size_t max_len) : max_len_(max_len), stride_(max_len + 2) {
  if (max_len > kMaxTrackedLength)
    throw std::invalid_argument("BalanceTracker: length too large for exhaustive enumeration");
  bits_.assign((max_len + 63) / 64 + 1, 0);
  ones_.assign(max_len + 2, 0);
  min_.assign(stride_ * stride_, kMinSentinel);
  max_.assign(stride_ * stride_, 0);
}

bool BalanceTracker::push(int s) {
  const std::size_t k = depth_;
  if (k >= max_len_) throw std::out_of_range("BalanceTracker::push: full");
  const std::uint16_t ones_k1 = static_cast<std::uint16_t>(ones_[k] + s);
  const std::uint16_t* mn_row = &min_[k * stride_];
  const std::uint16_t* mx_row = &max_[k * stride_];
  std::uint16_t* mn_next = &min_[(k + 1) * stride_];
  std::uint16_t* mx_next = &max_[(k + 1) * stride_];
  // the windows ending at position k are exactly the lengths 1..k+1
  for (std::size_t l = 1; l <= k + 1; ++l) {
    const std::uint16_t c = static_cast<std::uint16_t>(ones_k1 - ones_[k + 1 - l]);
    const std::uint16_t mn = std::min(mn_row[l], c);
    const std::uint16_t mx = std::max(mx_row[l], c);
    if (static_cast<std::uint16_t>(mx - mn) > 1) return false;
    mn_next[l] = mn;
    mx_next[l] = mx;
  }
  if (s)
    bits_[k >> 6] |= std::uint64_t{1} << (k & 63);
  else
    bits_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
  ones_[k + 1] = ones_k1;
  ++depth_;
  return true;
}

void BalanceTracker::pop() {
  if (depth_ == 0) throw std::out_of_range("BalanceTracker::pop: empty");
  --depth_;
  bits_[depth_ >> 6] &= ~(std::uint64_t{1} << (depth_ & 63));
}

BinaryWord BalanceTracker::word() const { return BinaryWord::from_limbs(limbs(), depth_); }

}  // namespace detail

std::uint64_t euler_phi(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("euler_phi: argument must be positive");
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::uint64_t balanced_count(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 1; i <= n; ++i) total += (n - i + 1) * euler_phi(i);
  return total;
}

namespace {

bool enumerate_rec(detail::BalanceTracker& t, std::size_t n, const RawWordVisitor& visit) {
  if (t.depth() == n) return visit(t.limbs(), n);
  for (int s = 0; s <= 1; ++s) {
    if (!t.push(s)) continue;
    const bool keep_going = enumerate_rec(t, n, visit);
    t.pop();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_balanced(std::size_t n, const RawWordVisitor& visit) {
  detail::BalanceTracker tracker(n);
  enumerate_rec(tracker, n, visit);
}

void for_each_balanced(std::size_t n, const WordVisitor& visit) {
  BinaryWord buffer;
  for_each_balanced(n, [&](std::span<const std::uint64_t> limbs, std::size_t len) {
    buffer.assign(limbs, len);
    return visit(buffer);
  });
}

std::vector<BinaryWord> balanced_prefixes(std::size_t n, std::size_t depth) {
  const std::size_t d = std::min(n, depth);
  std::vector<BinaryWord> prefixes;
  for_each_balanced(d, [&](std::span<const std::uint64_t> limbs, std::size_t len) {
    prefixes.push_back(BinaryWord::from_limbs(limbs, len));
    return true;
  });
  return prefixes;
}

void for_each_balanced_with_prefix(const BinaryWord& prefix, std::size_t n,
                                   const RawWordVisitor& visit) {
  if (prefix.size() > n)
    throw std::invalid_argument("for_each_balanced_with_prefix: prefix longer than target");
  detail::BalanceTracker tracker(n);
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (!tracker.push(prefix[i]))
      throw std::invalid_argument("for_each_balanced_with_prefix: prefix is not balanced");
  enumerate_rec(tracker, n, visit);
}

}  // namespace sturmlab
