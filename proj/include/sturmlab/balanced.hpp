#ifndef STURMLAB_BALANCED_HPP
#define STURMLAB_BALANCED_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sturmlab/binary_word.hpp"

namespace sturmlab {

namespace detail {

/// Incremental balance state for depth-first extension. For every window
/// length it tracks the min and max 1-count over all windows seen in the
/// current prefix; push(s) refuses symbols that would break balance.
/// Rows of the min/max tables are indexed by depth, so pop() is free.
class BalanceTracker {
public:
  explicit BalanceTracker(std::size_t max_len);

  /// Extends the prefix with s (0 or 1) if the result is still balanced.
  bool push(int s);
  void pop();

  std::size_t depth() const { return depth_; }
  std::span<const std::uint64_t> limbs() const { return {bits_.data(), bits_.size()}; }
  int symbol(std::size_t i) const {
    return static_cast<int>((bits_[i >> 6] >> (i & 63)) & 1u);
  }
  BinaryWord word() const;

private:
  std::size_t max_len_;
  std::size_t stride_;
  std::size_t depth_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint16_t> ones_;    // ones_[k] = number of 1s among first k symbols
  std::vector<std::uint16_t> min_;     // min_[k*stride_ + l], window length l after k symbols
  std::vector<std::uint16_t> max_;
};

}  // namespace detail

/// Euler totient by trial-division factorization. Rejects m == 0.
std::uint64_t euler_phi(std::uint64_t m);

/// Number of balanced binary words of length n: 1 + sum_{i=1..n} (n-i+1)*phi(i).
std::uint64_t balanced_count(std::size_t n);

/// Calls visit once per balanced word of length n, in lexicographic order
/// (0 < 1). The visited word lives in scratch owned by the enumerator; copy
/// it if it must outlive the call. Return false from visit to stop early.
using RawWordVisitor = std::function<bool(std::span<const std::uint64_t>, std::size_t)>;
void for_each_balanced(std::size_t n, const RawWordVisitor& visit);

/// Convenience overload materializing a BinaryWord per call (reused buffer).
using WordVisitor = std::function<bool(const BinaryWord&)>;
void for_each_balanced(std::size_t n, const WordVisitor& visit);

/// All balanced words of length min(depth, n), in lexicographic order; the
/// subtrees rooted at these prefixes partition the length-n enumeration.
std::vector<BinaryWord> balanced_prefixes(std::size_t n, std::size_t depth);

/// Enumerates the balanced words of length n extending the given prefix.
void for_each_balanced_with_prefix(const BinaryWord& prefix, std::size_t n,
                                   const RawWordVisitor& visit);

}  // namespace sturmlab

#endif
