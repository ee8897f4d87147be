#ifndef STURMLAB_BINARY_WORD_HPP
#define STURMLAB_BINARY_WORD_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sturmlab {

/// Finite word over {0,1}, stored as packed bits (64 symbols per limb,
/// position i lives in limb i/64 at bit i%64).
class BinaryWord {
public:
  BinaryWord() = default;

  /// Accepts only the characters '0' and '1'.
  static BinaryWord parse(std::string_view text);
  /// Word of length `len` whose symbol i is bit i of `bits` (test helper).
  static BinaryWord from_bits(std::uint64_t bits, std::size_t len);
  /// Adopts `len` symbols from a packed limb span.
  static BinaryWord from_limbs(std::span<const std::uint64_t> limbs, std::size_t len);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  int operator[](std::size_t i) const {
    return static_cast<int>((limbs_[i >> 6] >> (i & 63)) & 1u);
  }

  void push_back(int symbol);
  void pop_back();
  void clear();

  /// Replaces the contents, reusing capacity.
  void assign(std::span<const std::uint64_t> limbs, std::size_t len);

  std::span<const std::uint64_t> limbs() const { return {limbs_.data(), limbs_.size()}; }

  BinaryWord substr(std::size_t pos, std::size_t len) const;

  std::string str() const;

  bool operator==(const BinaryWord& o) const;
  /// Lexicographic order with 0 < 1; a proper prefix precedes its extensions.
  std::strong_ordering operator<=>(const BinaryWord& o) const;

private:
  std::vector<std::uint64_t> limbs_;
  std::size_t size_ = 0;
};

BinaryWord reversed(const BinaryWord& w);
BinaryWord complemented(const BinaryWord& w);

}  // namespace sturmlab

#endif
