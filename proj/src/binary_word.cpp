#include "sturmlab/binary_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace sturmlab {

namespace {
std::size_t limb_count(std::size_t len) { return (len + 63) / 64; }
}  // namespace

BinaryWord BinaryWord::parse(std::string_view text) {
  BinaryWord w;
  w.limbs_.assign(limb_count(text.size()), 0);
  w.size_ = text.size();
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '1')
      w.limbs_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else if (c != '0')
      throw std::invalid_argument("BinaryWord: symbol must be '0' or '1'");
  }
  return w;
}

BinaryWord BinaryWord::from_bits(std::uint64_t bits, std::size_t len) {
  if (len > 64) throw std::invalid_argument("BinaryWord::from_bits: length > 64");
  BinaryWord w;
  w.size_ = len;
  if (len > 0) w.limbs_.push_back(len == 64 ? bits : (bits & ((std::uint64_t{1} << len) - 1)));
  return w;
}

BinaryWord BinaryWord::from_limbs(std::span<const std::uint64_t> limbs, std::size_t len) {
  BinaryWord w;
  w.assign(limbs, len);
  return w;
}

void BinaryWord::assign(std::span<const std::uint64_t> limbs, std::size_t len) {
  const std::size_t n = limb_count(len);
  if (limbs.size() < n) throw std::invalid_argument("BinaryWord::assign: span too short");
  limbs_.assign(limbs.begin(), limbs.begin() + n);
  size_ = len;
  if (len & 63 && n > 0) limbs_[n - 1] &= (std::uint64_t{1} << (len & 63)) - 1;
}

void BinaryWord::push_back(int symbol) {
  const std::size_t i = size_++;
  if ((i >> 6) == limbs_.size()) limbs_.push_back(0);
  if (symbol)
    limbs_[i >> 6] |= std::uint64_t{1} << (i & 63);
  else
    limbs_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

void BinaryWord::pop_back() {
  if (size_ == 0) throw std::out_of_range("BinaryWord::pop_back: empty word");
  --size_;
  limbs_[size_ >> 6] &= ~(std::uint64_t{1} << (size_ & 63));
}

void BinaryWord::clear() {
  limbs_.clear();
  size_ = 0;
}

BinaryWord BinaryWord::substr(std::size_t pos, std::size_t len) const {
  if (pos + len > size_) throw std::out_of_range("BinaryWord::substr: range out of bounds");
  BinaryWord out;
  out.limbs_.assign(limb_count(len), 0);
  out.size_ = len;
  for (std::size_t i = 0; i < len; ++i)
    if ((*this)[pos + i]) out.limbs_[i >> 6] |= std::uint64_t{1} << (i & 63);
  return out;
}

std::string BinaryWord::str() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if ((*this)[i]) s[i] = '1';
  return s;
}

bool BinaryWord::operator==(const BinaryWord& o) const {
  if (size_ != o.size_) return false;
  const std::size_t n = limb_count(size_);
  return std::equal(limbs_.begin(), limbs_.begin() + n, o.limbs_.begin());
}

std::strong_ordering BinaryWord::operator<=>(const BinaryWord& o) const {
  const std::size_t n = std::min(size_, o.size_);
  for (std::size_t i = 0; i < n; ++i) {
    const int a = (*this)[i];
    const int b = o[i];
    if (a != b) return a <=> b;
  }
  return size_ <=> o.size_;
}

BinaryWord reversed(const BinaryWord& w) {
  BinaryWord out;
  for (std::size_t i = w.size(); i-- > 0;) out.push_back(w[i]);
  return out;
}

BinaryWord complemented(const BinaryWord& w) {
  BinaryWord out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(1 - w[i]);
  return out;
}

}  // namespace sturmlab
