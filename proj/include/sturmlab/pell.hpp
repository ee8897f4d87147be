#ifndef STURMLAB_PELL_HPP
#define STURMLAB_PELL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sturmlab/binary_word.hpp"

namespace sturmlab {

/// First k Pell numbers: 1, 2, 5, 12, 29, 70, 169, ...
std::vector<std::uint64_t> pell_numbers(std::size_t k);

/// Ostrowski digit string over {0,1,2} in the Pell base, most significant
/// digit first. Valid representations have no leading zero, a least
/// significant digit in {0,1}, and a 0 right after every 2. The empty
/// string is the canonical zero.
class PellRepresentation {
public:
  PellRepresentation() = default;

  /// Throws std::invalid_argument unless the digit string is valid.
  static PellRepresentation parse(std::string_view digits);

  const std::vector<std::uint8_t>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  std::string str() const;

  bool operator==(const PellRepresentation& o) const = default;

private:
  friend PellRepresentation to_pell(std::uint64_t m);
  std::vector<std::uint8_t> digits_;
};

/// Greedy expansion of m in the Pell base; the result is always valid.
PellRepresentation to_pell(std::uint64_t m);

/// Value of a representation: sum of digit_k * P_k.
std::uint64_t from_pell(const PellRepresentation& r);

/// Validity check on a raw digit string; false for any character outside
/// {0,1,2} and for violations of the representation invariants.
bool is_valid_pell(std::string_view digits);

/// True iff the representation is nonzero and the number of zeros after
/// its last nonzero digit is odd.
bool trailing_zeros_odd(const PellRepresentation& r);

/// Binary word with symbol i = 1 iff trailing_zeros_odd(to_pell(i+1));
/// equal to the mechanical word with slope sqrt(2)-1 and intercept 0.
BinaryWord sturmian_from_pell(std::size_t len);

}  // namespace sturmlab

#endif
