#ifndef STURMLAB_WORDS_HPP
#define STURMLAB_WORDS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "sturmlab/binary_word.hpp"
#include "sturmlab/rational.hpp"

namespace sturmlab {

/// True iff w[i] == w[i+p] for all valid i; vacuously true when p >= |w|.
bool has_period(const BinaryWord& w, std::size_t p);
bool has_period(std::string_view w, std::size_t p);

/// Smallest p >= 1 such that has_period(w, p); always <= |w|.
std::size_t least_period(const BinaryWord& w);
std::size_t least_period(std::string_view w);

/// |w| / least_period(w) in lowest terms.
Rational exponent_of(const BinaryWord& w);
Rational exponent_of(std::string_view w);

/// True iff ceil(e * least_period(w)) == |w|. Requires |w| >= 1 and e >= 1.
bool is_e_power(const BinaryWord& w, const Rational& e);
bool is_e_power(std::string_view w, const Rational& e);

/// True iff for every window length the 1-counts of all factors of that
/// length differ by at most 1. The empty word is balanced.
bool is_balanced(const BinaryWord& w);

/// Number of distinct length-len factors; 1 when len == 0. Requires len <= |w|.
std::size_t subword_complexity(const BinaryWord& w, std::size_t len);

/// One e-power occurrence: the factor of length `length` ending at index
/// `end` has period `period`, and length == ceil(e * period).
struct PowerOccurrence {
  std::size_t end = 0;
  std::size_t period = 0;
  std::size_t length = 0;

  /// Validates all three constraints against w and e; throws on violation.
  static PowerOccurrence checked(const BinaryWord& w, const Rational& e, std::size_t end,
                                 std::size_t period);
};

/// Sorted 0-based indices n such that some factor of length ceil(e*p) ending
/// at n has period p, for some p <= max_period (nullopt = unbounded).
std::vector<std::size_t> e_power_endings(const BinaryWord& w, const Rational& e,
                                         std::optional<std::size_t> max_period = std::nullopt);

/// Smallest-period occurrence ending exactly at index `end`, if any.
std::optional<PowerOccurrence> find_power_ending_at(const BinaryWord& w, const Rational& e,
                                                    std::size_t end,
                                                    std::optional<std::size_t> max_period = std::nullopt);

/// Reusable scratch space for ending-position scans over packed words.
/// The scan is bit parallel: for each period p it builds the mismatch mask
/// w XOR (w >> p) and finds all windows of ceil(e*p) - p consecutive matches
/// with shifted ANDs, so one word costs O(len/64 * log) per period.
class EndingScanner {
public:
  void scan(std::span<const std::uint64_t> word, std::size_t len, const Rational& e,
            std::optional<std::size_t> max_period);

  std::span<const std::uint64_t> endings() const { return {endings_.data(), nlimbs_}; }
  std::size_t word_len() const { return len_; }

  std::size_t ending_count() const;
  void extract_positions(std::vector<std::size_t>& out) const;

  struct GapSummary {
    std::size_t endings = 0;
    std::size_t max_gap = 0;  // meaningful only when endings >= 2
  };
  GapSummary gap_summary() const;
  void collect_gaps(std::set<std::size_t>& gaps) const;

private:
  std::size_t nlimbs_ = 0;
  std::size_t len_ = 0;
  std::vector<std::uint64_t> endings_;
  std::vector<std::uint64_t> win_;
  std::vector<std::uint64_t> tmp_;
};

namespace detail {
/// True iff word contains a factor of length L = T + p with period p,
/// i.e. the mismatch mask has a run of at least T matching positions.
bool has_power_of_period(std::span<const std::uint64_t> word, std::size_t len, std::size_t p,
                         std::size_t length);
}  // namespace detail

}  // namespace sturmlab

#endif
