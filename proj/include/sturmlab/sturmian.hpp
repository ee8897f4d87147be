#ifndef STURMLAB_STURMIAN_HPP
#define STURMLAB_STURMIAN_HPP

#include <string_view>

#include "sturmlab/binary_word.hpp"
#include "sturmlab/quadratic.hpp"

namespace sturmlab {

/// Length-len prefix of the mechanical word with the given slope and
/// intercept: symbol i is floor((i+2)*slope + intercept) -
/// floor((i+1)*slope + intercept). Requires 0 < slope < 1 irrational and
/// 0 <= intercept < 1; all floors are evaluated exactly.
BinaryWord mechanical_word(const QuadraticIrrational& slope, const QuadraticIrrational& intercept,
                           std::size_t len);

/// Length-len prefix of the fixed point of 0 -> 01, 1 -> 0 started from 0.
BinaryWord fibonacci_word(std::size_t len);

/// Slope text accepted by the CLI and bindings: the exact grammar of
/// QuadraticIrrational::parse plus the aliases "sqrt2-1" and "fib".
QuadraticIrrational parse_slope(std::string_view text);

}  // namespace sturmlab

#endif
