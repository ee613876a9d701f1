#pragma once

#include <span>

#include "quasi/types.hpp"

namespace quasi {

/// B[i] = length of the longest proper border of u[1..i]. O(n).
PosArray border_array(const Text& u);

/// P[i] = per(u[1..i]) = i - B[i]. Non-decreasing.
PosArray period_array(const Text& u);
PosArray period_array(const PosArray& border);

/// P'[i] = per(u[i..n]), via the period array of the reversed text.
PosArray suffix_period_array(const Text& u);

/// Largest difference of consecutive elements of a strictly increasing
/// sequence; 0 for sequences of length <= 1.
Index maxgap(std::span<const Index> sorted);

} // namespace quasi
