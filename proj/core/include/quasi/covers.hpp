#pragma once

#include "quasi/counters.hpp"
#include "quasi/types.hpp"

namespace quasi {

/// C[i] = length of the shortest cover of u[1..i] (i itself when the prefix
/// has no proper cover). O(n) from the border array.
PosArray cover_array(const Text& u);
PosArray cover_array(const PosArray& border);

/// C^M[i] = length of the longest proper cover of u[1..i], 0 if none.
/// Following i -> C^M[i] -> C^M[C^M[i]] -> ... lists every cover of u[1..i].
PosArray longest_cover_array(const Text& u, WorkCounters* counters = nullptr);

} // namespace quasi
