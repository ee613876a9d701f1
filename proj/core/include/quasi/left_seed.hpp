#pragma once

#include "quasi/counters.hpp"
#include "quasi/types.hpp"

namespace quasi {

/// Length of the shortest left seed of u: min{ C[j] : j >= per(u) }.
Index lseed(const Text& u);

/// LSeed[i] = lseed(u[1..i]). Sliding-window minimum of C over [P[i], i]
/// maintained in a monotone deque; O(n) deque operations in total.
PosArray left_seed_array(const Text& u, WorkCounters* counters = nullptr);

/// R[c] = max{ i : C[i] = c }, 0 if no prefix has u[1..c] as its shortest cover.
PosArray r_array(const Text& u);

/// Same output as left_seed_array, computed with a monotone pointer over R.
PosArray left_seed_array_alt(const Text& u);

/// LSeed^M[i] = i - 1 if P[i] < i, else 0.
PosArray longest_left_seed_array(const Text& u);

} // namespace quasi
