#pragma once

#include <cstdint>

namespace quasi {

/// Operation counts collected by the instrumented algorithms. Pass a pointer
/// to any operation that accepts one; counts accumulate across calls.
struct WorkCounters {
    std::uint64_t deque_ops = 0;         // left_seed_array: pushes + pops
    std::uint64_t chain_elements = 0;    // sum of |L| over chain prefix-maxgap instances
    std::uint64_t bucket_ops = 0;        // seeds_of_length: bucket inserts + extractions
    std::uint64_t cover_candidates = 0;  // longest_cover_array: candidate tests
};

} // namespace quasi
