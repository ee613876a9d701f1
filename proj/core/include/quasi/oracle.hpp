#pragma once

#include <string_view>
#include <vector>

#include "quasi/types.hpp"

/// Naive reference implementations. Nothing here calls into the fast
/// algorithms; every answer comes from direct enumeration. All functions
/// throw std::length_error when the text is longer than oracle::kMaxLength.
namespace quasi::oracle {

inline constexpr Index kMaxLength = 5000;

/// All 1-based starting positions of s in u, ascending.
std::vector<Index> occurrences(const Text& u, std::string_view s);

Index period(std::string_view w);
Index border(std::string_view w);
Index maxgap(const std::vector<Index>& sorted);

bool is_cover(const Text& u, std::string_view s);

/// s is a factor of u and u is a factor of some word covered by s.
bool is_seed(const Text& u, std::string_view s);

/// Same predicate, by enumerating every extension prefix(s, a) . u . suffix(s, b)
/// with a, b < |s| and testing it for a cover. Much slower; for cross-checks.
bool is_seed_by_extension(const Text& u, std::string_view s);

bool is_left_seed(const Text& u, std::string_view s);
bool is_right_seed(const Text& u, std::string_view s);

/// s is a seed of w1 . s . w3, where w2 = u[first(s) .. last(s)+|s|-1] and
/// u = w1 w2 w3.
bool is_border_seed(const Text& u, std::string_view s);

struct Arrays {
    PosArray P, B, suffix_P, C, CM, LSeed, LSeedM, Seed;
};

/// Every per-prefix array by exhaustive search. Seed[i] starts its search at
/// Seed[i-1], relying on seed lengths never decreasing along prefixes; use
/// shortest_seed_length for a search that assumes nothing.
Arrays brute_arrays(const Text& u);

/// Smallest |s| over all seeds s of u, trying every factor.
Index shortest_seed_length(const Text& u);

/// seeds[k] = start of the first occurrence of each distinct seed of length
/// k, ascending. seeds[0] is empty.
std::vector<std::vector<Index>> all_seeds(const Text& u);

} // namespace quasi::oracle
