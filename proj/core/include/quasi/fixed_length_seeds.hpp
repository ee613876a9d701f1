#pragma once

#include <vector>

#include "quasi/counters.hpp"
#include "quasi/suffix_array.hpp"
#include "quasi/types.hpp"

namespace quasi {

/// Answers "which factors of length k are seeds of u" for any k in O(n),
/// after O(n) preprocessing (suffix array, LCP, P and P').
class FixedLengthSeedFinder {
public:
    explicit FixedLengthSeedFinder(const Text& u);

    Index text_size() const noexcept { return n_; }

    /// One FactorRef per distinct seed of length k, anchored at its first
    /// occurrence, in ascending order of start. Throws if k is not in [1, n].
    std::vector<FactorRef> seeds(Index k, WorkCounters* counters = nullptr) const;

    /// Stops at the first seed found.
    bool has_seed(Index k, WorkCounters* counters = nullptr) const;

private:
    template <class OnSeed>
    void scan(Index k, WorkCounters* counters, OnSeed&& on_seed) const;

    Index n_;
    SuffixArrayBundle sa_;
    PosArray period_;         // P
    PosArray suffix_period_;  // P'
};

std::vector<FactorRef> seeds_of_length(const Text& u, Index k, WorkCounters* counters = nullptr);
bool has_seed_of_length(const Text& u, Index k);

/// Seed[i] = length of the shortest seed of u[1..i]. O(n^2).
PosArray seed_array(const Text& u);

} // namespace quasi
