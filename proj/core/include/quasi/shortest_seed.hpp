#pragma once

#include <optional>
#include <span>
#include <vector>

#include "quasi/counters.hpp"
#include "quasi/suffix_tree.hpp"
#include "quasi/types.hpp"

namespace quasi {

/// PREF(v, k): the prefixes of v = u[first..first+vlen-1] of length >= k,
/// all of which occur first at `first` and last at `last`.
struct PrefixFamilyEntry {
    Index first = 0;
    Index last = 0;
    Index k = 0;
    Index vlen = 0;

    friend bool operator==(const PrefixFamilyEntry&, const PrefixFamilyEntry&) = default;
};

/// Disjoint sets X_1..X_k of positive integers and their sorted union.
struct ChainInput {
    std::vector<std::vector<Index>> sets;
    std::vector<Index> union_sorted;
};

/// Delta(v) per suffix-tree node: the largest maxgap(LL(w)) over explicit
/// nodes w on the path from the root to v. Entries never computed hold -1.
struct PrefixMaxgapTable {
    std::vector<Index> delta;

    Index operator[](NodeId v) const { return delta[static_cast<std::size_t>(v)]; }
};

struct SeedResult {
    Index length = 0;
    FactorRef factor;

    friend bool operator==(const SeedResult&, const SeedResult&) = default;
};

/// True iff |s| >= max(P[first + |s| - 1], P'[last]), where first and last
/// are the first and last occurrences of s. Debug builds verify both are
/// occurrences.
bool is_border_seed(const Text& u, FactorRef s, Index first, Index last);
bool is_border_seed(const Text& u, const PosArray& P, const PosArray& suffix_P, FactorRef s, Index first,
                    Index last);

/// The shortest border seed among all members of the families in F, or
/// nullopt if none is a border seed. Ties go to the entry with the smallest
/// first occurrence. Throws std::invalid_argument on malformed entries.
std::optional<SeedResult> compute_border_seed(const Text& u, std::span<const PrefixFamilyEntry> F);

/// Delta_i = max over j <= i of maxgap(X_j u ... u X_k). O(m) after an
/// O(max element) scratch allocation.
std::vector<Index> chain_prefix_maxgap(const ChainInput& input, WorkCounters* counters = nullptr);

/// Delta for every node of t, by heaviest-path decomposition. O(n log n).
PrefixMaxgapTable prefix_maxgaps(const SuffixTree& t, WorkCounters* counters = nullptr);

/// A shortest seed of u. O(n log n).
SeedResult shortest_seed(const Text& u, WorkCounters* counters = nullptr);

/// A shortest seed of u among seeds of length >= m. Throws if m is not in [1, n].
SeedResult shortest_seed_at_least(const Text& u, Index m, WorkCounters* counters = nullptr);

} // namespace quasi
