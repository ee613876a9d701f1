#pragma once

#include <optional>
#include <span>
#include <vector>

#include "quasi/types.hpp"

namespace quasi {

/// Positions 1..n, each alive or deleted, with successor queries.
/// Deleted positions are skipped by pointer jumping with path halving.
class IntervalSuccessorSet {
public:
    explicit IntervalSuccessorSet(Index n);

    Index size() const noexcept { return n_; }

    /// Deletes position i (1 <= i <= n). Deleting twice is a no-op.
    void erase(Index i);

    /// Smallest alive position >= i, or n+1 if there is none. 1 <= i <= n+1.
    Index next_alive(Index i);

    bool contains(Index i) { return next_alive(i) == i; }

private:
    Index n_;
    std::vector<Index> link_;
};

struct FirstGEQuery {
    Index l = 1;
    Index r = 1;
    Index c = 0;
};

/// For each query, min{ i in [l, r] : B[i] >= c }, or nullopt if none.
/// Queries must come in non-decreasing order of c.
std::vector<std::optional<Index>> batch_first_ge(const PosArray& B, std::span<const FirstGEQuery> queries);

} // namespace quasi
