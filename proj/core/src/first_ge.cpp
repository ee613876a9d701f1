#include "quasi/first_ge.hpp"

#include <numeric>
#include <stdexcept>

namespace quasi {

IntervalSuccessorSet::IntervalSuccessorSet(Index n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative set size");
    link_.resize(static_cast<std::size_t>(n) + 2);
    std::iota(link_.begin(), link_.end(), Index{0});
}

void IntervalSuccessorSet::erase(Index i) {
    if (i < 1 || i > n_) throw std::out_of_range("position out of range");
    link_[i] = i + 1;
}

Index IntervalSuccessorSet::next_alive(Index i) {
    if (i < 1 || i > n_ + 1) throw std::out_of_range("position out of range");
    while (link_[i] != i) {
        link_[i] = link_[link_[i]];
        i = link_[i];
    }
    return i;
}

std::vector<std::optional<Index>> batch_first_ge(const PosArray& B, std::span<const FirstGEQuery> queries) {
    const Index n = B.size();
    for (std::size_t j = 0; j < queries.size(); ++j) {
        const auto& q = queries[j];
        if (q.l < 1 || q.r > n || q.l > q.r) throw std::invalid_argument("first_ge: interval out of range");
        if (j > 0 && q.c < queries[j - 1].c) throw std::invalid_argument("first_ge: thresholds not sorted");
    }

    // positions in non-decreasing order of B (counting sort)
    Index top = 0;
    for (Index i = 1; i <= n; ++i) {
        if (B[i] < 0) throw std::invalid_argument("first_ge: negative entry");
        top = std::max(top, B[i]);
    }
    std::vector<Index> start(static_cast<std::size_t>(top) + 2, 0), order(static_cast<std::size_t>(n));
    for (Index i = 1; i <= n; ++i) ++start[B[i] + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    for (Index i = 1; i <= n; ++i) order[start[B[i]]++] = i;

    IntervalSuccessorSet alive(n);
    std::vector<std::optional<Index>> out;
    out.reserve(queries.size());
    std::size_t next_dead = 0;
    for (const auto& q : queries) {
        while (next_dead < order.size() && B[order[next_dead]] < q.c) alive.erase(order[next_dead++]);
        const Index pos = alive.next_alive(q.l);
        out.push_back(pos <= q.r ? std::optional<Index>(pos) : std::nullopt);
    }
    return out;
}

} // namespace quasi
