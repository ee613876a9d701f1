#include "quasi/covers.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <vector>

#include "quasi/periodicity.hpp"

namespace quasi {

PosArray cover_array(const PosArray& border) {
    const Index n = border.size();
    PosArray c(n);
    // reach[c] = longest prefix seen so far whose shortest cover is u[1..c]
    std::vector<Index> reach(static_cast<std::size_t>(n) + 1, 0);
    for (Index i = 1; i <= n; ++i) {
        const Index b = border[i];
        c[i] = b > 0 && reach[c[b]] >= i - c[b] ? c[b] : i;
        reach[c[i]] = i;
    }
    return c;
}

PosArray cover_array(const Text& u) { return cover_array(border_array(u)); }

namespace {

// z[k] = |lcp(u, u[k..n])|, z[1] = n.
std::vector<Index> z_array(const Text& u) {
    const Index n = u.size();
    std::vector<Index> z(static_cast<std::size_t>(n) + 2, 0);
    z[1] = n;
    Index l = 1, r = 1;  // u[l..r-1] matches a prefix
    for (Index k = 2; k <= n; ++k) {
        Index len = k < r ? std::min(r - k, z[k - l + 1]) : 0;
        while (k + len <= n && u[len + 1] == u[k + len]) ++len;
        z[k] = len;
        if (k + len > r) {
            l = k;
            r = k + len;
        }
    }
    return z;
}

// death[c] = smallest occurrence q of u[1..c] preceded by a gap > c from the
// previous occurrence, n+1 if none. u[1..c] covers u[1..t] (for t an
// occurrence end) iff t-c+1 < death[c].
std::vector<Index> death_table(const Text& u) {
    const Index n = u.size();
    const auto z = z_array(u);
    const auto size = static_cast<std::size_t>(n) + 2;

    // occurrences of u[1..c] are {k : z[k] >= c}; sweep c upward unlinking k
    std::vector<Index> next(size), prev(size), gap(size, 1);
    std::vector<char> alive(size, 1);
    for (Index k = 1; k <= n + 1; ++k) {
        next[k] = k + 1;
        prev[k] = k - 1;
    }
    // positions 2..n bucketed by z value
    std::vector<Index> start(size, 0), order(static_cast<std::size_t>(n));
    for (Index k = 2; k <= n; ++k) ++start[z[k] + 1];
    for (std::size_t v = 1; v < size; ++v) start[v] += start[v - 1];
    {
        auto fill = start;
        for (Index k = 2; k <= n; ++k) order[fill[z[k]]++] = k;
    }

    std::priority_queue<Index, std::vector<Index>, std::greater<>> heap;
    std::vector<Index> death(static_cast<std::size_t>(n) + 1, n + 1);
    for (Index c = 1; c <= n; ++c) {
        for (Index j = start[c - 1]; j < start[c]; ++j) {
            const Index k = order[j];
            alive[k] = 0;
            const Index p = prev[k], q = next[k];
            next[p] = q;
            prev[q] = p;
            if (q <= n) {
                gap[q] = q - p;
                heap.push(q);
            }
        }
        while (!heap.empty() && (!alive[heap.top()] || gap[heap.top()] <= c)) heap.pop();
        death[c] = heap.empty() ? n + 1 : heap.top();
    }
    return death;
}

} // namespace

PosArray longest_cover_array(const Text& u, WorkCounters* counters) {
    const Index n = u.size();
    const PosArray b = border_array(u);
    const auto death = death_table(u);
    PosArray cm(n);
    std::uint64_t steps = 0;
    for (Index t = 1; t <= n; ++t) {
        // covers of u[1..t] are borders; walk the covers of the longest border
        Index c = b[t];
        while (c > 0) {
            ++steps;
            if (t - c + 1 < death[c]) break;
            c = cm[c];
        }
        cm[t] = c;
    }
    if (counters) counters->cover_candidates += steps;
    return cm;
}

} // namespace quasi
