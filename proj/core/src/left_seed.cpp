#include "quasi/left_seed.hpp"

#include <algorithm>
#include <vector>

#include "quasi/covers.hpp"
#include "quasi/periodicity.hpp"

namespace quasi {

Index lseed(const Text& u) {
    const PosArray b = border_array(u);
    const PosArray c = cover_array(b);
    const Index n = u.size();
    Index best = n;
    for (Index j = n - b[n]; j <= n; ++j) best = std::min(best, c[j]);
    return best;
}

PosArray left_seed_array(const Text& u, WorkCounters* counters) {
    const Index n = u.size();
    const PosArray b = border_array(u);
    const PosArray c = cover_array(b);
    PosArray out(n);

    // ring buffer deque of indices; indices and C values increase front to back
    std::vector<Index> q(static_cast<std::size_t>(n));
    std::size_t head = 0, tail = 0;
    std::uint64_t ops = 0;
    for (Index i = 1; i <= n; ++i) {
        const Index p = i - b[i];
        while (head < tail && q[head] < p) {
            ++head;
            ++ops;
        }
        while (head < tail && c[q[tail - 1]] >= c[i]) {
            --tail;
            ++ops;
        }
        q[tail++] = i;
        ++ops;
        out[i] = c[q[head]];
    }
    if (counters) counters->deque_ops += ops;
    return out;
}

PosArray r_array(const Text& u) {
    const PosArray c = cover_array(u);
    const Index n = u.size();
    PosArray r(n);
    for (Index i = 1; i <= n; ++i) r[c[i]] = i;
    return r;
}

PosArray left_seed_array_alt(const Text& u) {
    const Index n = u.size();
    const PosArray b = border_array(u);
    const PosArray c = cover_array(b);
    PosArray r(n);
    for (Index i = 1; i <= n; ++i) r[c[i]] = i;

    PosArray out(n);
    Index ls = 0;
    for (Index i = 1; i <= n; ++i) {
        const Index p = i - b[i];
        while (ls == 0 || r[ls] < p) ++ls;
        out[i] = ls;
    }
    return out;
}

PosArray longest_left_seed_array(const Text& u) {
    const PosArray b = border_array(u);
    const Index n = u.size();
    PosArray out(n);
    for (Index i = 1; i <= n; ++i) out[i] = b[i] > 0 ? i - 1 : 0;
    return out;
}

} // namespace quasi
