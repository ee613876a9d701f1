#include "quasi/fixed_length_seeds.hpp"

#include <stdexcept>

#include "quasi/periodicity.hpp"

namespace quasi {

FixedLengthSeedFinder::FixedLengthSeedFinder(const Text& u)
    : n_(u.size()), sa_(suffix_array(u)), period_(period_array(u)), suffix_period_(suffix_period_array(u)) {}

template <class OnSeed>
void FixedLengthSeedFinder::scan(Index k, WorkCounters* counters, OnSeed&& on_seed) const {
    if (k < 1 || k > n_) throw std::invalid_argument("seed length out of range");
    const Index n = n_;
    const Index m = n - k + 1;  // suffixes long enough to start a length-k factor

    // group id per position: maximal rank intervals with LCP >= k
    std::vector<Index> group(static_cast<std::size_t>(m) + 1, -1);
    Index groups = 0;
    for (Index r = 1; r <= n; ++r) {
        const Index p = sa_.SUF[r];
        if (p > m) continue;
        if (r == 1 || sa_.LCP[r] < k) ++groups;
        group[p] = groups - 1;
    }

    // one shared bucket array: positions enter their group's bucket in
    // increasing order, so every occurrence list comes out sorted
    std::vector<Index> head(static_cast<std::size_t>(groups) + 1, 0), bucket(static_cast<std::size_t>(m));
    for (Index p = 1; p <= m; ++p) ++head[group[p] + 1];
    for (Index g = 0; g < groups; ++g) head[g + 1] += head[g];
    {
        auto fill = head;
        for (Index p = 1; p <= m; ++p) bucket[fill[group[p]]++] = p;
    }
    if (counters) counters->bucket_ops += 2 * static_cast<std::uint64_t>(m);

    for (Index g = 0; g < groups; ++g) {
        const Index b = head[g], e = head[g + 1];
        const Index first = bucket[b], last = bucket[e - 1];
        bool ok = k >= period_[first + k - 1] && k >= suffix_period_[last];
        for (Index j = b + 1; ok && j < e; ++j)
            if (bucket[j] > bucket[j - 1] + k) ok = false;
        if (ok && !on_seed(FactorRef{first, k})) return;
    }
}

std::vector<FactorRef> FixedLengthSeedFinder::seeds(Index k, WorkCounters* counters) const {
    // groups have distinct first occurrences; order them by a flag sweep
    std::vector<char> hit(static_cast<std::size_t>(n_) + 1, 0);
    std::size_t count = 0;
    scan(k, counters, [&](FactorRef f) {
        hit[f.start] = 1;
        ++count;
        return true;
    });
    std::vector<FactorRef> out;
    out.reserve(count);
    for (Index p = 1; p <= n_ && out.size() < count; ++p)
        if (hit[p]) out.push_back(FactorRef{p, k});
    return out;
}

bool FixedLengthSeedFinder::has_seed(Index k, WorkCounters* counters) const {
    bool found = false;
    scan(k, counters, [&](FactorRef) {
        found = true;
        return false;
    });
    return found;
}

std::vector<FactorRef> seeds_of_length(const Text& u, Index k, WorkCounters* counters) {
    if (k < 1 || k > u.size()) throw std::invalid_argument("seed length out of range");
    return FixedLengthSeedFinder(u).seeds(k, counters);
}

bool has_seed_of_length(const Text& u, Index k) {
    if (k < 1 || k > u.size()) throw std::invalid_argument("seed length out of range");
    return FixedLengthSeedFinder(u).has_seed(k);
}

PosArray seed_array(const Text& u) {
    const Index n = u.size();
    PosArray out(n);
    Index k = 1;
    for (Index i = 1; i <= n; ++i) {
        const FixedLengthSeedFinder finder(u.prefix(i));
        while (!finder.has_seed(k)) ++k;
        out[i] = k;
    }
    return out;
}

} // namespace quasi
