#include "quasi/shortest_seed.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "checks.hpp"
#include "quasi/first_ge.hpp"
#include "quasi/periodicity.hpp"

namespace quasi {

namespace {

// Doubly linked list over values 1..cap, reused across chain instances.
class ChainSolver {
public:
    explicit ChainSolver(Index cap)
        : next_(static_cast<std::size_t>(cap) + 2, 0), prev_(next_.size(), 0), marked_(next_.size(), 0) {}

    // Sets are flat[offsets[j] .. offsets[j+1]); out receives one value per set.
    void solve(std::span<const Index> sorted, std::span<const Index> flat, std::span<const Index> offsets,
               std::vector<Index>& out, WorkCounters* counters) {
        const std::size_t k = offsets.size() - 1;
        out.assign(k, 0);
        if (counters) counters->chain_elements += sorted.size();
        if (sorted.empty()) return;

        Index d = 0;
        prev_[sorted.front()] = 0;
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            next_[sorted[i - 1]] = sorted[i];
            prev_[sorted[i]] = sorted[i - 1];
            d = std::max(d, sorted[i] - sorted[i - 1]);
        }
        next_[sorted.back()] = 0;
        out[0] = d;

        for (std::size_t j = 0; j + 1 < k; ++j) {
            const auto set = flat.subspan(offsets[j], offsets[j + 1] - offsets[j]);
            for (Index x : set) marked_[x] = 1;
            for (Index x : set) {
                const Index p = prev_[x], q = next_[x];
                if (p != 0 && q != 0 && !marked_[p] && !marked_[q]) d = std::max(d, q - p);
                if (p != 0) next_[p] = q;
                if (q != 0) prev_[q] = p;
            }
            for (Index x : set) marked_[x] = 0;
            out[j + 1] = d;
        }
    }

private:
    std::vector<Index> next_, prev_;
    std::vector<char> marked_;
};

// Heaviest-path recursion. A heaviest path from r becomes one chain instance:
// X_j holds the leaves below the j-th path node but not below the next one.
// Hanging subtrees recurse with their own sorted leaf lists. Nodes flagged in
// `cut` are never entered by a path; they start fresh with inherited Delta 0.
class PrefixMaxgapEngine {
public:
    PrefixMaxgapEngine(const SuffixTree& t, std::vector<Index>& delta, const std::vector<char>* cut,
                       WorkCounters* counters)
        : t_(t),
          sa_(t.suffix_array()),
          delta_(delta),
          cut_(cut),
          counters_(counters),
          chain_(t.text_size()),
          owner_(static_cast<std::size_t>(t.text_size()) + 1, -1) {}

    void solve(NodeId r, std::span<const Index> leaves, Index inherited) {
        std::vector<NodeId> path{r};
        for (NodeId v = r; !t_.is_leaf(v);) {
            NodeId heavy = t_.first_child(v);
            for (NodeId c = t_.next_sibling(heavy); c != kNoNode; c = t_.next_sibling(c))
                if (t_.leaf_count(c) > t_.leaf_count(heavy)) heavy = c;
            if (is_cut(heavy)) break;
            path.push_back(heavy);
            v = heavy;
        }

        std::vector<Index> flat, offsets{0};
        flat.reserve(leaves.size());
        for (std::size_t j = 0; j < path.size(); ++j) {
            const NodeId p = path[j];
            if (j + 1 < path.size()) {
                const NodeId nx = path[j + 1];
                for (Index x = t_.lb(p); x < t_.lb(nx); ++x) flat.push_back(sa_.SUF[x]);
                for (Index x = t_.rb(nx) + 1; x <= t_.rb(p); ++x) flat.push_back(sa_.SUF[x]);
            } else {
                for (Index x = t_.lb(p); x <= t_.rb(p); ++x) flat.push_back(sa_.SUF[x]);
            }
            offsets.push_back(static_cast<Index>(flat.size()));
        }
        std::vector<Index> d;
        chain_.solve(leaves, flat, offsets, d, counters_);
        for (std::size_t j = 0; j < path.size(); ++j) delta_[path[j]] = std::max(inherited, d[j]);

        // hanging subtrees; leaves are settled here, internal nodes recurse
        for (Index x = t_.lb(r); x <= t_.rb(r); ++x) owner_[x] = -1;
        std::vector<NodeId> hang;
        std::vector<Index> hang_inherited;
        for (std::size_t j = 0; j < path.size(); ++j) {
            const NodeId p = path[j];
            const NodeId skip = j + 1 < path.size() ? path[j + 1] : kNoNode;
            for (NodeId c = t_.first_child(p); c != kNoNode; c = t_.next_sibling(c)) {
                if (c == skip) continue;
                const Index inh = is_cut(c) ? 0 : delta_[p];
                if (t_.is_leaf(c)) {
                    delta_[c] = inh;
                    if (counters_) counters_->chain_elements += 1;
                    continue;
                }
                for (Index x = t_.lb(c); x <= t_.rb(c); ++x) owner_[x] = static_cast<Index>(hang.size());
                hang.push_back(c);
                hang_inherited.push_back(inh);
            }
        }
        if (hang.empty()) return;

        std::vector<Index> start(hang.size() + 1, 0);
        for (std::size_t h = 0; h < hang.size(); ++h) start[h + 1] = start[h] + t_.leaf_count(hang[h]);
        std::vector<Index> lists(static_cast<std::size_t>(start.back()));
        {
            auto fill = start;
            for (Index pos : leaves) {
                const Index o = owner_[sa_.rank[pos]];
                if (o >= 0) lists[fill[o]++] = pos;
            }
        }
        for (std::size_t h = 0; h < hang.size(); ++h) {
            const auto sub = std::span<const Index>(lists).subspan(start[h], start[h + 1] - start[h]);
            solve(hang[h], sub, hang_inherited[h]);
        }
    }

private:
    bool is_cut(NodeId v) const { return cut_ != nullptr && (*cut_)[v] != 0; }

    const SuffixTree& t_;
    const SuffixArrayBundle& sa_;
    std::vector<Index>& delta_;
    const std::vector<char>* cut_;
    WorkCounters* counters_;
    ChainSolver chain_;
    std::vector<Index> owner_;
};

void validate(const PrefixFamilyEntry& e, Index n) {
    if (e.first < 1 || e.first > e.last || e.last > n || e.k < 1 || e.k > e.vlen || e.last + e.vlen - 1 > n)
        throw std::invalid_argument("malformed prefix family entry");
}

std::optional<SeedResult> border_seed(const PosArray& B, const PosArray& suffix_P,
                                      std::span<const PrefixFamilyEntry> F) {
    const Index n = B.size();
    for (const auto& e : F) validate(e, n);

    // entries by first occurrence, stable
    std::vector<std::size_t> by_first(static_cast<std::size_t>(n) + 2, 0), entry_order(F.size());
    for (const auto& e : F) ++by_first[e.first + 1];
    std::partial_sum(by_first.begin(), by_first.end(), by_first.begin());
    for (std::size_t i = 0; i < F.size(); ++i) entry_order[by_first[F[i].first]++] = i;

    // positions by border length; B[i] <= i - 1 < n
    std::vector<Index> by_border(static_cast<std::size_t>(n) + 1, 0), pos_order(static_cast<std::size_t>(n));
    for (Index i = 1; i <= n; ++i) ++by_border[B[i] + 1];
    std::partial_sum(by_border.begin(), by_border.end(), by_border.begin());
    for (Index i = 1; i <= n; ++i) pos_order[by_border[B[i]]++] = i;

    IntervalSuccessorSet alive(n);
    std::size_t next_dead = 0;
    std::optional<SeedResult> best;
    for (std::size_t idx : entry_order) {
        const auto& e = F[idx];
        const Index k = std::max(suffix_P[e.last], e.k);
        if (k > e.vlen) continue;
        // FirstGE([first+k-1, first+vlen-1], first-1)
        while (next_dead < pos_order.size() && B[pos_order[next_dead]] < e.first - 1)
            alive.erase(pos_order[next_dead++]);
        const Index pos = alive.next_alive(e.first + k - 1);
        if (pos > e.first + e.vlen - 1) continue;
        const Index len = pos - e.first + 1;
        if (!best || len < best->length) best = SeedResult{len, FactorRef{e.first, len}};
    }
    return best;
}

// Family of limited prefix subsets over all edges (v, w) with a computed Delta(w).
std::vector<PrefixFamilyEntry> edge_family(const SuffixTree& t, const PrefixMaxgapTable& table, Index min_len) {
    std::vector<PrefixFamilyEntry> F;
    F.reserve(static_cast<std::size_t>(t.node_count()));
    for (NodeId w = 1; w < t.node_count(); ++w) {
        if (table[w] < 0) continue;
        const Index k = std::max({t.depth(t.parent(w)) + 1, table[w], min_len});
        if (k > t.depth(w)) continue;
        F.push_back(PrefixFamilyEntry{t.first(w), t.last(w), k, t.depth(w)});
    }
    return F;
}

} // namespace

bool is_border_seed(const Text& u, const PosArray& P, const PosArray& suffix_P, FactorRef s, Index first,
                    Index last) {
    const Index n = u.size();
    if (s.len < 1 || s.start < 1 || s.end() > n || first < 1 || first > last || last + s.len - 1 > n)
        throw std::invalid_argument("is_border_seed: positions out of range");
#if QUASI_CHECKS
    const auto word = u.factor(s.start, s.len);
    if (u.factor(first, s.len) != word || u.factor(last, s.len) != word)
        throw std::invalid_argument("is_border_seed: first/last are not occurrences");
#endif
    return s.len >= P[first + s.len - 1] && s.len >= suffix_P[last];
}

bool is_border_seed(const Text& u, FactorRef s, Index first, Index last) {
    return is_border_seed(u, period_array(u), suffix_period_array(u), s, first, last);
}

std::optional<SeedResult> compute_border_seed(const Text& u, std::span<const PrefixFamilyEntry> F) {
    return border_seed(border_array(u), suffix_period_array(u), F);
}

std::vector<Index> chain_prefix_maxgap(const ChainInput& input, WorkCounters* counters) {
    const auto& L = input.union_sorted;
    if (input.sets.empty()) throw std::invalid_argument("chain: no sets");
    std::size_t total = 0;
    for (const auto& x : input.sets) total += x.size();
    if (total != L.size()) throw std::invalid_argument("chain: set sizes do not match the union");
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (L[i] < 1 || (i > 0 && L[i] <= L[i - 1]))
            throw std::invalid_argument("chain: union must be strictly increasing positive integers");
    }
    const Index cap = L.empty() ? 0 : L.back();

    std::vector<Index> flat, offsets{0};
    flat.reserve(total);
    for (const auto& x : input.sets) {
        for (Index v : x)
            if (v < 1 || v > cap) throw std::invalid_argument("chain: element outside the union");
        flat.insert(flat.end(), x.begin(), x.end());
        offsets.push_back(static_cast<Index>(flat.size()));
    }
#if QUASI_CHECKS
    {
        auto sorted = flat;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != L) throw std::invalid_argument("chain: sets overlap or differ from the union");
    }
#endif
    ChainSolver solver(cap);
    std::vector<Index> out;
    solver.solve(L, flat, offsets, out, counters);
    return out;
}

PrefixMaxgapTable prefix_maxgaps(const SuffixTree& t, WorkCounters* counters) {
    PrefixMaxgapTable table{std::vector<Index>(static_cast<std::size_t>(t.node_count()), -1)};
    std::vector<Index> all(static_cast<std::size_t>(t.text_size()));
    std::iota(all.begin(), all.end(), Index{1});
    PrefixMaxgapEngine(t, table.delta, nullptr, counters).solve(t.root(), all, 0);
    return table;
}

SeedResult shortest_seed(const Text& u, WorkCounters* counters) {
    const SuffixTree t(u);
    const auto table = prefix_maxgaps(t, counters);
    const auto F = edge_family(t, table, 1);
    auto best = border_seed(border_array(u), suffix_period_array(u), F);
    if (!best) throw std::logic_error("shortest_seed: no candidate found");
    return *best;
}

SeedResult shortest_seed_at_least(const Text& u, Index m, WorkCounters* counters) {
    const Index n = u.size();
    if (m < 1 || m > n) throw std::invalid_argument("minimum seed length out of range");
    const SuffixTree t(u);
    const auto& sa = t.suffix_array();
    const auto nodes = static_cast<std::size_t>(t.node_count());

    // Blocks: maximal subtrees of nodes with depth >= m. Inside a block, Delta
    // restarts below every edge where the leaf count drops to <= 2n/m.
    auto sparse = [&](NodeId v) { return static_cast<std::int64_t>(t.leaf_count(v)) * m <= 2 * std::int64_t{n}; };
    std::vector<char> cut(nodes, 0);
    std::vector<NodeId> blocks;
    for (NodeId v = 1; v < t.node_count(); ++v) {
        const NodeId p = t.parent(v);
        if (t.depth(v) < m) continue;
        if (t.depth(p) < m) blocks.push_back(v);
        else if (sparse(v) && !sparse(p)) cut[v] = 1;
    }

    // sorted leaf list per block in one pass over positions
    std::vector<Index> owner(static_cast<std::size_t>(n) + 1, -1), start(blocks.size() + 1, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (Index x = t.lb(blocks[b]); x <= t.rb(blocks[b]); ++x) owner[x] = static_cast<Index>(b);
        start[b + 1] = start[b] + t.leaf_count(blocks[b]);
    }
    std::vector<Index> lists(static_cast<std::size_t>(start.back()));
    {
        auto fill = start;
        for (Index pos = 1; pos <= n; ++pos) {
            const Index o = owner[sa.rank[pos]];
            if (o >= 0) lists[fill[o]++] = pos;
        }
    }

    PrefixMaxgapTable table{std::vector<Index>(nodes, -1)};
    PrefixMaxgapEngine engine(t, table.delta, &cut, counters);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        engine.solve(blocks[b], std::span<const Index>(lists).subspan(start[b], start[b + 1] - start[b]), 0);

    const auto F = edge_family(t, table, m);
    auto best = border_seed(border_array(u), suffix_period_array(u), F);
    if (!best) throw std::logic_error("shortest_seed_at_least: no candidate found");
    return *best;
}

} // namespace quasi
