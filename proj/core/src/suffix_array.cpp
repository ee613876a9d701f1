#include "quasi/suffix_array.hpp"

#include <algorithm>
#include <vector>

namespace quasi {

namespace {

// Induced sorting over integer symbols in [0, upper]; returns 0-based starts.
std::vector<Index> sa_is(const std::vector<Index>& s, Index upper) {
    const Index n = static_cast<Index>(s.size());
    if (n == 0) return {};
    if (n == 1) return {0};
    if (n == 2) return s[0] < s[1] ? std::vector<Index>{0, 1} : std::vector<Index>{1, 0};

    const auto N = static_cast<std::size_t>(n);
    const auto U = static_cast<std::size_t>(upper) + 1;
    std::vector<Index> sa(N);
    std::vector<char> is_s(N, 0);
    for (Index i = n - 2; i >= 0; --i)
        is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : static_cast<char>(s[i] < s[i + 1]);

    // bucket heads: L-type suffixes of symbol x start at sum_l[x], S-type at sum_s[x]
    std::vector<Index> sum_l(U + 1, 0), sum_s(U + 1, 0);
    for (Index i = 0; i < n; ++i) {
        if (!is_s[i]) ++sum_s[s[i]];
        else ++sum_l[s[i] + 1];
    }
    for (std::size_t x = 0; x < U; ++x) {
        sum_s[x] += sum_l[x];
        sum_l[x + 1] += sum_s[x];
    }

    std::vector<Index> buf(U + 1);
    auto induce = [&](const std::vector<Index>& lms) {
        std::fill(sa.begin(), sa.end(), -1);
        std::copy(sum_s.begin(), sum_s.end(), buf.begin());
        for (Index d : lms)
            if (d != n) sa[buf[s[d]]++] = d;
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        sa[buf[s[n - 1]]++] = n - 1;
        for (Index i = 0; i < n; ++i) {
            const Index v = sa[i];
            if (v >= 1 && !is_s[v - 1]) sa[buf[s[v - 1]]++] = v - 1;
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        for (Index i = n - 1; i >= 0; --i) {
            const Index v = sa[i];
            if (v >= 1 && is_s[v - 1]) sa[--buf[s[v - 1] + 1]] = v - 1;
        }
    };

    std::vector<Index> lms_id(N + 1, -1);
    std::vector<Index> lms;
    for (Index i = 1; i < n; ++i) {
        if (!is_s[i - 1] && is_s[i]) {
            lms_id[i] = static_cast<Index>(lms.size());
            lms.push_back(i);
        }
    }
    const Index m = static_cast<Index>(lms.size());
    induce(lms);

    if (m > 0) {
        std::vector<Index> sorted_lms;
        sorted_lms.reserve(static_cast<std::size_t>(m));
        for (Index v : sa)
            if (lms_id[v] != -1) sorted_lms.push_back(v);

        // name LMS substrings; equal substrings share a name
        std::vector<Index> rec(static_cast<std::size_t>(m));
        Index names = 0;
        rec[lms_id[sorted_lms[0]]] = 0;
        for (Index i = 1; i < m; ++i) {
            Index l = sorted_lms[i - 1], r = sorted_lms[i];
            const Index end_l = lms_id[l] + 1 < m ? lms[lms_id[l] + 1] : n;
            const Index end_r = lms_id[r] + 1 < m ? lms[lms_id[r] + 1] : n;
            bool same = true;
            if (end_l - l != end_r - r) {
                same = false;
            } else {
                while (l < end_l && s[l] == s[r]) {
                    ++l;
                    ++r;
                }
                if (l == n || s[l] != s[r]) same = false;
            }
            if (!same) ++names;
            rec[lms_id[sorted_lms[i]]] = names;
        }

        const auto rec_sa = sa_is(rec, names);
        for (Index i = 0; i < m; ++i) sorted_lms[i] = lms[rec_sa[i]];
        induce(sorted_lms);
    }
    return sa;
}

} // namespace

SuffixArrayBundle suffix_array(const Text& u) {
    const Index n = u.size();
    std::vector<Index> s(static_cast<std::size_t>(n));
    for (Index i = 1; i <= n; ++i) s[i - 1] = u[i];
    const auto sa = sa_is(s, 255);

    SuffixArrayBundle out{PosArray(n), PosArray(n), PosArray(n)};
    for (Index r = 1; r <= n; ++r) {
        out.SUF[r] = sa[r - 1] + 1;
        out.rank[out.SUF[r]] = r;
    }
    // Kasai: lcp of suffix p with its predecessor drops by at most 1 from p-1
    Index h = 0;
    for (Index p = 1; p <= n; ++p) {
        const Index r = out.rank[p];
        if (r == 1) {
            h = 0;
            continue;
        }
        const Index q = out.SUF[r - 1];
        while (p + h <= n && q + h <= n && u[p + h] == u[q + h]) ++h;
        out.LCP[r] = h;
        if (h > 0) --h;
    }
    return out;
}

} // namespace quasi
