#include "quasi/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace quasi::oracle {

namespace {

void guard(const Text& u) {
    if (u.size() > kMaxLength) throw std::length_error("oracle: text too long");
}

bool matches_at(std::string_view u, std::string_view s, std::size_t at) {
    if (at + s.size() > u.size()) return false;
    for (std::size_t j = 0; j < s.size(); ++j)
        if (u[at + j] != s[j]) return false;
    return true;
}

std::vector<Index> occ(std::string_view u, std::string_view s) {
    std::vector<Index> out;
    if (s.empty() || s.size() > u.size()) return out;
    for (std::size_t i = 0; i + s.size() <= u.size(); ++i)
        if (matches_at(u, s, i)) out.push_back(static_cast<Index>(i + 1));
    return out;
}

// Do windows of length len starting at `starts` (ascending) cover 1..n?
bool windows_cover(const std::vector<Index>& starts, Index len, Index n) {
    Index reach = 0;
    for (Index k : starts) {
        if (k > reach + 1) return false;
        reach = std::max(reach, k + len - 1);
    }
    return reach >= n;
}

bool covers(std::string_view w, std::string_view s) {
    return windows_cover(occ(w, s), static_cast<Index>(s.size()), static_cast<Index>(w.size()));
}

// s placed at 1-based offset k (possibly hanging off either end) agrees with u
bool agrees(std::string_view u, std::string_view s, Index k) {
    const auto n = static_cast<Index>(u.size());
    const auto L = static_cast<Index>(s.size());
    for (Index i = std::max<Index>(1, k); i <= std::min(n, k + L - 1); ++i)
        if (u[i - 1] != s[i - k]) return false;
    return true;
}

bool seed_check(std::string_view u, std::string_view s) {
    const auto o = occ(u, s);
    if (o.empty()) return false;
    const auto n = static_cast<Index>(u.size());
    const auto L = static_cast<Index>(s.size());
    // rightmost placement overhanging the left end, leftmost overhanging the right
    Index left = 0, right = 0;
    bool have_left = false, have_right = false;
    for (Index k = 1; k >= 2 - L && !have_left; --k)
        if (agrees(u, s, k)) left = k, have_left = true;
    for (Index k = n - L + 1; k <= n && !have_right; ++k)
        if (agrees(u, s, k)) right = k, have_right = true;
    if (!have_left || !have_right) return false;

    std::vector<Index> starts;
    starts.reserve(o.size() + 2);
    starts.push_back(left);
    starts.insert(starts.end(), o.begin(), o.end());
    starts.push_back(right);
    return windows_cover(starts, L, n);
}

} // namespace

std::vector<Index> occurrences(const Text& u, std::string_view s) {
    guard(u);
    return occ(u.bytes(), s);
}

Index period(std::string_view w) {
    const auto n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < n && ok; ++i) ok = w[i] == w[i + p];
        if (ok) return static_cast<Index>(p);
    }
    return static_cast<Index>(n);
}

Index border(std::string_view w) {
    for (std::size_t b = w.size(); b-- > 1;)
        if (w.substr(0, b) == w.substr(w.size() - b)) return static_cast<Index>(b);
    return 0;
}

Index maxgap(const std::vector<Index>& sorted) {
    Index best = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i) best = std::max(best, sorted[i] - sorted[i - 1]);
    return best;
}

bool is_cover(const Text& u, std::string_view s) {
    guard(u);
    return !s.empty() && covers(u.bytes(), s);
}

bool is_seed(const Text& u, std::string_view s) {
    guard(u);
    return !s.empty() && seed_check(u.bytes(), s);
}

bool is_seed_by_extension(const Text& u, std::string_view s) {
    guard(u);
    if (s.empty() || occ(u.bytes(), s).empty()) return false;
    const std::size_t L = s.size();
    for (std::size_t a = 0; a < L; ++a) {
        for (std::size_t b = 0; b < L; ++b) {
            std::string w(s.substr(0, a));
            w += u.bytes();
            w += s.substr(L - b);
            if (covers(w, s)) return true;
        }
    }
    return false;
}

bool is_left_seed(const Text& u, std::string_view s) {
    guard(u);
    return !s.empty() && u.bytes().substr(0, s.size()) == s && seed_check(u.bytes(), s);
}

bool is_right_seed(const Text& u, std::string_view s) {
    guard(u);
    if (s.empty() || s.size() > u.bytes().size()) return false;
    const std::string ur(u.bytes().rbegin(), u.bytes().rend());
    const std::string sr(s.rbegin(), s.rend());
    return ur.compare(0, sr.size(), sr) == 0 && seed_check(ur, sr);
}

bool is_border_seed(const Text& u, std::string_view s) {
    guard(u);
    const auto o = occ(u.bytes(), s);
    if (o.empty()) return false;
    const auto first = static_cast<std::size_t>(o.front() - 1);
    const auto end = static_cast<std::size_t>(o.back() - 1) + s.size();
    std::string w(u.bytes().substr(0, first));
    w += s;
    w += u.bytes().substr(end);
    return seed_check(w, s);
}

Index shortest_seed_length(const Text& u) {
    guard(u);
    const auto w = u.bytes();
    for (std::size_t L = 1; L <= w.size(); ++L)
        for (std::size_t i = 0; i + L <= w.size(); ++i)
            if (seed_check(w, w.substr(i, L))) return static_cast<Index>(L);
    return u.size();
}

std::vector<std::vector<Index>> all_seeds(const Text& u) {
    guard(u);
    const auto w = u.bytes();
    std::vector<std::vector<Index>> out(w.size() + 1);
    for (std::size_t L = 1; L <= w.size(); ++L) {
        std::unordered_set<std::string_view> seen;
        for (std::size_t i = 0; i + L <= w.size(); ++i) {
            const auto s = w.substr(i, L);
            if (!seen.insert(s).second) continue;
            if (seed_check(w, s)) out[L].push_back(static_cast<Index>(i + 1));
        }
    }
    return out;
}

Arrays brute_arrays(const Text& u) {
    guard(u);
    const auto w = u.bytes();
    const auto n = static_cast<Index>(w.size());
    Arrays a{PosArray(n), PosArray(n), PosArray(n), PosArray(n), PosArray(n), PosArray(n), PosArray(n), PosArray(n)};
    Index seed = 1;
    for (Index i = 1; i <= n; ++i) {
        const auto x = w.substr(0, static_cast<std::size_t>(i));
        a.P[i] = period(x);
        a.B[i] = border(x);
        a.suffix_P[i] = period(w.substr(static_cast<std::size_t>(i - 1)));

        a.C[i] = i;
        a.CM[i] = 0;
        for (Index c = 1; c < i; ++c) {
            if (covers(x, x.substr(0, static_cast<std::size_t>(c)))) {
                a.C[i] = std::min(a.C[i], c);
                a.CM[i] = c;
            }
        }

        a.LSeed[i] = i;
        for (Index c = 1; c <= i; ++c) {
            if (seed_check(x, x.substr(0, static_cast<std::size_t>(c)))) {
                a.LSeed[i] = c;
                break;
            }
        }
        a.LSeedM[i] = 0;
        for (Index c = i - 1; c >= 1; --c) {
            if (seed_check(x, x.substr(0, static_cast<std::size_t>(c)))) {
                a.LSeedM[i] = c;
                break;
            }
        }

        for (;; ++seed) {
            bool found = false;
            for (Index s = 1; s + seed - 1 <= i && !found; ++s)
                found = seed_check(x, x.substr(static_cast<std::size_t>(s - 1), static_cast<std::size_t>(seed)));
            if (found) break;
        }
        a.Seed[i] = seed;
    }
    return a;
}

} // namespace quasi::oracle
