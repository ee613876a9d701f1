#include "quasi/periodicity.hpp"

#include <stdexcept>

#include "checks.hpp"

namespace quasi {

PosArray border_array(const Text& u) {
    const Index n = u.size();
    PosArray b(n);
    Index k = 0;
    for (Index i = 2; i <= n; ++i) {
        while (k > 0 && u[k + 1] != u[i]) k = b[k];
        if (u[k + 1] == u[i]) ++k;
        b[i] = k;
    }
    return b;
}

PosArray period_array(const PosArray& border) {
    const Index n = border.size();
    PosArray p(n);
    for (Index i = 1; i <= n; ++i) p[i] = i - border[i];
    return p;
}

PosArray period_array(const Text& u) { return period_array(border_array(u)); }

PosArray suffix_period_array(const Text& u) {
    const Index n = u.size();
    const PosArray rev = period_array(u.reversed());
    PosArray p(n);
    for (Index i = 1; i <= n; ++i) p[i] = rev[n - i + 1];
    return p;
}

Index maxgap(std::span<const Index> sorted) {
    Index best = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
#if QUASI_CHECKS
        if (sorted[i] <= sorted[i - 1]) throw std::invalid_argument("maxgap: input not strictly increasing");
#endif
        if (sorted[i] - sorted[i - 1] > best) best = sorted[i] - sorted[i - 1];
    }
    return best;
}

} // namespace quasi
