#pragma once

#include "quasi/types.hpp"

namespace quasi {

/// Suffix array with its LCP array and inverse.
///   SUF[r]  = start of the r-th smallest suffix
///   LCP[r]  = |lcp(suffix SUF[r-1], suffix SUF[r])|, LCP[1] = 0
///   rank[p] = r such that SUF[r] = p
struct SuffixArrayBundle {
    PosArray SUF;
    PosArray LCP;
    PosArray rank;
};

/// Linear-time construction (induced sorting, then Kasai's LCP pass).
SuffixArrayBundle suffix_array(const Text& u);

} // namespace quasi
