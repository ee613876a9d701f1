#pragma once

// Precondition checks that would change the asymptotic cost of an operation
// are compiled only into debug builds (or when QUASI_ENABLE_CHECKS is set).
#if !defined(NDEBUG) || defined(QUASI_ENABLE_CHECKS)
#define QUASI_CHECKS 1
#else
#define QUASI_CHECKS 0
#endif
