#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <ostream>

#include "supercong/padic.hpp"

namespace supercong {

inline void PrintTo(const PAdic& x, std::ostream* os) { *os << x.str(); }

/// Equal as values: congruent to the smaller of the two absolute precisions.
/// Exact zero only matches exact zero.
inline ::testing::AssertionResult Same(const PAdic& x, const PAdic& y) {
    if (x.is_exact_zero() || y.is_exact_zero()) {
        if (x.is_exact_zero() && y.is_exact_zero()) return ::testing::AssertionSuccess();
        return ::testing::AssertionFailure() << x.str() << " vs " << y.str();
    }
    const int e = std::min(x.absolute_precision(), y.absolute_precision());
    if (congruent_mod(x, y, e)) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << x.str() << " vs " << y.str() << " differ mod p^" << e;
}

}  // namespace supercong
