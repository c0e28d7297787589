#pragma once

// Test-only enumeration oracles. These walk all 4^n step-label sequences
// directly and share no code with the engines they check.

#include <cstdint>
#include <vector>

#include "hullwalk/rational.hpp"
#include "hullwalk/types.hpp"

namespace hullwalk::testing {

struct EnumCounts {
    BigInt at_zero{0};
    BigInt positive{0};
    BigInt stay_positive{0};
};

inline EnumCounts enumerate_projected(const StepLawSpec& law, int n) {
    const std::int64_t vals[4] = {law.k, -law.k, law.m, -law.m};
    EnumCounts out;
    const std::uint64_t total = 1ull << (2 * n);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::int64_t s = 0;
        bool all_pos = true;
        std::uint64_t c = code;
        for (int j = 0; j < n; ++j, c >>= 2) {
            s += vals[c & 3u];
            all_pos = all_pos && s > 0;
        }
        if (s == 0) ++out.at_zero;
        if (s > 0) ++out.positive;
        if (all_pos) ++out.stay_positive;
    }
    return out;
}

template <class Visit>
void for_each_walk(int n, Visit&& visit) {
    constexpr IntVec2 steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    std::vector<IntVec2> pts(static_cast<std::size_t>(n) + 1);
    const std::uint64_t total = 1ull << (2 * n);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int j = 0; j < n; ++j, c >>= 2) pts[j + 1] = pts[j] + steps[c & 3u];
        visit(pts);
    }
}

} // namespace hullwalk::testing
