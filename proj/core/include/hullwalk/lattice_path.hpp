#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hullwalk/types.hpp"

namespace hullwalk {

/// A realized simple walk on Z^2: points S_0..S_n starting at the origin
/// with unit axis steps between consecutive points.
class LatticePath {
public:
    LatticePath() : points_{{0, 0}} {}
    explicit LatticePath(std::vector<IntVec2> points);

    /// Build from a step string over the alphabet {E, W, N, S}.
    static LatticePath from_steps(std::string_view steps);

    /// Parse either interchange format: a step file (one of E/W/N/S per
    /// whitespace-separated token) or a JSON array of [x, y] pairs.
    static LatticePath parse(std::string_view text);

    std::span<const IntVec2> points() const { return points_; }
    std::int64_t steps() const { return static_cast<std::int64_t>(points_.size()) - 1; }
    const IntVec2& operator[](std::size_t i) const { return points_[i]; }

private:
    std::vector<IntVec2> points_;
};

/// Unit step for a 2-bit selector: 0 -> E, 1 -> W, 2 -> N, 3 -> S.
constexpr IntVec2 unit_step(unsigned sel) {
    constexpr IntVec2 steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    return steps[sel & 3u];
}

} // namespace hullwalk
