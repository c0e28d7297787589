#include "hullwalk/chord.hpp"

namespace hullwalk {

ChordFrame chord_frame(const LatticePath& path, const EdgeEventSpec& spec) {
    require(spec.valid(), "edge spec must satisfy 0 <= n1 < n2 <= n");
    if (spec.n != path.steps() || spec.n2 > path.steps())
        throw std::out_of_range("edge spec indices exceed the path length");
    const IntVec2 base = path[static_cast<std::size_t>(spec.n1)];
    const IntVec2 dir = path[static_cast<std::size_t>(spec.n2)] - base;
    return ChordFrame{base, dir};
}

std::vector<std::int64_t> project_normal(const LatticePath& path, const ChordFrame& frame) {
    require(!frame.degenerate(), "cannot project onto a degenerate chord frame");
    std::vector<std::int64_t> out;
    out.reserve(path.points().size());
    for (const IntVec2& p : path.points()) out.push_back(frame.project(p));
    return out;
}

StepLawSpec induced_step_law(const ChordFrame& frame) {
    require(!frame.degenerate(), "degenerate chord has no induced step law");
    const auto a = frame.direction.x < 0 ? -frame.direction.x : frame.direction.x;
    const auto b = frame.direction.y < 0 ? -frame.direction.y : frame.direction.y;
    return StepLawSpec{static_cast<int>(a), static_cast<int>(b)};
}

} // namespace hullwalk
