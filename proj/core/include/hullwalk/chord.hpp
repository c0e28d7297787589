#pragma once

#include <span>
#include <vector>

#include "hullwalk/lattice_path.hpp"
#include "hullwalk/types.hpp"

namespace hullwalk {

/// Reference frame of a chord: base point S_{n1} and direction
/// S_{n2} - S_{n1}. The normal projection of a point P relative to the
/// frame is the integer cross product
///     d.x * (P.y - base.y) - d.y * (P.x - base.x),
/// whose sign tells the side of the chord line. All geometry stays in
/// integers; there are no floating-point ties.
struct ChordFrame {
    IntVec2 base;
    IntVec2 direction;

    bool degenerate() const { return direction == IntVec2{0, 0}; }

    std::int64_t project(IntVec2 p) const {
        return direction.x * (p.y - base.y) - direction.y * (p.x - base.x);
    }
};

/// Frame of the chord named by `spec`. A zero direction (walk returned to
/// its n1 position) is reported as a degenerate frame, not an error.
ChordFrame chord_frame(const LatticePath& path, const EdgeEventSpec& spec);

/// Normal projections of every path point. Entries at times n1 and n2 of
/// the generating spec are exactly zero.
std::vector<std::int64_t> project_normal(const LatticePath& path, const ChordFrame& frame);

/// One-dimensional law of the projected unit steps: for direction (a, b)
/// the increments take the values {+a, -a, +b, -b} with probability 1/4
/// each, so the law is (k, m) = (|a|, |b|).
StepLawSpec induced_step_law(const ChordFrame& frame);

} // namespace hullwalk
