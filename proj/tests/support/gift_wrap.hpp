#pragma once

// Jarvis-march reference hull, kept test-only as the independent check of
// the production monotone chain.

#include <algorithm>
#include <span>
#include <vector>

#include "hullwalk/types.hpp"

namespace hullwalk::testing {

inline __int128 cross3(IntVec2 o, IntVec2 a, IntVec2 b) {
    return static_cast<__int128>(a.x - o.x) * (b.y - o.y) -
           static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

inline std::vector<IntVec2> gift_wrap(std::span<const IntVec2> points) {
    std::vector<IntVec2> p(points.begin(), points.end());
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() <= 2) return p;

    std::vector<IntVec2> hull;
    const IntVec2 start = p.front(); // lexicographically smallest
    IntVec2 cur = start;
    do {
        hull.push_back(cur);
        IntVec2 best = p[0] == cur ? p[1] : p[0];
        for (const IntVec2& q : p) {
            if (q == cur) continue;
            const auto c = cross3(cur, best, q);
            if (c < 0) {
                best = q; // q is clockwise of best: tighter wrap
            } else if (c == 0) {
                // collinear: take the farther point so inner ones are skipped
                const auto d1 = (best.x - cur.x) * (best.x - cur.x) +
                                (best.y - cur.y) * (best.y - cur.y);
                const auto d2 =
                    (q.x - cur.x) * (q.x - cur.x) + (q.y - cur.y) * (q.y - cur.y);
                if (d2 > d1) best = q;
            }
        }
        cur = best;
    } while (!(cur == start));
    return hull; // counterclockwise from the lexicographically smallest point
}

} // namespace hullwalk::testing
