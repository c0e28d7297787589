#include "hullwalk/hull.hpp"

#include <algorithm>

namespace hullwalk {

namespace {

using Wide = __int128;

// Orientation of the turn o -> a -> b: positive for a left turn.
Wide cross3(IntVec2 o, IntVec2 a, IntVec2 b) {
    return Wide(a.x - o.x) * Wide(b.y - o.y) - Wide(a.y - o.y) * Wide(b.x - o.x);
}

} // namespace

HullPolygon convex_hull(std::span<const IntVec2> points) {
    require(!points.empty(), "convex hull needs at least one point");
    std::vector<IntVec2> p(points.begin(), points.end());
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());

    HullPolygon hull;
    if (p.size() <= 2) {
        hull.vertices = std::move(p);
        return hull;
    }

    // Andrew's monotone chain; strict turns only, so collinear boundary
    // points never become vertices.
    std::vector<IntVec2>& h = hull.vertices;
    h.reserve(p.size() + 1);
    for (const IntVec2& q : p) { // lower hull
        while (h.size() >= 2 && cross3(h[h.size() - 2], h.back(), q) <= 0) h.pop_back();
        h.push_back(q);
    }
    const std::size_t lower = h.size() + 1;
    for (auto it = p.rbegin() + 1; it != p.rend(); ++it) { // upper hull
        while (h.size() >= lower && cross3(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
        h.push_back(*it);
    }
    h.pop_back(); // last point repeats the first
    return hull;
}

bool chord_on_boundary_strict(std::span<const IntVec2> points, const EdgeEventSpec& spec) {
    require(spec.valid(), "edge spec must satisfy 0 <= n1 < n2 <= n");
    require(spec.n == static_cast<std::int64_t>(points.size()) - 1,
            "edge spec length does not match the path");
    const IntVec2 base = points[static_cast<std::size_t>(spec.n1)];
    const IntVec2 dir = points[static_cast<std::size_t>(spec.n2)] - base;
    if (dir == IntVec2{0, 0}) return false;

    bool pos = false;
    bool neg = false;
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (static_cast<std::int64_t>(j) == spec.n1 || static_cast<std::int64_t>(j) == spec.n2)
            continue;
        const Wide c = Wide(dir.x) * (points[j].y - base.y) - Wide(dir.y) * (points[j].x - base.x);
        if (c == 0) return false;
        (c > 0 ? pos : neg) = true;
        if (pos && neg) return false;
    }
    return true;
}

bool chord_on_boundary_strict(const LatticePath& path, const EdgeEventSpec& spec) {
    return chord_on_boundary_strict(path.points(), spec);
}

bool chord_is_hull_edge_geometric(const LatticePath& path, const EdgeEventSpec& spec) {
    require(spec.valid(), "edge spec must satisfy 0 <= n1 < n2 <= n");
    require(spec.n == path.steps(), "edge spec length does not match the path");
    const IntVec2 a = path[static_cast<std::size_t>(spec.n1)];
    const IntVec2 b = path[static_cast<std::size_t>(spec.n2)];
    if (a == b) return false;

    const HullPolygon hull = convex_hull(path.points());
    const auto& v = hull.vertices;
    std::ptrdiff_t ia = -1;
    std::ptrdiff_t ib = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == a) ia = static_cast<std::ptrdiff_t>(i);
        if (v[i] == b) ib = static_cast<std::ptrdiff_t>(i);
    }
    if (ia < 0 || ib < 0) return false;
    if (v.size() == 2) return true; // the two ends of a degenerate hull are adjacent
    const auto gap = std::abs(ia - ib);
    return gap == 1 || gap == static_cast<std::ptrdiff_t>(v.size()) - 1;
}

} // namespace hullwalk
