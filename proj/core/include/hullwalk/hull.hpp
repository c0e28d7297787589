#pragma once

#include <span>
#include <vector>

#include "hullwalk/lattice_path.hpp"
#include "hullwalk/types.hpp"

namespace hullwalk {

/// Convex hull as a strictly convex polygon: vertices in counterclockwise
/// order, no three consecutive collinear. Inputs that are all equal or all
/// collinear give 1- or 2-vertex outputs flagged degenerate.
struct HullPolygon {
    std::vector<IntVec2> vertices;
    bool degenerate() const { return vertices.size() < 3; }
};

/// Monotone-chain construction with exact integer orientation tests.
/// Collinear boundary points are excluded from the vertex list.
HullPolygon convex_hull(std::span<const IntVec2> points);

/// Strict one-sidedness of the chord S_{n1}S_{n2}: true iff every point at
/// a time other than n1, n2 has strictly positive normal projection, or
/// every one strictly negative. A zero projection (collinear point, which
/// includes revisits of the chord endpoints) makes the event false, as
/// does a degenerate chord. Vacuously true when no other points exist.
bool chord_on_boundary_strict(std::span<const IntVec2> points, const EdgeEventSpec& spec);
bool chord_on_boundary_strict(const LatticePath& path, const EdgeEventSpec& spec);

/// Companion predicate: S_{n1} and S_{n2} are both hull vertices and
/// adjacent in the polygon (any two vertices of a degenerate 2-vertex hull
/// count as adjacent). Differs from the strict predicate exactly on paths
/// with a zero-projection point, e.g. a chord that is a strict subset of a
/// longer hull edge.
bool chord_is_hull_edge_geometric(const LatticePath& path, const EdgeEventSpec& spec);

} // namespace hullwalk
