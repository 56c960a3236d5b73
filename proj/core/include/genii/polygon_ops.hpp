#pragma once

#include <span>
#include <vector>

#include "genii/geometry.hpp"

namespace genii::polygon {

// Boolean operations on regions. Inputs may have either winding; outputs use
// counter-clockwise outers and clockwise holes with no repeated closing point.
// Coordinates are snapped to a 2^-40 lattice on the way in.
Region unite(const Region& a, const Region& b);
Region intersect(const Region& a, const Region& b);
Region subtract(const Region& a, const Region& b);

// Union of many regions, reduced pairwise so cost stays near n log n.
Region unite_all(std::span<const Region> parts);

// Parts of open polylines that lie inside `clip`.
std::vector<Ring> clip_polylines(std::span<const Ring> lines, const Region& clip);

// Repairs winding and ring closure; drops rings with fewer than 3 distinct
// points. Self-intersecting input is replaced by its convex hull.
Region make_valid(const Region& region);

// Unit square [0,1]^2 as a region.
Region unit_square();

Region from_ring(Ring ring);

// Inside or within `tolerance` of the boundary of the even-odd region.
bool contains(const Region& region, Point p, double tolerance = 0.0);

}  // namespace genii::polygon
