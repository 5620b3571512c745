#pragma once

#include "pdrecon/oracle.hpp"

namespace pdrecon {

/// Sorted births of a dim-0 diagram: the heights of the filtration
/// hyperplanes in that direction, one per vertex.
struct height_list {
    direction dir;
    std::vector<double> heights; // strictly increasing
};

height_list heights_from_diagram(const augmented_diagram& dim0_diagram);

/// Third direction for the plane-graph pipeline: with w the spread of the
/// e1-heights and h the minimum gap of the e2-heights, a line parallel to the
/// perpendicular of (w, h/2) meets at most one horizontal candidate line
/// inside the bounding region, and the s-height order of the vertices equals
/// their y order.
direction third_direction_2d(const height_list& l1, const height_list& l2);

/// (d+1)-st direction in R^d: normalize(-1/w, ..., -1/w, (d-1)/h) with w the
/// largest axis spread and h half the smallest axis gap; every hyperplane
/// perpendicular to it meets at most one of the n^d candidate grid points.
direction localization_direction_dd(std::span<const height_list> lists);

struct vertex_reconstruction {
    std::vector<point> vertices; // sorted lexicographically
    std::uint64_t queries_used = 0;
    std::vector<direction> directions_used;
};

/// Plane-graph vertex recovery from three dim-0 diagrams (two for a single
/// vertex): heights at e1, e2 and the third direction; the i-th horizontal
/// line pairs with the i-th third-direction line and their intersection is a
/// vertex.
vertex_reconstruction reconstruct_vertices_2d(const diagram_oracle& oracle);

/// R^d vertex recovery from d+1 dim-0 diagrams (d for a single vertex): the
/// candidate grid of axis heights is streamed, never materialized, and a
/// candidate is a vertex exactly when its height matches a birth in the
/// localization direction.
vertex_reconstruction reconstruct_vertices_dd(const diagram_oracle& oracle, int d);

/// Relative tolerance for matching a candidate height against a diagram
/// birth; matches are bitwise in practice since both sides share the same
/// dot-product routine.
inline double height_match_tol(double h) { return 1e-9 * std::max(1.0, std::abs(h)); }

} // namespace pdrecon
