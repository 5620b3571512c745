#pragma once

#include "pdrecon/oracle.hpp"

namespace pdrecon {

/// Half-angle threshold below which edge tests are numerically unreliable.
inline constexpr double default_min_half_angle = 1e-6;

/// Global bow-tie half-angle: half the minimum, over every apex v, of the
/// angular gap between adjacent lines through v and another point (naive
/// per-apex angular sort).  Two points span a single line; any half-angle
/// below pi/2 isolates the other point, so that case returns pi/4.
/// Raises min_angle_too_small when the result drops below `min_half_angle`.
double bowtie_half_angle(std::span<const point> points,
                         double min_half_angle = default_min_half_angle);

/// Number of edges incident to a vertex at height `v_height` that lie below
/// it: dim-0 deaths at that height plus dim-1 births at that height,
/// zero-persistence points included.
int indegree_from_diagram(const augmented_diagram& dim0_diagram,
                          const augmented_diagram& dim1_diagram, double v_height);

/// Relative height-equality tolerance for indegree counting; both sides use
/// the shared dot product, so matches are typically bitwise.
inline double indegree_height_tol(double h) { return 1e-9 * std::max(1.0, std::abs(h)); }

/// Bow tie at `apex`: the closure of the symmetric difference of the lower
/// half-planes in directions s1 and s2, which are the perpendicular of
/// `toward - apex` tilted by +/- the half-angle.  With the half-angle from
/// bowtie_half_angle the region contains `toward` and no other vertex.
struct bow_tie {
    point apex;
    direction s1;
    direction s2;
    double half_angle;
};

/// Builds the bow tie in the first-two-axes projection.
bow_tie make_bow_tie(const point& apex, const point& toward, double half_angle);

/// Bow-tie edge test between v and w (projections onto the first two axes for
/// d > 2, lifted back with zero-padded directions): queries the two diagrams
/// at +/- theta around the perpendicular of w - v and reports whether the
/// indegrees of v differ by exactly one.  Consumes two oracle queries.
bool edge_exists(const diagram_oracle& oracle, const point& v, const point& w, double theta);

struct edge_reconstruction {
    std::vector<edge> edges; // index pairs into the caller's vertex list
    std::uint64_t queries_used = 0;
};

/// Runs the bow-tie test over all vertex pairs; n^2 - n diagrams total.
edge_reconstruction reconstruct_edges_2d(const diagram_oracle& oracle,
                                         std::span<const point> vertices,
                                         double min_half_angle = default_min_half_angle);

/// Same decision procedure for graphs embedded in R^d: the bow tie is built
/// on the (x1, x2) projection and lifted to hyperplanes that meet that plane
/// orthogonally.
edge_reconstruction reconstruct_edges_dd(const diagram_oracle& oracle,
                                         std::span<const point> vertices,
                                         double min_half_angle = default_min_half_angle);

} // namespace pdrecon
