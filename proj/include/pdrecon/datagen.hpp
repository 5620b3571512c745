#pragma once

#include <cstdint>
#include <optional>

#include "pdrecon/geometry.hpp"

namespace pdrecon {

/// Random-graph configuration: alpha-subsampled Delaunay triangulations over
/// uniform points in the unit square for d = 2; uniform points in the unit
/// cube with a random spanning tree plus extra random edges for d >= 3.
struct gen_config {
    int n = 10;
    double alpha = 1.0;        // edge-keep fraction in [0, 1]
    std::uint64_t seed = 0;
    int dim = 2;
    /// When set, instances whose bow-tie half-angle (half the minimum triple
    /// angle, the quantity edge reconstruction asserts on) falls below this
    /// value are rejected and resampled.
    std::optional<double> min_half_angle;
};

/// n i.i.d. uniform points in the unit cube, resampled until they are in
/// general position (distinct coordinates per axis, no collinear triple in
/// the first-two-axes projection within collinearity_tol).
std::vector<point> sample_points(int n, std::uint64_t seed, int dim = 2);

struct triangle {
    std::int32_t a, b, c;
};

inline constexpr double incircle_tol = 1e-12;

/// Bowyer-Watson incremental Delaunay triangulation with the in-circle
/// determinant predicate.  Raises degenerate_configuration on near-cocircular
/// input or a broken insertion cavity so the caller can resample.  The result
/// is certified: every triangle's circumcircle is verified empty.
std::vector<triangle> delaunay_triangulate(std::span<const point> points);

/// Edge set of the Delaunay triangulation (the single edge for n = 2).
std::vector<edge> delaunay_edges(std::span<const point> points);

/// Keeps ceil(alpha * |edges|) edges chosen uniformly without replacement.
std::vector<edge> subsample_edges(std::span<const edge> edges, double alpha, std::uint64_t seed);

/// Full generator driver: sample, triangulate, subsample, filter; resamples
/// on degenerate configurations.  (n, alpha, seed, dim) fully determine the
/// output.
embedded_graph generate_graph(const gen_config& config);

} // namespace pdrecon
