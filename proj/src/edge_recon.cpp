#include "pdrecon/edge_recon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pdrecon {

double bowtie_half_angle(std::span<const point> points, double min_half_angle) {
    if (points.size() < 2) raise(errc::too_few_points, "bowtie_half_angle: need two points");
    if (points.size() == 2) return std::numbers::pi / 4.0;
    const double theta = min_pairwise_angle(points) / 2.0;
    if (theta < min_half_angle)
        raise(errc::min_angle_too_small,
              "bowtie_half_angle: half-angle " + std::to_string(theta) + " below threshold");
    return theta;
}

int indegree_from_diagram(const augmented_diagram& dim0_diagram,
                          const augmented_diagram& dim1_diagram, double v_height) {
    const double tol = indegree_height_tol(v_height);
    int count = 0;
    for (const diagram_point& p : dim0_diagram.points)
        if (p.dim == 0 && p.has_finite_death() && std::abs(p.death - v_height) <= tol) ++count;
    for (const diagram_point& p : dim1_diagram.points)
        if (p.dim == 1 && std::abs(p.birth - v_height) <= tol) ++count;
    return count;
}

namespace {

// Zero-pad a 2d direction to d components.  Padding leaves the norm and the
// first-two-coordinate heights bitwise unchanged, so no renormalization.
direction lift_direction(const direction& s2, std::size_t d) {
    std::vector<double> c(d, 0.0);
    c[0] = s2[0];
    c[1] = s2[1];
    return direction(std::move(c));
}

int indegree_at(const diagram_oracle& oracle, const point& v, const direction& s) {
    const augmented_diagram diagram = oracle.query(s);
    return indegree_from_diagram(diagram.restrict_to(0), diagram.restrict_to(1),
                                 vertex_height(s, v));
}

} // namespace

bow_tie make_bow_tie(const point& apex, const point& toward, double half_angle) {
    if (apex.size() != toward.size() || apex.size() < 2)
        raise(errc::dimension_mismatch, "make_bow_tie: mismatched points");
    if (!(half_angle > 0.0)) raise(errc::invalid_argument, "make_bow_tie: half-angle must be > 0");
    const std::array<double, 2> delta{toward[0] - apex[0], toward[1] - apex[1]};
    const direction s = perpendicular_2d(delta);
    return bow_tie{apex, rotate_2d(s, half_angle), rotate_2d(s, -half_angle), half_angle};
}

bool edge_exists(const diagram_oracle& oracle, const point& v, const point& w, double theta) {
    const bow_tie b = make_bow_tie(v, w, theta);
    const std::size_t d = v.size();
    const direction d1 = d == 2 ? b.s1 : lift_direction(b.s1, d);
    const direction d2 = d == 2 ? b.s2 : lift_direction(b.s2, d);
    const int indeg1 = indegree_at(oracle, v, d1);
    const int indeg2 = indegree_at(oracle, v, d2);
    return std::abs(indeg1 - indeg2) == 1;
}

namespace {

edge_reconstruction reconstruct_edges_impl(const diagram_oracle& oracle,
                                           std::span<const point> vertices,
                                           double min_half_angle) {
    const std::uint64_t start_count = oracle.query_count();
    const std::size_t n = vertices.size();

    edge_reconstruction result;
    if (n < 2) {
        result.queries_used = 0;
        return result;
    }

    std::vector<point> projected;
    projected.reserve(n);
    for (const point& p : vertices) projected.push_back(point{p[0], p[1]});

    const double theta = bowtie_half_angle(projected, min_half_angle);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge_exists(oracle, vertices[i], vertices[j], theta))
                result.edges.push_back(edge{std::int32_t(i), std::int32_t(j)});

    std::sort(result.edges.begin(), result.edges.end());
    result.queries_used = oracle.query_count() - start_count;
    return result;
}

} // namespace

edge_reconstruction reconstruct_edges_2d(const diagram_oracle& oracle,
                                         std::span<const point> vertices,
                                         double min_half_angle) {
    if (oracle.dim() != 2) raise(errc::dimension_mismatch, "reconstruct_edges_2d: oracle not 2d");
    for (const point& p : vertices)
        if (p.size() != 2) raise(errc::dimension_mismatch, "reconstruct_edges_2d: vertex not 2d");
    return reconstruct_edges_impl(oracle, vertices, min_half_angle);
}

edge_reconstruction reconstruct_edges_dd(const diagram_oracle& oracle,
                                         std::span<const point> vertices,
                                         double min_half_angle) {
    const std::size_t d = oracle.dim();
    if (d < 2) raise(errc::dimension_mismatch, "reconstruct_edges_dd: need d >= 2");
    for (const point& p : vertices)
        if (p.size() != d) raise(errc::dimension_mismatch, "reconstruct_edges_dd: vertex dimension");

    // The projection clause of the general-position assumption: distinct
    // first and second coordinates, no collinear triple in the projection.
    const std::size_t n = vertices.size();
    if (d > 2 && n >= 2) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (vertices[i][0] == vertices[j][0] || vertices[i][1] == vertices[j][1])
                    raise(errc::projection_degenerate,
                          "reconstruct_edges_dd: duplicate projected coordinate");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    if (std::abs(orient2d(vertices[i], vertices[j], vertices[k])) < collinearity_tol)
                        raise(errc::projection_degenerate,
                              "reconstruct_edges_dd: collinear projected triple");
    }
    return reconstruct_edges_impl(oracle, vertices, min_half_angle);
}

} // namespace pdrecon
