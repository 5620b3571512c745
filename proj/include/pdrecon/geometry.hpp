#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pdrecon/errors.hpp"

namespace pdrecon {

/// A point in R^d, d >= 1, all coordinates finite.
using point = std::vector<double>;

/// Inner product accumulated strictly left to right in coordinate order.
/// Every height in this library goes through this one routine so that the
/// diagram side and the reconstruction side agree bitwise.
double dot_ordered(std::span<const double> a, std::span<const double> b);

/// Unit vector in S^{d-1}.  The norm is checked to 1 within unit_norm_tol.
class direction {
public:
    static constexpr double unit_norm_tol = 1e-12;

    explicit direction(std::vector<double> components);

    /// Scale an arbitrary nonzero vector to unit length.
    static direction normalized(std::span<const double> v);

    /// Standard basis vector e_axis (0-based) in R^d.
    static direction axis(std::size_t axis, std::size_t d);

    std::size_t dim() const { return components_.size(); }
    const std::vector<double>& components() const { return components_; }
    double operator[](std::size_t i) const { return components_[i]; }

    direction operator-() const;

    bool operator==(const direction& other) const = default;

private:
    std::vector<double> components_;
};

double vertex_height(const direction& s, std::span<const double> v);

/// Undirected edge as a canonical index pair, u < v.
struct edge {
    std::int32_t u = 0;
    std::int32_t v = 0;
    friend auto operator<=>(const edge&, const edge&) = default;
};

edge make_edge(std::int32_t a, std::int32_t b);

/// Straight-line embedded graph: n vertices in R^d plus undirected edges.
/// Construction enforces the structural invariants (distinct vertices, no
/// self loops, no duplicate edges, finite coordinates); general position is
/// checked separately via check_general_position.
class embedded_graph {
public:
    embedded_graph(int dim, std::vector<double> coords, std::vector<edge> edges);

    int dim() const { return dim_; }
    int num_vertices() const { return static_cast<int>(coords_.size()) / dim_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    std::span<const double> vertex(int i) const;
    point vertex_point(int i) const;
    const std::vector<double>& coords() const { return coords_; }
    const std::vector<edge>& edges() const { return edges_; }
    std::vector<point> vertex_points() const;

    /// Number of connected components.
    int num_components() const;

    bool operator==(const embedded_graph& other) const = default;

private:
    int dim_;
    std::vector<double> coords_; // n * dim, row major
    std::vector<edge> edges_;    // canonical, sorted
};

struct gp_violation {
    enum class kind { duplicate_coordinate, collinear_triple, edge_crossing };
    kind what;
    int axis = -1;                                     // duplicate_coordinate only
    std::array<std::int32_t, 3> vertices{-1, -1, -1};  // offending vertex indices
    std::array<std::int32_t, 2> edges{-1, -1};         // offending edge indices
};

struct general_position_report {
    std::vector<gp_violation> violations;
    bool ok() const { return violations.empty(); }
};

inline constexpr double collinearity_tol = 1e-12;

/// Orientation determinant of the triangle (a, b, c); positive for counter
/// clockwise order.  Inputs are 2d (or the first two coordinates are used).
double orient2d(std::span<const double> a, std::span<const double> b, std::span<const double> c);

/// Checks Assumption-1 style general position: pairwise distinct coordinates
/// along every axis (exact float inequality) and no collinear triple in the
/// (x1, x2) projection (|orientation| < collinearity_tol).  With
/// check_crossings set (d = 2, graph declared planar) also reports pairs of
/// edges whose interiors intersect.
general_position_report check_general_position(const embedded_graph& g, bool check_crossings = true);

/// Height of a simplex: a vertex index or a graph edge; edges take the max of
/// their endpoint heights.
double simplex_height(const direction& s, const embedded_graph& g, int vertex_index);
double simplex_height(const direction& s, const embedded_graph& g, edge e);

/// Counter-clockwise perpendicular (-v1, v0), normalized.
direction perpendicular_2d(std::span<const double> vec);

/// Standard counter-clockwise rotation by `angle` radians, renormalized.
direction rotate_2d(const direction& s, double angle);

/// Minimum over all apexes b and pairs {a, c} of the angle between the lines
/// ba and bc, lines taken modulo pi; result in (0, pi/2].  Points are
/// projected onto the first two axes.
double min_pairwise_angle(std::span<const point> points);

/// Per-apex variant: minimum angular gap between adjacent lines through
/// `apex` and every other point, lines modulo pi.
double min_line_angle_at(std::size_t apex, std::span<const point> points);

} // namespace pdrecon
