#include "pdrecon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace pdrecon {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::ok: return "ok";
        case errc::invalid_argument: return "invalid_argument";
        case errc::dimension_mismatch: return "dimension_mismatch";
        case errc::index_out_of_range: return "index_out_of_range";
        case errc::zero_vector: return "zero_vector";
        case errc::degenerate_direction: return "degenerate_direction";
        case errc::too_few_points: return "too_few_points";
        case errc::need_two_vertices: return "need_two_vertices";
        case errc::min_angle_too_small: return "min_angle_too_small";
        case errc::singular_intersection: return "singular_intersection";
        case errc::match_count_mismatch: return "match_count_mismatch";
        case errc::projection_degenerate: return "projection_degenerate";
        case errc::degenerate_configuration: return "degenerate_configuration";
        case errc::io_error: return "io_error";
    }
    return "unknown";
}

double dot_ordered(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

direction::direction(std::vector<double> components) : components_(std::move(components)) {
    if (components_.empty()) raise(errc::invalid_argument, "direction: empty component list");
    double sq = 0.0;
    for (double c : components_) {
        if (!std::isfinite(c)) raise(errc::invalid_argument, "direction: non-finite component");
        sq += c * c;
    }
    if (std::abs(std::sqrt(sq) - 1.0) > unit_norm_tol)
        raise(errc::invalid_argument, "direction: norm differs from 1 beyond 1e-12");
}

direction direction::normalized(std::span<const double> v) {
    double sq = 0.0;
    for (double c : v) sq += c * c;
    const double norm = std::sqrt(sq);
    if (norm == 0.0) raise(errc::zero_vector, "direction: cannot normalize a zero vector");
    std::vector<double> out(v.begin(), v.end());
    for (double& c : out) c /= norm;
    return direction(std::move(out));
}

direction direction::axis(std::size_t axis, std::size_t d) {
    if (axis >= d) raise(errc::index_out_of_range, "direction::axis: axis outside dimension");
    std::vector<double> out(d, 0.0);
    out[axis] = 1.0;
    return direction(std::move(out));
}

direction direction::operator-() const {
    std::vector<double> out(components_);
    for (double& c : out) c = -c;
    return direction(std::move(out));
}

double vertex_height(const direction& s, std::span<const double> v) {
    if (s.dim() != v.size()) raise(errc::dimension_mismatch, "vertex_height: dimension mismatch");
    return dot_ordered(v, s.components());
}

edge make_edge(std::int32_t a, std::int32_t b) {
    if (a == b) raise(errc::invalid_argument, "edge: self loop");
    return a < b ? edge{a, b} : edge{b, a};
}

embedded_graph::embedded_graph(int dim, std::vector<double> coords, std::vector<edge> edges)
    : dim_(dim), coords_(std::move(coords)), edges_(std::move(edges)) {
    if (dim_ < 1) raise(errc::invalid_argument, "graph: dimension must be >= 1");
    if (coords_.size() % dim_ != 0)
        raise(errc::invalid_argument, "graph: coordinate count not a multiple of dim");
    const int n = num_vertices();
    for (double c : coords_)
        if (!std::isfinite(c)) raise(errc::invalid_argument, "graph: non-finite coordinate");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::equal(vertex(i).begin(), vertex(i).end(), vertex(j).begin()))
                raise(errc::invalid_argument, "graph: duplicate vertices");
    for (edge& e : edges_) {
        if (e.u == e.v) raise(errc::invalid_argument, "graph: self loop");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n) raise(errc::index_out_of_range, "graph: edge index out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        raise(errc::invalid_argument, "graph: duplicate edges");
}

std::span<const double> embedded_graph::vertex(int i) const {
    if (i < 0 || i >= num_vertices()) raise(errc::index_out_of_range, "graph: vertex index");
    return {coords_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
}

point embedded_graph::vertex_point(int i) const {
    auto v = vertex(i);
    return point(v.begin(), v.end());
}

std::vector<point> embedded_graph::vertex_points() const {
    std::vector<point> pts;
    pts.reserve(num_vertices());
    for (int i = 0; i < num_vertices(); ++i) pts.push_back(vertex_point(i));
    return pts;
}

int embedded_graph::num_components() const {
    const int n = num_vertices();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n;
    for (const edge& e : edges_) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

double orient2d(std::span<const double> a, std::span<const double> b, std::span<const double> c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

namespace {

// Proper interior crossing of segments (a,b) and (c,d); endpoints shared by
// index are filtered by the caller.
bool segments_cross(std::span<const double> a, std::span<const double> b,
                    std::span<const double> c, std::span<const double> d) {
    const double o1 = orient2d(a, b, c);
    const double o2 = orient2d(a, b, d);
    const double o3 = orient2d(c, d, a);
    const double o4 = orient2d(c, d, b);
    if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
        ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0)))
        return true;
    // Collinear overlap: only possible for degenerate inputs, still reported.
    auto on_segment = [](std::span<const double> p, std::span<const double> q,
                         std::span<const double> r) {
        return std::min(p[0], q[0]) <= r[0] && r[0] <= std::max(p[0], q[0]) &&
               std::min(p[1], q[1]) <= r[1] && r[1] <= std::max(p[1], q[1]);
    };
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

} // namespace

general_position_report check_general_position(const embedded_graph& g, bool check_crossings) {
    general_position_report report;
    const int n = g.num_vertices();
    const int d = g.dim();

    for (int axis = 0; axis < d; ++axis) {
        std::vector<std::pair<double, int>> vals;
        vals.reserve(n);
        for (int i = 0; i < n; ++i) vals.emplace_back(g.vertex(i)[axis], i);
        std::sort(vals.begin(), vals.end());
        for (int i = 0; i + 1 < n; ++i) {
            if (vals[i].first == vals[i + 1].first) {
                gp_violation v;
                v.what = gp_violation::kind::duplicate_coordinate;
                v.axis = axis;
                v.vertices = {vals[i].second, vals[i + 1].second, -1};
                report.violations.push_back(v);
            }
        }
    }

    if (d >= 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    if (std::abs(orient2d(g.vertex(i), g.vertex(j), g.vertex(k))) < collinearity_tol) {
                        gp_violation v;
                        v.what = gp_violation::kind::collinear_triple;
                        v.vertices = {i, j, k};
                        report.violations.push_back(v);
                    }
                }
    }

    if (check_crossings && d == 2) {
        const auto& edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const edge& e = edges[i];
                const edge& f = edges[j];
                if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
                if (segments_cross(g.vertex(e.u), g.vertex(e.v), g.vertex(f.u), g.vertex(f.v))) {
                    gp_violation v;
                    v.what = gp_violation::kind::edge_crossing;
                    v.edges = {static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)};
                    report.violations.push_back(v);
                }
            }
    }

    return report;
}

double simplex_height(const direction& s, const embedded_graph& g, int vertex_index) {
    return vertex_height(s, g.vertex(vertex_index));
}

double simplex_height(const direction& s, const embedded_graph& g, edge e) {
    return std::max(vertex_height(s, g.vertex(e.u)), vertex_height(s, g.vertex(e.v)));
}

direction perpendicular_2d(std::span<const double> vec) {
    if (vec.size() != 2) raise(errc::dimension_mismatch, "perpendicular_2d: expects a 2-vector");
    if (vec[0] == 0.0 && vec[1] == 0.0) raise(errc::zero_vector, "perpendicular_2d: zero vector");
    const std::array<double, 2> perp{-vec[1], vec[0]};
    return direction::normalized(perp);
}

direction rotate_2d(const direction& s, double angle) {
    if (s.dim() != 2) raise(errc::dimension_mismatch, "rotate_2d: expects a 2d direction");
    const double c = std::cos(angle), si = std::sin(angle);
    const std::array<double, 2> out{c * s[0] - si * s[1], si * s[0] + c * s[1]};
    return direction::normalized(out);
}

double min_line_angle_at(std::size_t apex, std::span<const point> points) {
    constexpr double pi = std::numbers::pi;
    std::vector<double> angles;
    angles.reserve(points.size() - 1);
    const point& b = points[apex];
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i == apex) continue;
        double a = std::atan2(points[i][1] - b[1], points[i][0] - b[0]);
        if (a < 0) a += pi;
        if (a >= pi) a -= pi;
        angles.push_back(a);
    }
    if (angles.size() < 2) raise(errc::too_few_points, "min_line_angle_at: need two other points");
    std::sort(angles.begin(), angles.end());
    double best = pi - (angles.back() - angles.front()); // wrap-around gap
    for (std::size_t i = 0; i + 1 < angles.size(); ++i)
        best = std::min(best, angles[i + 1] - angles[i]);
    return best;
}

double min_pairwise_angle(std::span<const point> points) {
    if (points.size() < 3) raise(errc::too_few_points, "min_pairwise_angle: need at least 3 points");
    double best = std::numbers::pi;
    for (std::size_t apex = 0; apex < points.size(); ++apex)
        best = std::min(best, min_line_angle_at(apex, points));
    return best;
}

} // namespace pdrecon
