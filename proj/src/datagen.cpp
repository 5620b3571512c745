#include "pdrecon/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "pdrecon/rng.hpp"

namespace pdrecon {

namespace {

bool points_in_general_position(const std::vector<point>& pts, int dim) {
    const int n = static_cast<int>(pts.size());
    for (int axis = 0; axis < dim; ++axis) {
        std::vector<double> vals(n);
        for (int i = 0; i < n; ++i) vals[i] = pts[i][axis];
        std::sort(vals.begin(), vals.end());
        if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) return false;
    }
    if (dim >= 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (std::abs(orient2d(pts[i], pts[j], pts[k])) < collinearity_tol) return false;
    }
    return true;
}

} // namespace

std::vector<point> sample_points(int n, std::uint64_t seed, int dim) {
    if (n < 1) raise(errc::invalid_argument, "sample_points: n must be >= 1");
    if (dim < 1) raise(errc::invalid_argument, "sample_points: dim must be >= 1");
    rng64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<point> pts(n, point(dim));
        for (auto& p : pts)
            for (double& c : p) c = rng.next_double();
        if (points_in_general_position(pts, dim)) return pts;
    }
    raise(errc::degenerate_configuration, "sample_points: rejection sampling did not converge");
}

namespace {

// In-circle determinant for a counter-clockwise triangle (a, b, c): positive
// when p lies strictly inside the circumcircle.
double incircle(const point& a, const point& b, const point& c, const point& p) {
    const double adx = a[0] - p[0], ady = a[1] - p[1];
    const double bdx = b[0] - p[0], bdy = b[1] - p[1];
    const double cdx = c[0] - p[0], cdy = c[1] - p[1];
    const double ad = adx * adx + ady * ady;
    const double bd = bdx * bdx + bdy * bdy;
    const double cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
           ad * (bdx * cdy - bdy * cdx);
}

struct edge_key {
    std::int32_t a, b;
    edge_key(std::int32_t x, std::int32_t y) : a(std::min(x, y)), b(std::max(x, y)) {}
    friend auto operator<=>(const edge_key&, const edge_key&) = default;
};

} // namespace

std::vector<triangle> delaunay_triangulate(std::span<const point> points) {
    const int n = static_cast<int>(points.size());
    if (n < 3) raise(errc::too_few_points, "delaunay_triangulate: need at least 3 points");

    std::vector<point> pts(points.begin(), points.end());
    double min_x = pts[0][0], max_x = pts[0][0], min_y = pts[0][1], max_y = pts[0][1];
    for (const point& p : pts) {
        min_x = std::min(min_x, p[0]);
        max_x = std::max(max_x, p[0]);
        min_y = std::min(min_y, p[1]);
        max_y = std::max(max_y, p[1]);
    }
    const double cx = (min_x + max_x) / 2, cy = (min_y + max_y) / 2;
    const double big = 16.0 * std::max({max_x - min_x, max_y - min_y, 1.0});
    pts.push_back(point{cx - 2 * big, cy - big});
    pts.push_back(point{cx + 2 * big, cy - big});
    pts.push_back(point{cx, cy + 2 * big});

    std::vector<triangle> tris{{n, n + 1, n + 2}}; // counter-clockwise

    for (int ip = 0; ip < n; ++ip) {
        const point& p = pts[ip];

        std::vector<triangle> keep;
        std::map<edge_key, int> boundary_count;
        bool any_bad = false;
        for (const triangle& t : tris) {
            const double det = incircle(pts[t.a], pts[t.b], pts[t.c], p);
            const bool all_real = t.a < n && t.b < n && t.c < n;
            if (all_real && std::abs(det) <= incircle_tol)
                raise(errc::degenerate_configuration, "delaunay: near-cocircular points");
            if (det > 0) {
                any_bad = true;
                for (const edge_key& e :
                     {edge_key(t.a, t.b), edge_key(t.b, t.c), edge_key(t.c, t.a)})
                    ++boundary_count[e];
            } else {
                keep.push_back(t);
            }
        }
        if (!any_bad)
            raise(errc::degenerate_configuration, "delaunay: insertion cavity empty");

        tris = std::move(keep);
        for (const auto& [e, count] : boundary_count) {
            if (count > 2) raise(errc::degenerate_configuration, "delaunay: broken cavity");
            if (count != 1) continue;
            const double orient = orient2d(pts[e.a], pts[e.b], p);
            if (std::abs(orient) < collinearity_tol)
                raise(errc::degenerate_configuration, "delaunay: collinear insertion");
            if (orient > 0)
                tris.push_back(triangle{e.a, e.b, ip});
            else
                tris.push_back(triangle{e.b, e.a, ip});
        }
    }

    std::erase_if(tris, [n](const triangle& t) { return t.a >= n || t.b >= n || t.c >= n; });

    // Structural check: a triangulation of all n points covering the hull.
    std::map<edge_key, int> edge_use;
    std::set<std::int32_t> used;
    for (const triangle& t : tris) {
        used.insert({t.a, t.b, t.c});
        for (const edge_key& e : {edge_key(t.a, t.b), edge_key(t.b, t.c), edge_key(t.c, t.a)})
            ++edge_use[e];
    }
    int hull_edges = 0;
    for (const auto& [e, count] : edge_use) {
        if (count > 2) raise(errc::degenerate_configuration, "delaunay: non-manifold edge");
        if (count == 1) ++hull_edges;
    }
    if (static_cast<int>(used.size()) != n ||
        static_cast<int>(tris.size()) != 2 * n - hull_edges - 2)
        raise(errc::degenerate_configuration, "delaunay: inconsistent triangulation");

    // Certify the empty-circumcircle property against every input point.
    for (const triangle& t : tris)
        for (int q = 0; q < n; ++q) {
            if (q == t.a || q == t.b || q == t.c) continue;
            if (incircle(pts[t.a], pts[t.b], pts[t.c], pts[q]) > -incircle_tol)
                raise(errc::degenerate_configuration, "delaunay: certification failed");
        }

    return tris;
}

std::vector<edge> delaunay_edges(std::span<const point> points) {
    if (points.size() < 2) return {};
    if (points.size() == 2) return {edge{0, 1}};
    std::set<edge> edges;
    for (const triangle& t : delaunay_triangulate(points)) {
        edges.insert(make_edge(t.a, t.b));
        edges.insert(make_edge(t.b, t.c));
        edges.insert(make_edge(t.c, t.a));
    }
    return {edges.begin(), edges.end()};
}

std::vector<edge> subsample_edges(std::span<const edge> edges, double alpha, std::uint64_t seed) {
    if (alpha < 0.0 || alpha > 1.0) raise(errc::invalid_argument, "subsample_edges: alpha in [0,1]");
    const std::size_t m = edges.size();
    // Ceiling of alpha*m with a tiny guard against float noise in the product.
    const auto k = static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(m) - 1e-9));
    std::vector<edge> pool(edges.begin(), edges.end());
    rng64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.next_below(m - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

namespace {

constexpr std::uint64_t subsample_salt = 0xa075176c5b17a2bdULL;
constexpr std::uint64_t attempt_salt = 0x9e3779b97f4a7c15ULL;

embedded_graph generate_plane_graph(const gen_config& config) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t seed = config.seed + attempt * attempt_salt;
        std::vector<point> pts = sample_points(config.n, seed, 2);
        if (config.min_half_angle && config.n >= 3 &&
            min_pairwise_angle(pts) / 2.0 < *config.min_half_angle)
            continue;
        std::vector<edge> dt;
        try {
            dt = delaunay_edges(pts);
        } catch (const error& e) {
            if (e.code() == errc::degenerate_configuration) continue;
            throw;
        }
        std::vector<edge> kept = subsample_edges(dt, config.alpha, seed ^ subsample_salt);
        std::vector<double> coords;
        coords.reserve(config.n * 2);
        for (const point& p : pts) coords.insert(coords.end(), p.begin(), p.end());
        return embedded_graph(2, std::move(coords), std::move(kept));
    }
}

embedded_graph generate_embedded_graph(const gen_config& config) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t seed = config.seed + attempt * attempt_salt;
        std::vector<point> pts = sample_points(config.n, seed, config.dim);
        if (config.min_half_angle && config.n >= 3) {
            std::vector<point> projected;
            projected.reserve(pts.size());
            for (const point& p : pts) projected.push_back(point{p[0], p[1]});
            if (min_pairwise_angle(projected) / 2.0 < *config.min_half_angle) continue;
        }

        rng64 rng(seed ^ subsample_salt);
        std::set<edge> edges;
        // Random recursive tree keeps the graph connected; extra edges are a
        // fraction alpha of the tree size, drawn from the remaining pairs.
        for (int i = 1; i < config.n; ++i)
            edges.insert(make_edge(static_cast<std::int32_t>(rng.next_below(i)), i));
        if (config.n >= 3) {
            std::vector<edge> rest;
            for (std::int32_t i = 0; i < config.n; ++i)
                for (std::int32_t j = i + 1; j < config.n; ++j)
                    if (!edges.contains(edge{i, j})) rest.push_back(edge{i, j});
            const auto extra = static_cast<std::size_t>(
                std::ceil(config.alpha * static_cast<double>(config.n - 1) - 1e-9));
            for (std::size_t i = 0; i < std::min(extra, rest.size()); ++i) {
                const std::size_t j = i + rng.next_below(rest.size() - i);
                std::swap(rest[i], rest[j]);
                edges.insert(rest[i]);
            }
        }

        std::vector<double> coords;
        coords.reserve(static_cast<std::size_t>(config.n) * config.dim);
        for (const point& p : pts) coords.insert(coords.end(), p.begin(), p.end());
        return embedded_graph(config.dim, std::move(coords),
                              std::vector<edge>(edges.begin(), edges.end()));
    }
}

} // namespace

embedded_graph generate_graph(const gen_config& config) {
    if (config.n < 1) raise(errc::invalid_argument, "generate_graph: n must be >= 1");
    if (config.alpha < 0.0 || config.alpha > 1.0)
        raise(errc::invalid_argument, "generate_graph: alpha in [0,1]");
    if (config.dim < 2) raise(errc::invalid_argument, "generate_graph: dim must be >= 2");
    return config.dim == 2 ? generate_plane_graph(config) : generate_embedded_graph(config);
}

} // namespace pdrecon
