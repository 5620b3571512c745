#include "pdrecon/vertex_recon.hpp"

#include <algorithm>
#include <cmath>

namespace pdrecon {

height_list heights_from_diagram(const augmented_diagram& dim0_diagram) {
    height_list list{dim0_diagram.dir, {}};
    for (const diagram_point& p : dim0_diagram.points)
        if (p.dim == 0) list.heights.push_back(p.birth);
    std::sort(list.heights.begin(), list.heights.end());
    return list;
}

namespace {

double min_gap(const std::vector<double>& sorted_heights) {
    double gap = infinite_death;
    for (std::size_t i = 0; i + 1 < sorted_heights.size(); ++i)
        gap = std::min(gap, sorted_heights[i + 1] - sorted_heights[i]);
    return gap;
}

} // namespace

direction third_direction_2d(const height_list& l1, const height_list& l2) {
    if (l1.heights.size() < 2 || l2.heights.size() < 2)
        raise(errc::need_two_vertices, "third_direction_2d: need at least two vertices");
    const double w = l1.heights.back() - l1.heights.front();
    const double h = min_gap(l2.heights);
    const std::array<double, 2> vec{w, h / 2.0};
    return perpendicular_2d(vec);
}

direction localization_direction_dd(std::span<const height_list> lists) {
    const std::size_t d = lists.size();
    if (d < 2) raise(errc::invalid_argument, "localization_direction_dd: need d >= 2");
    double w = 0.0;
    double smallest_gap = infinite_death;
    for (const height_list& list : lists) {
        if (list.heights.size() < 2)
            raise(errc::need_two_vertices, "localization_direction_dd: need at least two vertices");
        w = std::max(w, list.heights.back() - list.heights.front());
        smallest_gap = std::min(smallest_gap, min_gap(list.heights));
    }
    const double h = smallest_gap / 2.0;
    std::vector<double> x(d, -1.0 / w);
    x.back() = (static_cast<double>(d) - 1.0) / h;
    return direction::normalized(x);
}

vertex_reconstruction reconstruct_vertices_2d(const diagram_oracle& oracle) {
    if (oracle.dim() != 2) raise(errc::dimension_mismatch, "reconstruct_vertices_2d: oracle not 2d");
    const std::uint64_t start_count = oracle.query_count();

    const direction e1 = direction::axis(0, 2);
    const direction e2 = direction::axis(1, 2);
    const height_list l1 = heights_from_diagram(oracle.query_restricted(e1, 0));
    const height_list l2 = heights_from_diagram(oracle.query_restricted(e2, 0));
    const std::size_t n = l1.heights.size();

    vertex_reconstruction result;
    result.directions_used = {e1, e2};

    if (n == 1) {
        result.vertices.push_back(point{l1.heights[0], l2.heights[0]});
        result.queries_used = oracle.query_count() - start_count;
        return result;
    }

    const direction s = third_direction_2d(l1, l2);
    const height_list ls = heights_from_diagram(oracle.query_restricted(s, 0));
    result.directions_used.push_back(s);

    // The i-th horizontal line y = l2[i] meets the i-th line <p, s> = ls[i];
    // the 2x2 system has determinant s[0].
    if (std::abs(s[0]) < 1e-14)
        raise(errc::singular_intersection, "reconstruct_vertices_2d: degenerate intersection");
    for (std::size_t i = 0; i < n; ++i) {
        const double y = l2.heights[i];
        const double x = (ls.heights[i] - s[1] * y) / s[0];
        result.vertices.push_back(point{x, y});
    }
    std::sort(result.vertices.begin(), result.vertices.end());
    result.queries_used = oracle.query_count() - start_count;
    return result;
}

vertex_reconstruction reconstruct_vertices_dd(const diagram_oracle& oracle, int d) {
    if (d < 2) raise(errc::invalid_argument, "reconstruct_vertices_dd: need d >= 2");
    if (oracle.dim() != d) raise(errc::dimension_mismatch, "reconstruct_vertices_dd: oracle dimension");
    const std::uint64_t start_count = oracle.query_count();

    vertex_reconstruction result;
    std::vector<height_list> lists;
    lists.reserve(d);
    for (int i = 0; i < d; ++i) {
        const direction e = direction::axis(i, d);
        lists.push_back(heights_from_diagram(oracle.query_restricted(e, 0)));
        result.directions_used.push_back(e);
    }
    const std::size_t n = lists.front().heights.size();
    for (const height_list& list : lists)
        if (list.heights.size() != n)
            raise(errc::match_count_mismatch, "reconstruct_vertices_dd: inconsistent axis diagrams");

    if (n == 1) {
        point v(d);
        for (int i = 0; i < d; ++i) v[i] = lists[i].heights[0];
        result.vertices.push_back(std::move(v));
        result.queries_used = oracle.query_count() - start_count;
        return result;
    }

    const direction s = localization_direction_dd(lists);
    const height_list ls = heights_from_diagram(oracle.query_restricted(s, 0));
    result.directions_used.push_back(s);

    // Stream the n^d candidate grid with a d-digit odometer instead of
    // materializing it.
    std::vector<std::size_t> idx(d, 0);
    point candidate(d);
    while (true) {
        for (int k = 0; k < d; ++k) candidate[k] = lists[k].heights[idx[k]];
        const double h = dot_ordered(candidate, s.components());
        auto it = std::lower_bound(ls.heights.begin(), ls.heights.end(), h);
        bool matched = false;
        if (it != ls.heights.end() && std::abs(*it - h) <= height_match_tol(h)) matched = true;
        if (!matched && it != ls.heights.begin() && std::abs(*(it - 1) - h) <= height_match_tol(h))
            matched = true;
        if (matched) result.vertices.push_back(candidate);

        int k = d - 1;
        while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
        if (k < 0) break;
    }

    if (result.vertices.size() != n)
        raise(errc::match_count_mismatch,
              "reconstruct_vertices_dd: matched " + std::to_string(result.vertices.size()) +
                  " candidates, expected " + std::to_string(n));
    std::sort(result.vertices.begin(), result.vertices.end());
    result.queries_used = oracle.query_count() - start_count;
    return result;
}

} // namespace pdrecon
