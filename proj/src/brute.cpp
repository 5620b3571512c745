#include "pdrecon/brute.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace pdrecon {

namespace {

// Component of `start` in the subgraph of the edges added so far.
std::vector<std::int32_t> component_of(int start, int n,
                                       const std::vector<edge>& added_edges) {
    std::vector<std::vector<std::int32_t>> adj(n);
    for (const edge& e : added_edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::vector<std::int32_t> comp;
    std::queue<int> todo;
    todo.push(start);
    seen[start] = 1;
    while (!todo.empty()) {
        int x = todo.front();
        todo.pop();
        comp.push_back(x);
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                todo.push(y);
            }
    }
    return comp;
}

} // namespace

augmented_diagram brute_force_apd(const embedded_graph& g, const direction& s) {
    const filtration_order order = build_lower_star_filtration(g, s);
    const int n = g.num_vertices();

    std::vector<double> height(n, 0.0);
    std::vector<char> present(n, 0);
    std::vector<edge> added;
    std::vector<diagram_point> dim0(n);
    std::vector<diagram_point> dim1;

    for (const filtration_event& ev : order.events) {
        if (ev.simplex.is_vertex()) {
            const int v = ev.simplex.u;
            present[v] = 1;
            height[v] = ev.height;
            dim0[v] = diagram_point{ev.height, infinite_death, 0, ev.simplex, simplex_id::none()};
        } else {
            const auto comp_u = component_of(ev.simplex.u, n, added);
            const bool same_component =
                std::find(comp_u.begin(), comp_u.end(), ev.simplex.v) != comp_u.end();
            if (same_component) {
                dim1.push_back(diagram_point{ev.height, infinite_death, 1, ev.simplex, simplex_id::none()});
            } else {
                const auto comp_v = component_of(ev.simplex.v, n, added);
                auto lowest = [&](const std::vector<std::int32_t>& comp) {
                    int best = comp.front();
                    for (int x : comp)
                        if (height[x] < height[best]) best = x;
                    return best;
                };
                const int rep_u = lowest(comp_u);
                const int rep_v = lowest(comp_v);
                const int young = height[rep_u] > height[rep_v] ? rep_u : rep_v;
                dim0[young].death = ev.height;
                dim0[young].death_simplex = ev.simplex;
            }
            added.push_back(edge{ev.simplex.u, ev.simplex.v});
        }
    }

    augmented_diagram diagram{s, {}};
    std::vector<int> by_birth;
    for (int i = 0; i < n; ++i)
        if (present[i]) by_birth.push_back(i);
    std::sort(by_birth.begin(), by_birth.end(),
              [&](int a, int b) { return height[a] < height[b]; });
    for (int i : by_birth) diagram.points.push_back(dim0[i]);
    diagram.points.insert(diagram.points.end(), dim1.begin(), dim1.end());
    return diagram;
}

bool diagrams_equivalent(const augmented_diagram& a, const augmented_diagram& b, double tol) {
    if (a.points.size() != b.points.size()) return false;
    auto key = [](const diagram_point& p) {
        return std::tuple<int, double, double>(p.dim, p.birth, p.death);
    };
    std::vector<std::tuple<int, double, double>> ka, kb;
    for (const auto& p : a.points) ka.push_back(key(p));
    for (const auto& p : b.points) kb.push_back(key(p));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    for (std::size_t i = 0; i < ka.size(); ++i) {
        if (std::get<0>(ka[i]) != std::get<0>(kb[i])) return false;
        const double db = std::abs(std::get<1>(ka[i]) - std::get<1>(kb[i]));
        if (!(db <= tol)) return false;
        const double x = std::get<2>(ka[i]), y = std::get<2>(kb[i]);
        if (x == infinite_death || y == infinite_death) {
            if (x != y) return false;
        } else if (!(std::abs(x - y) <= tol)) {
            return false;
        }
    }
    return true;
}

} // namespace pdrecon
