#include "pdrecon/persistence.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace pdrecon {

filtration_order build_lower_star_filtration(const embedded_graph& g, const direction& s) {
    if (static_cast<int>(s.dim()) != g.dim())
        raise(errc::dimension_mismatch, "filtration: direction dimension mismatch");
    const int n = g.num_vertices();

    std::vector<double> heights(n);
    for (int i = 0; i < n; ++i) heights[i] = vertex_height(s, g.vertex(i));

    {
        std::vector<double> sorted(heights);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            raise(errc::degenerate_direction, "filtration: two vertices at equal height");
    }

    filtration_order order;
    order.events.reserve(n + g.num_edges());
    for (int i = 0; i < n; ++i) order.events.push_back({simplex_id::vertex(i), heights[i]});
    for (const edge& e : g.edges())
        order.events.push_back({simplex_id::of_edge(e), std::max(heights[e.u], heights[e.v])});

    std::sort(order.events.begin(), order.events.end(),
              [](const filtration_event& a, const filtration_event& b) {
                  if (a.height != b.height) return a.height < b.height;
                  if (a.simplex.is_vertex() != b.simplex.is_vertex()) return a.simplex.is_vertex();
                  return a.simplex < b.simplex;
              });
    return order;
}

namespace {

struct union_find {
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> rank_;

    explicit union_find(int n) : parent(n, -1), rank_(n, 0) {}

    void make_set(int x) { parent[x] = x; }

    int find(int x) {
        int root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) {
            int next = parent[x];
            parent[x] = root;
            x = next;
        }
        return root;
    }

    // Returns the new root.
    int unite(int a, int b) {
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return a;
    }
};

} // namespace

augmented_diagram compute_apd(const embedded_graph& g, const direction& s) {
    const filtration_order order = build_lower_star_filtration(g, s);
    const int n = g.num_vertices();

    union_find uf(n);
    std::vector<std::int32_t> oldest(n, -1);  // root -> vertex carrying the component birth
    std::vector<double> birth_height(n, 0.0); // vertex -> its own birth height
    std::vector<diagram_point> dim0(n);
    std::vector<diagram_point> dim1;

    for (const filtration_event& ev : order.events) {
        if (ev.simplex.is_vertex()) {
            const int v = ev.simplex.u;
            uf.make_set(v);
            oldest[v] = v;
            birth_height[v] = ev.height;
            dim0[v] = diagram_point{ev.height, infinite_death, 0, ev.simplex, simplex_id::none()};
        } else {
            const int ra = uf.find(ev.simplex.u);
            const int rb = uf.find(ev.simplex.v);
            if (ra == rb) {
                dim1.push_back(diagram_point{ev.height, infinite_death, 1, ev.simplex, simplex_id::none()});
            } else {
                // Elder rule: the component born later dies; vertex births are
                // pairwise distinct, so there is never a tie to break.
                const int va = oldest[ra];
                const int vb = oldest[rb];
                const int young = birth_height[va] > birth_height[vb] ? va : vb;
                const int old = young == va ? vb : va;
                dim0[young].death = ev.height;
                dim0[young].death_simplex = ev.simplex;
                const int root = uf.unite(ra, rb);
                oldest[root] = old;
            }
        }
    }

    augmented_diagram diagram{s, {}};
    diagram.points.reserve(n + dim1.size());
    // Emit dim-0 points in filtration (birth) order, then dim-1 points.
    std::vector<int> by_birth(n);
    for (int i = 0; i < n; ++i) by_birth[i] = i;
    std::sort(by_birth.begin(), by_birth.end(),
              [&](int a, int b) { return birth_height[a] < birth_height[b]; });
    for (int i : by_birth) diagram.points.push_back(dim0[i]);
    diagram.points.insert(diagram.points.end(), dim1.begin(), dim1.end());
    return diagram;
}

augmented_diagram augmented_diagram::restrict_to(int homdim) const {
    augmented_diagram out{dir, {}};
    for (const diagram_point& p : points)
        if (p.dim == homdim) out.points.push_back(p);
    return out;
}

std::size_t augmented_diagram::count_dim(int homdim) const {
    std::size_t c = 0;
    for (const diagram_point& p : points)
        if (p.dim == homdim) ++c;
    return c;
}

std::size_t simplex_event_count(const augmented_diagram& diagram) {
    std::vector<simplex_id> seen;
    for (const diagram_point& p : diagram.points) {
        seen.push_back(p.birth_simplex);
        if (!p.death_simplex.is_none()) seen.push_back(p.death_simplex);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        raise(errc::invalid_argument, "diagram: simplex appears in two events");
    return seen.size();
}

namespace {

void append_double(std::string& out, double x) {
    char buf[40];
    if (x == infinite_death) {
        out += "inf";
        return;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    out += buf;
}

void append_simplex(std::string& out, simplex_id s) {
    char buf[40];
    if (s.is_none()) return;
    if (s.is_vertex())
        std::snprintf(buf, sizeof(buf), "v%" PRId32, s.u);
    else
        std::snprintf(buf, sizeof(buf), "e%" PRId32 "-%" PRId32, s.u, s.v);
    out += buf;
}

simplex_id parse_simplex(const std::string& field) {
    if (field.empty()) return simplex_id::none();
    if (field[0] == 'v') return simplex_id::vertex(std::stoi(field.substr(1)));
    if (field[0] == 'e') {
        const auto dash = field.find('-');
        if (dash == std::string::npos) raise(errc::io_error, "diagram csv: bad simplex field");
        return simplex_id{std::int32_t(std::stoi(field.substr(1, dash - 1))),
                          std::int32_t(std::stoi(field.substr(dash + 1)))};
    }
    raise(errc::io_error, "diagram csv: bad simplex field '" + field + "'");
}

double parse_double(const std::string& field) {
    if (field == "inf") return infinite_death;
    return std::stod(field);
}

} // namespace

void write_diagram_csv(const augmented_diagram& diagram, std::ostream& out) {
    std::string line = "dim,birth,death,birth_simplex,death_simplex\n";
    out << line;
    for (const diagram_point& p : diagram.points) {
        line.clear();
        line += std::to_string(int(p.dim));
        line += ',';
        append_double(line, p.birth);
        line += ',';
        append_double(line, p.death);
        line += ',';
        append_simplex(line, p.birth_simplex);
        line += ',';
        append_simplex(line, p.death_simplex);
        line += '\n';
        out << line;
    }
}

std::vector<diagram_point> read_diagram_csv(std::istream& in) {
    std::vector<diagram_point> points;
    std::string line;
    if (!std::getline(in, line) || line.rfind("dim,birth,death", 0) != 0)
        raise(errc::io_error, "diagram csv: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        while (fields.size() < 5) fields.emplace_back();
        diagram_point p;
        p.dim = static_cast<std::int8_t>(std::stoi(fields[0]));
        p.birth = parse_double(fields[1]);
        p.death = parse_double(fields[2]);
        p.birth_simplex = parse_simplex(fields[3]);
        p.death_simplex = parse_simplex(fields[4]);
        points.push_back(p);
    }
    return points;
}

} // namespace pdrecon
