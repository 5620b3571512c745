#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

#include "pdrecon/geometry.hpp"

namespace pdrecon {

inline constexpr double infinite_death = std::numeric_limits<double>::infinity();

/// Identifier of a simplex in a graph: a vertex index (v < 0) or a canonical
/// edge pair u < v.
struct simplex_id {
    std::int32_t u = -1;
    std::int32_t v = -1;

    static simplex_id vertex(std::int32_t i) { return {i, -1}; }
    static simplex_id of_edge(edge e) { return {e.u, e.v}; }
    static simplex_id none() { return {-1, -1}; }

    bool is_vertex() const { return u >= 0 && v < 0; }
    bool is_edge() const { return v >= 0; }
    bool is_none() const { return u < 0; }

    friend auto operator<=>(const simplex_id&, const simplex_id&) = default;
};

struct filtration_event {
    simplex_id simplex;
    double height = 0.0;
};

/// Simplices ordered by (height, dim, id); vertices precede the edges they
/// bound because an edge inherits the height of its upper endpoint.
struct filtration_order {
    std::vector<filtration_event> events;
};

/// Sorted sequence of all simplex events in direction s.  Raises
/// degenerate_direction when two vertices share a height (exact float
/// equality), which Assumption-1 inputs never do for the directions the
/// reconstruction algorithms choose.
filtration_order build_lower_star_filtration(const embedded_graph& g, const direction& s);

struct diagram_point {
    double birth = 0.0;
    double death = infinite_death;
    std::int8_t dim = 0; // 0 or 1; dim 1 always dies at infinity
    simplex_id birth_simplex;
    simplex_id death_simplex = simplex_id::none();

    bool has_finite_death() const { return death != infinite_death; }
    bool on_diagonal() const { return birth == death; }
};

/// Directional augmented persistence diagram: one birth-death event per
/// simplex, zero-persistence (diagonal) points retained.
struct augmented_diagram {
    direction dir;
    std::vector<diagram_point> points;

    std::size_t size() const { return points.size(); }
    augmented_diagram restrict_to(int homdim) const;
    std::size_t count_dim(int homdim) const;
};

/// Number of distinct simplices the diagram accounts for: each point's birth
/// simplex plus each finite death's killing edge.  The filtration bijection
/// makes this exactly n + m, every simplex appearing exactly once (a finite
/// dim-0 pair carries two simplex events, so the diagram itself has
/// m + c points for a graph with c components).
std::size_t simplex_event_count(const augmented_diagram& diagram);

/// Union-find pass over the lower-star filtration.  Vertices are dim-0
/// births; an edge either merges two components (dim-0 death at the edge
/// height, paired by the elder rule with the younger component, kept even
/// when birth == death) or closes a cycle (dim-1 point born at the edge
/// height, death at infinity).
augmented_diagram compute_apd(const embedded_graph& g, const direction& s);

/// CSV with header dim,birth,death,birth_simplex,death_simplex; death "inf"
/// for infinity; 17 significant digits so floats round-trip exactly.
void write_diagram_csv(const augmented_diagram& diagram, std::ostream& out);
std::vector<diagram_point> read_diagram_csv(std::istream& in);

} // namespace pdrecon
