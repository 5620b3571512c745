#pragma once

#include "pdrecon/persistence.hpp"

namespace pdrecon {

/// Naive sublevel-sweep diagram: walks the same filtration but recomputes the
/// connected components of the sublevel subgraph from scratch (breadth-first
/// search, no union-find, no incremental state) at every edge event.  An edge
/// whose endpoints already share a component raises the cycle count m - n + c;
/// otherwise the component whose lowest vertex is younger dies at the edge
/// height.  Kept deliberately independent of compute_apd as a cross-check.
augmented_diagram brute_force_apd(const embedded_graph& g, const direction& s);

/// Multiset equality of (dim, birth, death) triples within `tol`.
bool diagrams_equivalent(const augmented_diagram& a, const augmented_diagram& b, double tol = 1e-12);

} // namespace pdrecon
