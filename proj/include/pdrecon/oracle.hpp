#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>

#include "pdrecon/persistence.hpp"

namespace pdrecon {

/// Query-metered gateway to the hidden graph: direction in, augmented diagram
/// out.  Reconstruction code only ever sees this interface; the graph itself
/// has no accessor.  A restricted query is one diagram request, not one per
/// dimension.  Queries never repeat directions on general-position input, so
/// there is no memoization by default; the opt-in cache exists for the
/// experiment harness, where phases are re-run for timing.
class diagram_oracle {
public:
    explicit diagram_oracle(embedded_graph graph, bool enable_cache = false);

    int dim() const { return graph_.dim(); }

    augmented_diagram query(const direction& s) const;
    augmented_diagram query_restricted(const direction& s, int homdim) const;

    std::uint64_t query_count() const { return count_.load(std::memory_order_relaxed); }
    std::vector<direction> query_log() const;

    /// Cumulative wall time spent producing diagrams, for the harness to
    /// subtract from phase timings.
    std::uint64_t diagram_nanos() const { return nanos_.load(std::memory_order_relaxed); }

private:
    augmented_diagram compute(const direction& s, int restrict_homdim) const;

    embedded_graph graph_;
    bool cache_enabled_;
    mutable std::atomic<std::uint64_t> count_{0};
    mutable std::atomic<std::uint64_t> nanos_{0};
    mutable std::mutex mutex_; // guards log_ and cache_
    mutable std::vector<direction> log_;
    mutable std::map<std::vector<double>, augmented_diagram> cache_;
};

} // namespace pdrecon
