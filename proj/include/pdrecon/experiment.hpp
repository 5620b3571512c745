#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pdrecon/datagen.hpp"
#include "pdrecon/edge_recon.hpp"
#include "pdrecon/stats.hpp"

namespace pdrecon {

/// Generate-reconstruct-compare driver.  Reconstruction sees only the oracle;
/// the ground truth is touched again only for the final comparison and the
/// budget bookkeeping.
struct roundtrip_report {
    bool ok = false;
    bool vertices_ok = false;
    bool edges_ok = false;
    bool budget_ok = false;
    double max_coord_error = 0.0;
    std::uint64_t vertex_queries = 0;
    std::uint64_t edge_queries = 0;
    std::uint64_t total_queries = 0;
    std::uint64_t expected_vertex_queries = 0;
    std::uint64_t expected_edge_queries = 0;
    std::string message; // empty on success
};

inline constexpr double roundtrip_coord_tol = 1e-9;

roundtrip_report run_roundtrip(const embedded_graph& truth,
                               double min_half_angle = default_min_half_angle);

/// One timed phase execution; diagram computation time is subtracted so the
/// row captures only the reconstruction algorithm.
struct bench_record {
    int n = 0;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    int graph_index = 0;
    int repeat = 0;
    std::string phase; // "vertex" or "edge"
    std::uint64_t wall_time_ns = 0;
    std::uint64_t queries = 0;
    bool success = true;
    double min_angle = 0.0; // minimum pairwise line angle of the instance
};

struct bench_config {
    std::vector<int> ns{10, 20, 30, 40, 50, 60, 70, 80};
    std::vector<double> alphas{0.1};
    int graphs_per_config = 3;
    int repeats = 5;
    /// The vertex phase runs in microseconds; each repeat times this many
    /// back-to-back executions and records the per-execution average.
    int vertex_inner_loops = 32;
    /// The alpha-independence study only times the vertex phase.
    bool edge_phase = true;
    std::uint64_t seed = 0;
    double min_half_angle = default_min_half_angle; // edge-phase assertion
    std::optional<double> filter_min_half_angle;    // instance pre-filter, off by default
};

std::vector<bench_record> run_bench(const bench_config& config);

struct bench_summary {
    // Fits over the per-n mean times; n == 0 when there were too few
    // distinct vertex counts to fit.
    linear_fit vertex_vs_nlogn; // mean vertex time per n against n*log(n)
    linear_fit edge_vs_ncubed;  // mean edge time per n against n^3
};

bench_summary summarize_bench(std::span<const bench_record> records);

/// Mean vertex-phase time against alpha at a fixed n; slope of this fit is
/// statistically zero because the phase never looks at edges.
linear_fit vertex_time_vs_alpha(std::span<const bench_record> records, int n);

void write_bench_csv(std::span<const bench_record> records, std::ostream& out);

/// Minimum-angle study over random point sets.
struct minangle_record {
    int n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    double min_angle = 0.0;
};

struct minangle_summary_row {
    int n = 0;
    int trials = 0;
    int below_threshold = 0;
    double empirical_fraction = 0.0;
    double model_probability = 0.0;
};

std::vector<minangle_record> run_minangle(std::span<const int> ns, int trials, std::uint64_t seed);
std::vector<minangle_summary_row> summarize_minangle(std::span<const minangle_record> records,
                                                     double threshold = 1e-6);

void write_minangle_csv(std::span<const minangle_record> records, std::ostream& out);
void write_minangle_summary_csv(std::span<const minangle_summary_row> rows, std::ostream& out);

/// Cross-checks compute_apd against the naive sublevel sweep on `directions`
/// random directions; returns the number of disagreeing directions.
int verify_against_brute(const embedded_graph& g, int directions, std::uint64_t seed);

} // namespace pdrecon
