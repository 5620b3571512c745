#include "pdrecon.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "pdrecon/brute.hpp"
#include "pdrecon/edge_recon.hpp"
#include "pdrecon/experiment.hpp"
#include "pdrecon/graph_io.hpp"
#include "pdrecon/vertex_recon.hpp"

using namespace pdrecon;

struct pdrecon_graph {
    embedded_graph graph;
};

struct pdrecon_oracle {
    diagram_oracle oracle;
};

struct pdrecon_diagram {
    augmented_diagram diagram;
};

namespace {

thread_local std::string last_error_message = "";

pdrecon_status status_of(errc code) {
    switch (code) {
        case errc::ok: return PDRECON_OK;
        case errc::invalid_argument: return PDRECON_ERR_INVALID_ARGUMENT;
        case errc::dimension_mismatch: return PDRECON_ERR_DIMENSION_MISMATCH;
        case errc::index_out_of_range: return PDRECON_ERR_INDEX_OUT_OF_RANGE;
        case errc::zero_vector: return PDRECON_ERR_ZERO_VECTOR;
        case errc::degenerate_direction: return PDRECON_ERR_DEGENERATE_DIRECTION;
        case errc::too_few_points: return PDRECON_ERR_TOO_FEW_POINTS;
        case errc::need_two_vertices: return PDRECON_ERR_NEED_TWO_VERTICES;
        case errc::min_angle_too_small: return PDRECON_ERR_MIN_ANGLE_TOO_SMALL;
        case errc::singular_intersection: return PDRECON_ERR_SINGULAR_INTERSECTION;
        case errc::match_count_mismatch: return PDRECON_ERR_MATCH_COUNT_MISMATCH;
        case errc::projection_degenerate: return PDRECON_ERR_PROJECTION_DEGENERATE;
        case errc::degenerate_configuration: return PDRECON_ERR_DEGENERATE_CONFIGURATION;
        case errc::io_error: return PDRECON_ERR_IO;
    }
    return PDRECON_ERR_UNKNOWN;
}

pdrecon_status fail(pdrecon_status status, const char* message) {
    last_error_message = message;
    return status;
}

// Runs a callable, translating exceptions into status codes.
template <typename F>
pdrecon_status guarded(F&& f) {
    try {
        f();
        return PDRECON_OK;
    } catch (const error& e) {
        last_error_message = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error_message = e.what();
        return PDRECON_ERR_UNKNOWN;
    } catch (...) {
        last_error_message = "unknown error";
        return PDRECON_ERR_UNKNOWN;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

direction direction_from(const double* dir, int dim) {
    if (dir == nullptr || dim < 1) raise(errc::invalid_argument, "null direction");
    return direction(std::vector<double>(dir, dir + dim));
}

} // namespace

extern "C" {

const char* pdrecon_last_error(void) { return last_error_message.c_str(); }

void pdrecon_free(void* buffer) { std::free(buffer); }

pdrecon_status pdrecon_graph_create(int dim, const double* coords, int num_vertices,
                                    const int32_t* edge_pairs, int num_edges,
                                    pdrecon_graph** out) {
    if (out == nullptr || coords == nullptr || (num_edges > 0 && edge_pairs == nullptr))
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_graph_create: null argument");
    if (dim < 1 || num_vertices < 0 || num_edges < 0)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_graph_create: bad sizes");
    return guarded([&] {
        std::vector<double> c(coords, coords + static_cast<std::size_t>(num_vertices) * dim);
        std::vector<edge> e;
        e.reserve(num_edges);
        for (int i = 0; i < num_edges; ++i)
            e.push_back(make_edge(edge_pairs[2 * i], edge_pairs[2 * i + 1]));
        *out = new pdrecon_graph{embedded_graph(dim, std::move(c), std::move(e))};
    });
}

void pdrecon_graph_free(pdrecon_graph* graph) { delete graph; }

pdrecon_status pdrecon_graph_load_json(const char* path, pdrecon_graph** out) {
    if (out == nullptr || path == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_graph_load_json: null argument");
    return guarded([&] { *out = new pdrecon_graph{load_graph_json(path)}; });
}

pdrecon_status pdrecon_graph_save_json(const pdrecon_graph* graph, const char* path) {
    if (graph == nullptr || path == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_graph_save_json: null argument");
    return guarded([&] { save_graph_json(graph->graph, path); });
}

int pdrecon_graph_dim(const pdrecon_graph* graph) { return graph ? graph->graph.dim() : 0; }

int pdrecon_graph_num_vertices(const pdrecon_graph* graph) {
    return graph ? graph->graph.num_vertices() : 0;
}

int pdrecon_graph_num_edges(const pdrecon_graph* graph) {
    return graph ? graph->graph.num_edges() : 0;
}

pdrecon_status pdrecon_graph_vertices(const pdrecon_graph* graph, double* coords) {
    if (graph == nullptr || coords == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_graph_vertices: null argument");
    const auto& c = graph->graph.coords();
    std::memcpy(coords, c.data(), c.size() * sizeof(double));
    return PDRECON_OK;
}

pdrecon_status pdrecon_graph_edges(const pdrecon_graph* graph, int32_t* pairs) {
    if (graph == nullptr || pairs == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_graph_edges: null argument");
    for (int i = 0; i < graph->graph.num_edges(); ++i) {
        pairs[2 * i] = graph->graph.edges()[i].u;
        pairs[2 * i + 1] = graph->graph.edges()[i].v;
    }
    return PDRECON_OK;
}

pdrecon_status pdrecon_graph_general_position(const pdrecon_graph* graph, int check_crossings,
                                              int* ok) {
    if (graph == nullptr || ok == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_graph_general_position: null argument");
    return guarded(
        [&] { *ok = check_general_position(graph->graph, check_crossings != 0).ok() ? 1 : 0; });
}

pdrecon_status pdrecon_graph_min_angle(const pdrecon_graph* graph, double* angle) {
    if (graph == nullptr || angle == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_graph_min_angle: null argument");
    return guarded([&] {
        const auto pts = graph->graph.vertex_points();
        *angle = min_pairwise_angle(pts);
    });
}

pdrecon_status pdrecon_generate(int n, double alpha, uint64_t seed, int dim,
                                double min_half_angle, pdrecon_graph** out) {
    if (out == nullptr) return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_generate: null output");
    return guarded([&] {
        gen_config config;
        config.n = n;
        config.alpha = alpha;
        config.seed = seed;
        config.dim = dim;
        if (min_half_angle > 0) config.min_half_angle = min_half_angle;
        *out = new pdrecon_graph{generate_graph(config)};
    });
}

pdrecon_status pdrecon_oracle_create(const pdrecon_graph* graph, int enable_cache,
                                     pdrecon_oracle** out) {
    if (graph == nullptr || out == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_oracle_create: null argument");
    return guarded([&] { *out = new pdrecon_oracle{diagram_oracle(graph->graph, enable_cache != 0)}; });
}

void pdrecon_oracle_free(pdrecon_oracle* oracle) { delete oracle; }

uint64_t pdrecon_oracle_query_count(const pdrecon_oracle* oracle) {
    return oracle ? oracle->oracle.query_count() : 0;
}

uint64_t pdrecon_oracle_diagram_nanos(const pdrecon_oracle* oracle) {
    return oracle ? oracle->oracle.diagram_nanos() : 0;
}

pdrecon_status pdrecon_oracle_query(const pdrecon_oracle* oracle, const double* dir, int dim,
                                    int restrict_dim, pdrecon_diagram** out) {
    if (oracle == nullptr || out == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_oracle_query: null argument");
    return guarded([&] {
        const direction s = direction_from(dir, dim);
        augmented_diagram diagram =
            restrict_dim < 0 ? oracle->oracle.query(s) : oracle->oracle.query_restricted(s, restrict_dim);
        *out = new pdrecon_diagram{std::move(diagram)};
    });
}

pdrecon_status pdrecon_diagram_brute(const pdrecon_graph* graph, const double* dir, int dim,
                                     pdrecon_diagram** out) {
    if (graph == nullptr || out == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_diagram_brute: null argument");
    return guarded([&] {
        const direction s = direction_from(dir, dim);
        *out = new pdrecon_diagram{brute_force_apd(graph->graph, s)};
    });
}

void pdrecon_diagram_free(pdrecon_diagram* diagram) { delete diagram; }

int pdrecon_diagram_size(const pdrecon_diagram* diagram) {
    return diagram ? static_cast<int>(diagram->diagram.size()) : 0;
}

pdrecon_status pdrecon_diagram_point(const pdrecon_diagram* diagram, int index, int* homdim,
                                     double* birth, double* death, int32_t* birth_a,
                                     int32_t* birth_b, int32_t* death_a, int32_t* death_b) {
    if (diagram == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_diagram_point: null diagram");
    if (index < 0 || index >= static_cast<int>(diagram->diagram.size()))
        return fail(PDRECON_ERR_INDEX_OUT_OF_RANGE, "pdrecon_diagram_point: index out of range");
    const diagram_point& p = diagram->diagram.points[index];
    if (homdim) *homdim = p.dim;
    if (birth) *birth = p.birth;
    if (death) *death = p.death;
    if (birth_a) *birth_a = p.birth_simplex.u;
    if (birth_b) *birth_b = p.birth_simplex.v;
    if (death_a) *death_a = p.death_simplex.u;
    if (death_b) *death_b = p.death_simplex.v;
    return PDRECON_OK;
}

pdrecon_status pdrecon_diagram_write_csv(const pdrecon_diagram* diagram, const char* path) {
    if (diagram == nullptr || path == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_diagram_write_csv: null argument");
    return guarded([&] {
        std::ofstream out(path);
        if (!out) raise(errc::io_error, std::string("cannot open '") + path + "' for writing");
        write_diagram_csv(diagram->diagram, out);
    });
}

pdrecon_status pdrecon_reconstruct_vertices(const pdrecon_oracle* oracle, double** coords,
                                            int* num_vertices, int* dim, uint64_t* queries) {
    if (oracle == nullptr || coords == nullptr || num_vertices == nullptr || dim == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_reconstruct_vertices: null argument");
    return guarded([&] {
        const int d = oracle->oracle.dim();
        const vertex_reconstruction r = d == 2 ? reconstruct_vertices_2d(oracle->oracle)
                                               : reconstruct_vertices_dd(oracle->oracle, d);
        const int n = static_cast<int>(r.vertices.size());
        auto* buffer = static_cast<double*>(std::malloc(sizeof(double) * n * d));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < d; ++k) buffer[i * d + k] = r.vertices[i][k];
        *coords = buffer;
        *num_vertices = n;
        *dim = d;
        if (queries) *queries = r.queries_used;
    });
}

pdrecon_status pdrecon_reconstruct_edges(const pdrecon_oracle* oracle, const double* coords,
                                         int num_vertices, int dim, double min_half_angle,
                                         int32_t** pairs, int* num_edges, uint64_t* queries) {
    if (oracle == nullptr || coords == nullptr || pairs == nullptr || num_edges == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_reconstruct_edges: null argument");
    return guarded([&] {
        std::vector<point> vertices(num_vertices, point(dim));
        for (int i = 0; i < num_vertices; ++i)
            for (int k = 0; k < dim; ++k) vertices[i][k] = coords[i * dim + k];
        if (min_half_angle <= 0) min_half_angle = default_min_half_angle;
        const edge_reconstruction r =
            dim == 2 ? reconstruct_edges_2d(oracle->oracle, vertices, min_half_angle)
                     : reconstruct_edges_dd(oracle->oracle, vertices, min_half_angle);
        const int m = static_cast<int>(r.edges.size());
        auto* buffer = static_cast<int32_t*>(std::malloc(sizeof(int32_t) * 2 * std::max(m, 1)));
        for (int i = 0; i < m; ++i) {
            buffer[2 * i] = r.edges[i].u;
            buffer[2 * i + 1] = r.edges[i].v;
        }
        *pairs = buffer;
        *num_edges = m;
        if (queries) *queries = r.queries_used;
    });
}

pdrecon_status pdrecon_reconstruct_full(const pdrecon_oracle* oracle, double min_half_angle,
                                        pdrecon_graph** out, uint64_t* queries) {
    if (oracle == nullptr || out == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_reconstruct_full: null argument");
    return guarded([&] {
        const int d = oracle->oracle.dim();
        const vertex_reconstruction vr = d == 2 ? reconstruct_vertices_2d(oracle->oracle)
                                                : reconstruct_vertices_dd(oracle->oracle, d);
        if (min_half_angle <= 0) min_half_angle = default_min_half_angle;
        const edge_reconstruction er =
            d == 2 ? reconstruct_edges_2d(oracle->oracle, vr.vertices, min_half_angle)
                   : reconstruct_edges_dd(oracle->oracle, vr.vertices, min_half_angle);
        std::vector<double> coords;
        coords.reserve(vr.vertices.size() * d);
        for (const point& p : vr.vertices) coords.insert(coords.end(), p.begin(), p.end());
        *out = new pdrecon_graph{embedded_graph(d, std::move(coords), er.edges)};
        if (queries) *queries = vr.queries_used + er.queries_used;
    });
}

pdrecon_status pdrecon_roundtrip(const pdrecon_graph* truth, double min_half_angle, int* exact,
                                 uint64_t* total_queries, char** message) {
    if (truth == nullptr || exact == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_roundtrip: null argument");
    return guarded([&] {
        if (min_half_angle <= 0) min_half_angle = default_min_half_angle;
        const roundtrip_report report = run_roundtrip(truth->graph, min_half_angle);
        *exact = report.ok ? 1 : 0;
        if (total_queries) *total_queries = report.total_queries;
        if (message) *message = report.message.empty() ? nullptr : copy_string(report.message);
    });
}

pdrecon_status pdrecon_bench_csv(const int* ns, int num_ns, const double* alphas, int num_alphas,
                                 int graphs_per_config, int repeats, uint64_t seed,
                                 const char* csv_path, char** summary) {
    if (ns == nullptr || num_ns < 1 || csv_path == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_bench_csv: null argument");
    return guarded([&] {
        bench_config config;
        config.ns.assign(ns, ns + num_ns);
        if (alphas != nullptr && num_alphas > 0) config.alphas.assign(alphas, alphas + num_alphas);
        config.graphs_per_config = std::max(1, graphs_per_config);
        config.repeats = std::max(1, repeats);
        config.seed = seed;
        const auto records = run_bench(config);
        std::ofstream out(csv_path);
        if (!out) raise(errc::io_error, std::string("cannot open '") + csv_path + "' for writing");
        write_bench_csv(records, out);
        if (summary) {
            const bench_summary s = summarize_bench(records);
            std::ostringstream json;
            json.precision(17);
            json << "{\"vertex_vs_nlogn\":{\"slope\":" << s.vertex_vs_nlogn.slope
                 << ",\"intercept\":" << s.vertex_vs_nlogn.intercept
                 << ",\"r_squared\":" << s.vertex_vs_nlogn.r_squared << "},"
                 << "\"edge_vs_ncubed\":{\"slope\":" << s.edge_vs_ncubed.slope
                 << ",\"intercept\":" << s.edge_vs_ncubed.intercept
                 << ",\"r_squared\":" << s.edge_vs_ncubed.r_squared << "}}";
            *summary = copy_string(json.str());
        }
    });
}

pdrecon_status pdrecon_minangle_csv(const int* ns, int num_ns, int trials, uint64_t seed,
                                    const char* csv_path, const char* summary_csv_path,
                                    char** summary) {
    if (ns == nullptr || num_ns < 1 || trials < 1 || csv_path == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_minangle_csv: null argument");
    return guarded([&] {
        const auto records = run_minangle({ns, static_cast<std::size_t>(num_ns)}, trials, seed);
        std::ofstream out(csv_path);
        if (!out) raise(errc::io_error, std::string("cannot open '") + csv_path + "' for writing");
        write_minangle_csv(records, out);
        const auto rows = summarize_minangle(records);
        if (summary_csv_path) {
            std::ofstream sout(summary_csv_path);
            if (!sout)
                raise(errc::io_error,
                      std::string("cannot open '") + summary_csv_path + "' for writing");
            write_minangle_summary_csv(rows, sout);
        }
        if (summary) {
            std::ostringstream json;
            json.precision(17);
            json << "[";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i) json << ",";
                json << "{\"n\":" << rows[i].n << ",\"trials\":" << rows[i].trials
                     << ",\"below\":" << rows[i].below_threshold
                     << ",\"empirical_fraction\":" << rows[i].empirical_fraction
                     << ",\"model_probability\":" << rows[i].model_probability << "}";
            }
            json << "]";
            *summary = copy_string(json.str());
        }
    });
}

pdrecon_status pdrecon_minangle_model(int n, double* probability) {
    if (probability == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_minangle_model: null output");
    *probability = minangle_model_probability(n);
    return PDRECON_OK;
}

pdrecon_status pdrecon_verify(const pdrecon_graph* graph, int directions, uint64_t seed,
                              int* mismatches) {
    if (graph == nullptr || mismatches == nullptr)
        return fail(PDRECON_ERR_INVALID_ARGUMENT, "pdrecon_verify: null argument");
    return guarded([&] { *mismatches = verify_against_brute(graph->graph, directions, seed); });
}

} // extern "C"
