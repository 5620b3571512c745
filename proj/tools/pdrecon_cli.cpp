// Command-line front end for the pdrecon shared library: random plane-graph
// generation, reconstruction from the diagram oracle, diagram dumps, and the
// benchmark / minimum-angle experiment harness.
//
// Exit codes: 0 success, 2 reconstruction mismatch, 3 minimum-angle
// assertion, 4 I/O or invalid input.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdrecon.h"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 2;
constexpr int exit_min_angle = 3;
constexpr int exit_io = 4;

int exit_code_for(pdrecon_status status) {
    switch (status) {
        case PDRECON_OK: return exit_ok;
        case PDRECON_ERR_MIN_ANGLE_TOO_SMALL: return exit_min_angle;
        case PDRECON_ERR_IO: return exit_io;
        default: return exit_mismatch;
    }
}

[[noreturn]] void die(pdrecon_status status) {
    json j;
    j["error"] = pdrecon_last_error();
    j["status"] = static_cast<int>(status);
    std::fprintf(stderr, "%s\n", j.dump().c_str());
    std::exit(exit_code_for(status));
}

void check(pdrecon_status status) {
    if (status != PDRECON_OK) die(status);
}

struct graph_handle {
    pdrecon_graph* g = nullptr;
    ~graph_handle() { pdrecon_graph_free(g); }
};

struct oracle_handle {
    pdrecon_oracle* o = nullptr;
    ~oracle_handle() { pdrecon_oracle_free(o); }
};

struct diagram_handle {
    pdrecon_diagram* d = nullptr;
    ~diagram_handle() { pdrecon_diagram_free(d); }
};

json vertices_json(const double* coords, int n, int dim) {
    json out = json::array();
    for (int i = 0; i < n; ++i) {
        json v = json::array();
        for (int k = 0; k < dim; ++k) v.push_back(coords[i * dim + k]);
        out.push_back(std::move(v));
    }
    return out;
}

json edges_json(const int32_t* pairs, int m) {
    json out = json::array();
    for (int i = 0; i < m; ++i) out.push_back(json::array({pairs[2 * i], pairs[2 * i + 1]}));
    return out;
}

std::vector<double> parse_components(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(std::stod(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reconstruct straight-line embedded graphs from directional augmented "
                 "persistence diagrams"};
    app.require_subcommand(1);

    // ---- gen ----
    int gen_n = 10;
    double gen_alpha = 1.0;
    std::uint64_t gen_seed = 0;
    int gen_dim = 2;
    double gen_filter = 0.0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a random graph (alpha-subsampled Delaunay "
                                          "for dim 2) and write it as JSON");
    gen->add_option("--n", gen_n, "Vertex count")->required();
    gen->add_option("--alpha", gen_alpha, "Edge-keep fraction in [0,1]");
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--dim", gen_dim, "Embedding dimension (>= 2)");
    gen->add_option("--min-angle-filter", gen_filter,
                    "Reject instances with bow-tie half-angle below this value");
    gen->add_option("--out", gen_out, "Output graph JSON path")->required();

    // ---- recon ----
    auto* recon = app.add_subcommand("recon", "Reconstruct from the diagram oracle");
    recon->require_subcommand(1);
    std::string recon_input;
    double recon_min_angle = 1e-6;
    int recon_dim = 0;
    std::string recon_out;
    auto* recon_vertices = recon->add_subcommand("vertices", "Recover vertex coordinates");
    auto* recon_edges = recon->add_subcommand("edges", "Recover the edge set");
    auto* recon_full = recon->add_subcommand("full", "Recover vertices and edges");
    for (auto* sub : {recon_vertices, recon_edges, recon_full}) {
        sub->add_option("--input", recon_input, "Hidden graph JSON path")->required();
        sub->add_option("--min-angle", recon_min_angle, "Bow-tie half-angle assertion threshold");
        sub->add_option("--dim", recon_dim, "Expected embedding dimension (validated)");
    }
    recon_full->add_option("--out", recon_out, "Write the reconstructed graph JSON here");

    // ---- oracle-dump ----
    std::string dump_input, dump_direction, dump_out;
    int dump_restrict = -1;
    auto* dump = app.add_subcommand("oracle-dump", "Query one direction and write the diagram CSV");
    dump->add_option("--input", dump_input, "Hidden graph JSON path")->required();
    dump->add_option("--direction", dump_direction, "Comma-separated components; normalized")
        ->required();
    dump->add_option("--restrict", dump_restrict, "Restrict to homology dimension 0 or 1");
    dump->add_option("--out", dump_out, "Output CSV path")->required();

    // ---- roundtrip ----
    std::string rt_input;
    int rt_n = 0;
    double rt_alpha = 1.0;
    std::uint64_t rt_seed = 0;
    int rt_dim = 2;
    double rt_min_angle = 1e-6;
    double rt_filter = 0.0;
    auto* rt = app.add_subcommand("roundtrip",
                                  "Generate (or load), reconstruct, and compare to ground truth");
    rt->add_option("--input", rt_input, "Ground-truth graph JSON (instead of generating)");
    rt->add_option("--n", rt_n, "Vertex count when generating");
    rt->add_option("--alpha", rt_alpha, "Edge-keep fraction when generating");
    rt->add_option("--seed", rt_seed, "Random seed when generating");
    rt->add_option("--dim", rt_dim, "Embedding dimension when generating");
    rt->add_option("--min-angle", rt_min_angle, "Bow-tie half-angle assertion threshold");
    rt->add_option("--min-angle-filter", rt_filter, "Instance pre-filter when generating");

    // ---- bench ----
    std::vector<int> bench_ns{10, 20, 30, 40, 50, 60, 70, 80};
    std::vector<double> bench_alphas{0.1};
    int bench_graphs = 3;
    int bench_repeats = 5;
    std::uint64_t bench_seed = 0;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "Timed reconstruction benchmark; emits CSV and a "
                                              "scaling-fit summary");
    bench->add_option("--n-list", bench_ns, "Vertex counts");
    bench->add_option("--alpha-list", bench_alphas, "Edge-keep fractions");
    bench->add_option("--graphs", bench_graphs, "Graphs per configuration");
    bench->add_option("--repeats", bench_repeats, "Timed repeats per graph");
    bench->add_option("--seed", bench_seed, "Random seed");
    bench->add_option("--out", bench_out, "Output CSV path")->required();

    // ---- minangle ----
    std::vector<int> ma_ns{10, 20, 30, 40, 50, 60, 70};
    int ma_trials = 100;
    std::uint64_t ma_seed = 0;
    std::string ma_out, ma_summary_out;
    auto* ma = app.add_subcommand("minangle", "Minimum-angle study over random point sets");
    ma->add_option("--n-list", ma_ns, "Point-set sizes");
    ma->add_option("--trials", ma_trials, "Trials per size");
    ma->add_option("--seed", ma_seed, "Random seed");
    ma->add_option("--out", ma_out, "Per-trial CSV path")->required();
    ma->add_option("--summary-out", ma_summary_out, "Per-n summary CSV path");

    // ---- verify ----
    std::string verify_input;
    int verify_directions = 50;
    std::uint64_t verify_seed = 0;
    auto* verify = app.add_subcommand("verify", "Cross-check diagrams against the naive "
                                                "sublevel sweep on random directions");
    verify->add_option("--input", verify_input, "Graph JSON path")->required();
    verify->add_option("--directions", verify_directions, "Number of random directions");
    verify->add_option("--seed", verify_seed, "Random seed");

    CLI11_PARSE(app, argc, argv);

    try {

    if (gen->parsed()) {
        graph_handle g;
        check(pdrecon_generate(gen_n, gen_alpha, gen_seed, gen_dim, gen_filter, &g.g));
        check(pdrecon_graph_save_json(g.g, gen_out.c_str()));
        json j;
        j["n"] = pdrecon_graph_num_vertices(g.g);
        j["m"] = pdrecon_graph_num_edges(g.g);
        j["out"] = gen_out;
        std::printf("%s\n", j.dump().c_str());
        return exit_ok;
    }

    if (recon->parsed()) {
        graph_handle g;
        check(pdrecon_graph_load_json(recon_input.c_str(), &g.g));
        if (recon_dim > 0 && pdrecon_graph_dim(g.g) != recon_dim) {
            json j;
            j["error"] = "graph dimension differs from --dim";
            std::fprintf(stderr, "%s\n", j.dump().c_str());
            return exit_io;
        }
        oracle_handle o;
        check(pdrecon_oracle_create(g.g, 0, &o.o));

        double* coords = nullptr;
        int n = 0, dim = 0;
        std::uint64_t vqueries = 0;
        check(pdrecon_reconstruct_vertices(o.o, &coords, &n, &dim, &vqueries));
        std::unique_ptr<double, decltype(&pdrecon_free)> coords_guard(coords, &pdrecon_free);

        json j;
        j["vertices"] = vertices_json(coords, n, dim);
        j["vertex_queries"] = vqueries;

        if (recon_vertices->parsed()) {
            std::printf("%s\n", j.dump().c_str());
            return exit_ok;
        }

        int32_t* pairs = nullptr;
        int m = 0;
        std::uint64_t equeries = 0;
        check(pdrecon_reconstruct_edges(o.o, coords, n, dim, recon_min_angle, &pairs, &m,
                                        &equeries));
        std::unique_ptr<int32_t, decltype(&pdrecon_free)> pairs_guard(pairs, &pdrecon_free);
        j["edges"] = edges_json(pairs, m);
        j["edge_queries"] = equeries;
        j["total_queries"] = pdrecon_oracle_query_count(o.o);

        if (recon_full->parsed() && !recon_out.empty()) {
            graph_handle out;
            check(pdrecon_graph_create(dim, coords, n, pairs, m, &out.g));
            check(pdrecon_graph_save_json(out.g, recon_out.c_str()));
            j["out"] = recon_out;
        }
        std::printf("%s\n", j.dump().c_str());
        return exit_ok;
    }

    if (dump->parsed()) {
        graph_handle g;
        check(pdrecon_graph_load_json(dump_input.c_str(), &g.g));
        oracle_handle o;
        check(pdrecon_oracle_create(g.g, 0, &o.o));
        std::vector<double> dir = parse_components(dump_direction);
        double norm = 0.0;
        for (double c : dir) norm += c * c;
        norm = std::sqrt(norm);
        if (norm == 0.0) die(PDRECON_ERR_ZERO_VECTOR);
        for (double& c : dir) c /= norm;
        diagram_handle d;
        check(pdrecon_oracle_query(o.o, dir.data(), static_cast<int>(dir.size()), dump_restrict,
                                   &d.d));
        check(pdrecon_diagram_write_csv(d.d, dump_out.c_str()));
        json j;
        j["points"] = pdrecon_diagram_size(d.d);
        j["out"] = dump_out;
        std::printf("%s\n", j.dump().c_str());
        return exit_ok;
    }

    if (rt->parsed()) {
        graph_handle g;
        if (!rt_input.empty()) {
            check(pdrecon_graph_load_json(rt_input.c_str(), &g.g));
        } else {
            if (rt_n < 1) die(PDRECON_ERR_INVALID_ARGUMENT);
            check(pdrecon_generate(rt_n, rt_alpha, rt_seed, rt_dim, rt_filter, &g.g));
        }
        int ok = 0;
        std::uint64_t queries = 0;
        char* message = nullptr;
        check(pdrecon_roundtrip(g.g, rt_min_angle, &ok, &queries, &message));
        std::unique_ptr<char, decltype(&pdrecon_free)> message_guard(message, &pdrecon_free);
        json j;
        j["exact"] = ok != 0;
        j["total_queries"] = queries;
        j["n"] = pdrecon_graph_num_vertices(g.g);
        j["m"] = pdrecon_graph_num_edges(g.g);
        const std::string failure = message ? message : "";
        if (!failure.empty()) j["failure"] = failure;
        std::printf("%s\n", j.dump().c_str());
        if (ok) return exit_ok;
        return failure.rfind("min_angle_too_small", 0) == 0 ? exit_min_angle : exit_mismatch;
    }

    if (bench->parsed()) {
        char* summary = nullptr;
        check(pdrecon_bench_csv(bench_ns.data(), static_cast<int>(bench_ns.size()),
                                bench_alphas.data(), static_cast<int>(bench_alphas.size()),
                                bench_graphs, bench_repeats, bench_seed, bench_out.c_str(),
                                &summary));
        std::unique_ptr<char, decltype(&pdrecon_free)> guard(summary, &pdrecon_free);
        std::printf("%s\n", summary ? summary : "{}");
        return exit_ok;
    }

    if (ma->parsed()) {
        char* summary = nullptr;
        check(pdrecon_minangle_csv(ma_ns.data(), static_cast<int>(ma_ns.size()), ma_trials,
                                   ma_seed, ma_out.c_str(),
                                   ma_summary_out.empty() ? nullptr : ma_summary_out.c_str(),
                                   &summary));
        std::unique_ptr<char, decltype(&pdrecon_free)> guard(summary, &pdrecon_free);
        std::printf("%s\n", summary ? summary : "[]");
        return exit_ok;
    }

    if (verify->parsed()) {
        graph_handle g;
        check(pdrecon_graph_load_json(verify_input.c_str(), &g.g));
        int mismatches = 0;
        check(pdrecon_verify(g.g, verify_directions, verify_seed, &mismatches));
        json j;
        j["directions"] = verify_directions;
        j["mismatches"] = mismatches;
        std::printf("%s\n", j.dump().c_str());
        return mismatches == 0 ? exit_ok : exit_mismatch;
    }

    } catch (const std::exception& e) {
        json j;
        j["error"] = e.what();
        std::fprintf(stderr, "%s\n", j.dump().c_str());
        return exit_io;
    }

    return exit_ok;
}
