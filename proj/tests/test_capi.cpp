#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "pdrecon.h"

namespace {

namespace fs = std::filesystem;

struct scoped_graph {
    pdrecon_graph* g = nullptr;
    ~scoped_graph() { pdrecon_graph_free(g); }
};

struct scoped_oracle {
    pdrecon_oracle* o = nullptr;
    ~scoped_oracle() { pdrecon_oracle_free(o); }
};

struct scoped_diagram {
    pdrecon_diagram* d = nullptr;
    ~scoped_diagram() { pdrecon_diagram_free(d); }
};

// The reference four-vertex graph.
scoped_graph make_reference() {
    const double coords[] = {-1, 2, 0, -1, 0.25, 0, 1, 1};
    const int32_t edges[] = {0, 1, 1, 2, 1, 3, 2, 3};
    scoped_graph g;
    REQUIRE(pdrecon_graph_create(2, coords, 4, edges, 4, &g.g) == PDRECON_OK);
    return g;
}

} // namespace

TEST_CASE("graph creation, accessors, and json round trip") {
    scoped_graph g = make_reference();
    CHECK(pdrecon_graph_dim(g.g) == 2);
    CHECK(pdrecon_graph_num_vertices(g.g) == 4);
    CHECK(pdrecon_graph_num_edges(g.g) == 4);

    double coords[8];
    REQUIRE(pdrecon_graph_vertices(g.g, coords) == PDRECON_OK);
    CHECK(coords[4] == 0.25);
    int32_t pairs[8];
    REQUIRE(pdrecon_graph_edges(g.g, pairs) == PDRECON_OK);
    CHECK(pairs[0] == 0);
    CHECK(pairs[1] == 1);

    int ok = 0;
    REQUIRE(pdrecon_graph_general_position(g.g, 1, &ok) == PDRECON_OK);
    CHECK(ok == 1);
    double angle = 0;
    REQUIRE(pdrecon_graph_min_angle(g.g, &angle) == PDRECON_OK);
    CHECK(std::abs(angle - 0.1798534997924781) < 1e-12);

    const fs::path path = fs::temp_directory_path() / "pdrecon_capi_graph.json";
    REQUIRE(pdrecon_graph_save_json(g.g, path.string().c_str()) == PDRECON_OK);
    scoped_graph loaded;
    REQUIRE(pdrecon_graph_load_json(path.string().c_str(), &loaded.g) == PDRECON_OK);
    CHECK(pdrecon_graph_num_vertices(loaded.g) == 4);
    double coords2[8];
    REQUIRE(pdrecon_graph_vertices(loaded.g, coords2) == PDRECON_OK);
    CHECK(std::memcmp(coords, coords2, sizeof coords) == 0);
}

TEST_CASE("error paths set status codes and messages") {
    CHECK(pdrecon_graph_load_json("/nonexistent/file.json", nullptr) ==
          PDRECON_ERR_INVALID_ARGUMENT);
    scoped_graph g;
    CHECK(pdrecon_graph_load_json("/nonexistent/file.json", &g.g) == PDRECON_ERR_IO);
    CHECK(std::strlen(pdrecon_last_error()) > 0);

    const double dup[] = {0, 0, 0, 1}; // duplicate x coordinates are fine structurally
    scoped_graph g2;
    CHECK(pdrecon_graph_create(2, dup, 2, nullptr, 0, &g2.g) == PDRECON_OK);
    int ok = 1;
    CHECK(pdrecon_graph_general_position(g2.g, 1, &ok) == PDRECON_OK);
    CHECK(ok == 0);

    const double self_loop_coords[] = {0, 0, 1, 1};
    const int32_t self_loop[] = {0, 0};
    scoped_graph g3;
    CHECK(pdrecon_graph_create(2, self_loop_coords, 2, self_loop, 1, &g3.g) ==
          PDRECON_ERR_INVALID_ARGUMENT);

    scoped_graph g4 = make_reference();
    scoped_oracle o;
    REQUIRE(pdrecon_oracle_create(g4.g, 0, &o.o) == PDRECON_OK);
    const double bad_dir[] = {0.5, 0.5};
    scoped_diagram d;
    CHECK(pdrecon_oracle_query(o.o, bad_dir, 2, -1, &d.d) == PDRECON_ERR_INVALID_ARGUMENT);
}

TEST_CASE("oracle queries, diagram accessors, and csv dump") {
    scoped_graph g = make_reference();
    scoped_oracle o;
    REQUIRE(pdrecon_oracle_create(g.g, 0, &o.o) == PDRECON_OK);

    const double e2[] = {0.0, 1.0};
    scoped_diagram full;
    REQUIRE(pdrecon_oracle_query(o.o, e2, 2, -1, &full.d) == PDRECON_OK);
    CHECK(pdrecon_diagram_size(full.d) == 5); // 4 component pairs + 1 cycle

    scoped_diagram d0;
    REQUIRE(pdrecon_oracle_query(o.o, e2, 2, 0, &d0.d) == PDRECON_OK);
    CHECK(pdrecon_diagram_size(d0.d) == 4);
    CHECK(pdrecon_oracle_query_count(o.o) == 2);

    int homdim = -1;
    double birth = 0, death = 0;
    int32_t ba = 0, bb = 0, da = 0, db = 0;
    REQUIRE(pdrecon_diagram_point(d0.d, 0, &homdim, &birth, &death, &ba, &bb, &da, &db) ==
            PDRECON_OK);
    CHECK(homdim == 0);
    CHECK(birth == -1.0); // lowest vertex in the vertical direction
    CHECK(bb == -1);      // vertex simplex
    CHECK(pdrecon_diagram_point(d0.d, 99, &homdim, &birth, &death, &ba, &bb, &da, &db) ==
          PDRECON_ERR_INDEX_OUT_OF_RANGE);

    const fs::path csv = fs::temp_directory_path() / "pdrecon_capi_diagram.csv";
    REQUIRE(pdrecon_diagram_write_csv(full.d, csv.string().c_str()) == PDRECON_OK);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "dim,birth,death,birth_simplex,death_simplex");

    scoped_diagram brute;
    REQUIRE(pdrecon_diagram_brute(g.g, e2, 2, &brute.d) == PDRECON_OK);
    CHECK(pdrecon_diagram_size(brute.d) == 5);
}

TEST_CASE("reconstruction through the shared library") {
    scoped_graph g = make_reference();
    scoped_oracle o;
    REQUIRE(pdrecon_oracle_create(g.g, 0, &o.o) == PDRECON_OK);

    double* coords = nullptr;
    int n = 0, dim = 0;
    uint64_t vqueries = 0;
    REQUIRE(pdrecon_reconstruct_vertices(o.o, &coords, &n, &dim, &vqueries) == PDRECON_OK);
    CHECK(n == 4);
    CHECK(dim == 2);
    CHECK(vqueries == 3);
    // Lexicographically sorted, so the first vertex is (-1, 2).
    CHECK(std::abs(coords[0] - -1.0) <= 1e-9);
    CHECK(std::abs(coords[1] - 2.0) <= 1e-9);

    int32_t* pairs = nullptr;
    int m = 0;
    uint64_t equeries = 0;
    REQUIRE(pdrecon_reconstruct_edges(o.o, coords, n, dim, 1e-6, &pairs, &m, &equeries) ==
            PDRECON_OK);
    CHECK(m == 4);
    CHECK(equeries == 12);
    pdrecon_free(coords);
    pdrecon_free(pairs);

    scoped_oracle o2;
    REQUIRE(pdrecon_oracle_create(g.g, 0, &o2.o) == PDRECON_OK);
    scoped_graph full;
    uint64_t total = 0;
    REQUIRE(pdrecon_reconstruct_full(o2.o, 0, &full.g, &total) == PDRECON_OK);
    CHECK(total == 15);
    CHECK(pdrecon_graph_num_vertices(full.g) == 4);
    CHECK(pdrecon_graph_num_edges(full.g) == 4);
    CHECK(pdrecon_oracle_query_count(o2.o) == 15);
}

TEST_CASE("roundtrip, verify, and the model through the shared library") {
    scoped_graph g;
    REQUIRE(pdrecon_generate(10, 0.5, 77, 2, 1e-6, &g.g) == PDRECON_OK);
    int exact = 0;
    uint64_t queries = 0;
    char* message = nullptr;
    REQUIRE(pdrecon_roundtrip(g.g, 1e-6, &exact, &queries, &message) == PDRECON_OK);
    CHECK(exact == 1);
    CHECK(queries == 10 * 10 - 10 + 3);
    CHECK(message == nullptr);

    int mismatches = -1;
    REQUIRE(pdrecon_verify(g.g, 10, 5, &mismatches) == PDRECON_OK);
    CHECK(mismatches == 0);

    double p56 = 0, p55 = 0;
    REQUIRE(pdrecon_minangle_model(56, &p56) == PDRECON_OK);
    REQUIRE(pdrecon_minangle_model(55, &p55) == PDRECON_OK);
    CHECK(p55 < 0.05);
    CHECK(p56 > 0.05);
}

TEST_CASE("experiment csv entry points") {
    const fs::path bench_csv = fs::temp_directory_path() / "pdrecon_capi_bench.csv";
    const int ns[] = {8};
    char* summary = nullptr;
    REQUIRE(pdrecon_bench_csv(ns, 1, nullptr, 0, 1, 2, 3, bench_csv.string().c_str(), &summary) ==
            PDRECON_OK);
    REQUIRE(summary != nullptr);
    CHECK(std::string(summary).find("edge_vs_ncubed") != std::string::npos);
    pdrecon_free(summary);

    const fs::path ma_csv = fs::temp_directory_path() / "pdrecon_capi_ma.csv";
    char* ma_summary = nullptr;
    const int ma_ns[] = {10};
    REQUIRE(pdrecon_minangle_csv(ma_ns, 1, 5, 4, ma_csv.string().c_str(), nullptr, &ma_summary) ==
            PDRECON_OK);
    REQUIRE(ma_summary != nullptr);
    CHECK(std::string(ma_summary).find("empirical_fraction") != std::string::npos);
    pdrecon_free(ma_summary);
}
