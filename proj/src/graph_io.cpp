#include "pdrecon/graph_io.hpp"

#include <fstream>

#include <json.hpp>

namespace pdrecon {

embedded_graph read_graph_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        raise(errc::io_error, std::string("graph json: ") + e.what());
    }
    try {
        const int dim = j.at("dim").get<int>();
        std::vector<double> coords;
        for (const auto& v : j.at("vertices")) {
            if (static_cast<int>(v.size()) != dim)
                raise(errc::io_error, "graph json: vertex arity differs from dim");
            for (const auto& c : v) coords.push_back(c.get<double>());
        }
        std::vector<edge> edges;
        if (j.contains("edges"))
            for (const auto& e : j.at("edges")) {
                if (e.size() != 2) raise(errc::io_error, "graph json: edge must be a pair");
                edges.push_back(make_edge(e[0].get<std::int32_t>(), e[1].get<std::int32_t>()));
            }
        return embedded_graph(dim, std::move(coords), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        raise(errc::io_error, std::string("graph json: ") + e.what());
    }
}

embedded_graph load_graph_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot open '" + path + "' for reading");
    return read_graph_json(in);
}

void write_graph_json(const embedded_graph& g, std::ostream& out) {
    nlohmann::json j;
    j["dim"] = g.dim();
    auto vertices = nlohmann::json::array();
    for (int i = 0; i < g.num_vertices(); ++i) {
        auto v = nlohmann::json::array();
        for (double c : g.vertex(i)) v.push_back(c);
        vertices.push_back(std::move(v));
    }
    j["vertices"] = std::move(vertices);
    auto edges = nlohmann::json::array();
    for (const edge& e : g.edges()) edges.push_back(nlohmann::json::array({e.u, e.v}));
    j["edges"] = std::move(edges);
    out << j.dump(2) << '\n';
}

void save_graph_json(const embedded_graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(errc::io_error, "cannot open '" + path + "' for writing");
    write_graph_json(g, out);
}

} // namespace pdrecon
