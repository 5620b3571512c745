#pragma once

#include <iosfwd>
#include <string>

#include "pdrecon/geometry.hpp"

namespace pdrecon {

/// Graph file format shared by the CLI and the tests:
///   { "dim": d, "vertices": [[x1,...,xd], ...], "edges": [[i,j], ...] }
embedded_graph read_graph_json(std::istream& in);
embedded_graph load_graph_json(const std::string& path);
void write_graph_json(const embedded_graph& g, std::ostream& out);
void save_graph_json(const embedded_graph& g, const std::string& path);

} // namespace pdrecon
