#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cera/functorial.hpp"
#include "cera/simplicial.hpp"

namespace cera::io {

// Event files
//   CSV:  header "id,x1,...,xd,tau" then one row per event.
//   JSON: {"events": [{"id": 1, "coords": [0, 0], "tau": 0.5}, ...]}
// Either form is detected from the first non-blank character.
std::vector<Event> parse_events_text(std::string_view text);
std::vector<Event> parse_events(const std::filesystem::path& path);

// Level-tagged edge files (CSV):
//   u,v,level            optional header
//   vertices,1,2,3,4     optional vertex universe (isolated vertices in full mode)
//   levels,3             optional level count (trailing levels may add no edges)
//   instants,0.5,1.0     optional time per level
//   1,2,1                edge (1,2) introduced at level 1
// Lines starting with '#' are comments.
Filtration parse_edge_levels_text(std::string_view text, VertexMode mode);
Filtration parse_edge_levels(const std::filesystem::path& path, VertexMode mode);
/// Writes the level-tagged format; parse_edge_levels_text() reads it back.
std::string format_edge_levels(const Filtration& filtration);

// Simplicial filtration files (CSV):
//   vertices,1,2,3,4     optional vertex set
//   level,v1,v2,...      face (and its closure) present from `level` >= 1 on
// Element n of the result is Delta_n; Delta_0 holds the vertices only.
std::vector<SimplicialComplex> parse_complex_levels_text(std::string_view text);
std::vector<SimplicialComplex> parse_complex_levels(const std::filesystem::path& path);

// Vertex maps (CSV): optional header "source,target", then one pair per row.
VertexMap parse_vertex_map_text(std::string_view text);
VertexMap parse_vertex_map(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace cera::io
