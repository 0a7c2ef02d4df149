#pragma once

// JSON and CSV encodings of the library's value types.
//
//   vertex set    {"vertices": [[x, y], ...]}
//   perimeter     {"n": int, "b": int, "e": int, "l": [l1, l2, l3]}
//   trace         {"steps": [{"dir", "key", "agreeable", "shift": [dx, dy], "moved"}],
//                  "iterations": n}
//   bound check   {"name", "holds", "tight", "lhs": "decimal", "rhs": "decimal"}
//   scan result   {"r", "measure", "min_ratio_sq": "num/den", "witness", "conjecture_consistent"}
//   profile CSV   n,measure,min,witness   (witness as x:y;x:y;...)

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "hexiso/bounds.hpp"
#include "hexiso/hexgrid.hpp"
#include "hexiso/normalize.hpp"
#include "hexiso/perimeter.hpp"
#include "hexiso/search.hpp"

namespace hexiso::io {

using nlohmann::json;

json vertex_list(const VertexSet& w);
json to_json(const VertexSet& w);
json to_json(const PerimeterReport& report);
json to_json(const NormalizationTrace& trace);
json to_json(const BoundCheck& check);
json to_json(const ScanResult& result);
json to_json(const ProfileRow& row);

// Throws InvalidArgument on a malformed document or duplicate vertices.
VertexSet vertex_set_from_json(const json& doc);
NormalizationTrace trace_from_json(const json& doc);

// Reads a vertex-set document, or an array of them.
std::vector<VertexSet> read_vertex_sets(const std::filesystem::path& path);

std::string compact_vertices(const VertexSet& w);  // "x:y;x:y"
std::string profile_csv(const std::vector<ProfileRow>& rows);

}  // namespace hexiso::io
