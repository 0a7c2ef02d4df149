#include "hexiso/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "hexiso/errors.hpp"

namespace hexiso::io {

json vertex_list(const VertexSet& w) {
  json list = json::array();
  for (Vertex v : w) list.push_back({v.x, v.y});
  return list;
}

json to_json(const VertexSet& w) { return {{"vertices", vertex_list(w)}}; }

json to_json(const PerimeterReport& report) {
  return {{"n", report.n_count},
          {"b", report.b_count},
          {"e", report.e_count},
          {"l", {report.l[0], report.l[1], report.l[2]}}};
}

json to_json(const NormalizationTrace& trace) {
  json steps = json::array();
  for (const NormalizationStep& s : trace.steps) {
    steps.push_back({{"dir", index_of(s.row.direction)},
                     {"key", s.row.key},
                     {"agreeable", index_of(s.agreeable)},
                     {"shift", {s.shift.dx, s.shift.dy}},
                     {"moved", s.moved}});
  }
  return {{"steps", steps}, {"iterations", trace.iterations}};
}

json to_json(const BoundCheck& check) {
  return {{"name", check.name},
          {"holds", check.holds},
          {"tight", check.tight},
          {"lhs", to_decimal(check.lhs)},
          {"rhs", to_decimal(check.rhs)}};
}

json to_json(const ScanResult& result) {
  return {{"r", result.radius},
          {"measure", std::string(1, measure_name(result.measure))},
          {"min_ratio_sq", std::to_string(result.min_ratio_sq.num()) + "/" +
                               std::to_string(result.min_ratio_sq.den())},
          {"witness", vertex_list(result.witness)},
          {"subsets", std::to_string(result.subsets)},
          {"conjecture_consistent", result.conjecture_consistent}};
}

json to_json(const ProfileRow& row) {
  return {{"n", row.n},
          {"measure", std::string(1, measure_name(row.measure))},
          {"min", row.min_value},
          {"connected_only", row.connected_only},
          {"witness", vertex_list(row.argmin.vertices)}};
}

namespace {

Coord coordinate(const json& value) {
  if (!value.is_number_integer()) throw InvalidArgument("vertex coordinates must be integers");
  const auto c = value.get<std::int64_t>();
  if (c < std::numeric_limits<Coord>::min() / 4 || c > std::numeric_limits<Coord>::max() / 4) {
    throw InvalidArgument("vertex coordinate out of range");
  }
  return static_cast<Coord>(c);
}

}  // namespace

VertexSet vertex_set_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InvalidArgument("expected an object with a \"vertices\" array");
  }
  std::vector<Vertex> vs;
  for (const json& pair : doc["vertices"]) {
    if (!pair.is_array() || pair.size() != 2) {
      throw InvalidArgument("each vertex must be an [x, y] pair");
    }
    vs.push_back({coordinate(pair[0]), coordinate(pair[1])});
  }
  return VertexSet::from_distinct(std::move(vs));
}

NormalizationTrace trace_from_json(const json& doc) {
  NormalizationTrace trace;
  try {
    for (const json& s : doc.at("steps")) {
      NormalizationStep step;
      step.row = {direction_from_index(s.at("dir").get<int>()), s.at("key").get<RowKey>()};
      step.agreeable = direction_from_index(s.at("agreeable").get<int>());
      step.shift = {s.at("shift").at(0).get<Coord>(), s.at("shift").at(1).get<Coord>()};
      step.moved = s.at("moved").get<std::size_t>();
      trace.steps.push_back(step);
    }
    trace.iterations = doc.at("iterations").get<int>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed trace: ") + e.what());
  }
  return trace;
}

std::vector<VertexSet> read_vertex_sets(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
  std::vector<VertexSet> sets;
  if (doc.is_array()) {
    for (const json& item : doc) sets.push_back(vertex_set_from_json(item));
  } else {
    sets.push_back(vertex_set_from_json(doc));
  }
  return sets;
}

std::string compact_vertices(const VertexSet& w) {
  std::string out;
  for (Vertex v : w) {
    if (!out.empty()) out += ';';
    out += std::to_string(v.x) + ':' + std::to_string(v.y);
  }
  return out;
}

std::string profile_csv(const std::vector<ProfileRow>& rows) {
  std::ostringstream out;
  out << "n,measure,min,witness\n";
  for (const ProfileRow& row : rows) {
    out << row.n << ',' << measure_name(row.measure) << ',' << row.min_value << ','
        << compact_vertices(row.argmin.vertices) << '\n';
  }
  return out.str();
}

}  // namespace hexiso::io
