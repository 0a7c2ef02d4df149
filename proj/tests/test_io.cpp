#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hexiso/errors.hpp"
#include "hexiso/io.hpp"

using namespace hexiso;
using hexiso::io::json;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("vertex set documents") {
  const VertexSet w{{1, 0}, {0, 0}};
  const json doc = io::to_json(w);
  CHECK(doc.dump() == R"({"vertices":[[0,0],[1,0]]})");
  CHECK(io::vertex_set_from_json(doc) == w);
  CHECK_THROWS_AS(io::vertex_set_from_json(json::parse(R"({"vertices":[[0,0],[0,0]]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(io::vertex_set_from_json(json::parse(R"({"vertices":[[0]]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(io::vertex_set_from_json(json::parse(R"({"vertices":[[0.5,1]]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(io::vertex_set_from_json(json::parse(R"([[0,0]])")), InvalidArgument);
  CHECK(io::vertex_set_from_json(json::parse(R"({"vertices":[]})")).empty());
}

TEST_CASE("perimeter report document") {
  const PerimeterReport r{6, 6, 6, {2, 2, 2}};
  CHECK(io::to_json(r).dump() == R"({"b":6,"e":6,"l":[2,2,2],"n":6})");
}

TEST_CASE("trace round trip") {
  NormalizationTrace t;
  t.steps.push_back({{Direction::d3, 1}, Direction::d1, {-2, -2}, 1});
  t.steps.push_back({{Direction::d1, -1}, Direction::d2, {1, -1}, 3});
  t.iterations = 2;
  const json doc = io::to_json(t);
  CHECK(doc.dump() ==
        R"({"iterations":2,"steps":[{"agreeable":1,"dir":3,"key":1,"moved":1,"shift":[-2,-2]},)"
        R"({"agreeable":2,"dir":1,"key":-1,"moved":3,"shift":[1,-1]}]})");
  const NormalizationTrace back = io::trace_from_json(doc);
  REQUIRE(back.steps.size() == 2);
  CHECK(back.steps[0].row == t.steps[0].row);
  CHECK(back.steps[1].shift == t.steps[1].shift);
  CHECK(back.steps[1].moved == 3);
  CHECK(back.iterations == 2);
  CHECK_THROWS_AS(io::trace_from_json(json::parse(R"({"steps":[{}]})")), InvalidArgument);
}

TEST_CASE("bound check document keeps exact values as strings") {
  const json doc = io::to_json(check_inf_N(6, 6));
  CHECK(doc.dump() == R"({"holds":true,"lhs":"36","name":"inf_N","rhs":"36","tight":true})");
}

TEST_CASE("scan and profile encodings") {
  ScanResult s;
  s.radius = 1;
  s.min_ratio_sq = Rational(4, 3);
  s.witness = VertexSet{{0, 0}, {1, 0}};
  s.subsets = 41;
  s.conjecture_consistent = true;
  const json doc = io::to_json(s);
  CHECK(doc["min_ratio_sq"] == "4/3");
  CHECK(doc["measure"] == "N");
  CHECK(doc["r"] == 1);
  CHECK(doc["witness"].dump() == "[[0,0],[1,0]]");
  CHECK(doc["conjecture_consistent"] == true);

  ScanResult whole = s;
  whole.min_ratio_sq = Rational(2);
  CHECK(io::to_json(whole)["min_ratio_sq"] == "2/1");

  ProfileRow row{2, Measure::e, 4, {VertexSet{{0, 0}, {1, 0}}, 0}, false};
  CHECK(io::compact_vertices(row.argmin.vertices) == "0:0;1:0");
  CHECK(io::profile_csv({row}) == "n,measure,min,witness\n2,E,4,0:0;1:0\n");
  CHECK(io::to_json(row)["connected_only"] == false);
}

TEST_CASE("reading vertex-set files") {
  const auto single = write_temp("hexiso_io_single.json", R"({"vertices":[[0,0],[0,3]]})");
  CHECK(io::read_vertex_sets(single) == std::vector<VertexSet>{VertexSet{{0, 0}, {0, 3}}});
  const auto many =
      write_temp("hexiso_io_many.json", R"([{"vertices":[[0,0]]},{"vertices":[[1,0],[2,0]]}])");
  CHECK(io::read_vertex_sets(many).size() == 2);
  const auto broken = write_temp("hexiso_io_broken.json", "{not json");
  CHECK_THROWS_AS(io::read_vertex_sets(broken), InvalidArgument);
  CHECK_THROWS_AS(io::read_vertex_sets("/nonexistent/hexiso.json"), InvalidArgument);
  std::filesystem::remove(single);
  std::filesystem::remove(many);
  std::filesystem::remove(broken);
}
