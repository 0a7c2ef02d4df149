#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hexiso/cli.hpp"
#include "hexiso/io.hpp"
#include "hexiso/perimeter.hpp"

using namespace hexiso;
using hexiso::io::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("grid") {
  const Outcome o = run_cli({"grid", "--radius", "3"});
  CHECK(o.code == cli::kOk);
  const json doc = json::parse(o.out);
  CHECK(doc["v"] == 54);
  CHECK(doc["n"] == 18);
  CHECK(doc["e"] == 18);
  CHECK(doc["expected_v"] == 54);
  CHECK(doc["ok"] == true);
  CHECK(run_cli({"grid", "--radius", "0"}).code == cli::kUsage);
}

TEST_CASE("usage errors") {
  const Outcome unknown = run_cli({"grid", "--radius", "3", "--bogus"});
  CHECK(unknown.code == cli::kUsage);
  CHECK(unknown.out.empty());
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run_cli({}).code == cli::kUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kUsage);
  CHECK(run_cli({"profile", "--max-size", "3", "--measure", "Q"}).code == cli::kUsage);
  CHECK(run_cli({"bounds", "--eval", "f", "--c", "5"}).code == cli::kUsage);
  CHECK(run_cli({"measure", "--input", "/nonexistent.json"}).code == cli::kUsage);
  CHECK(run_cli({"check", "--family", "random", "--max-size", "0"}).code == cli::kUsage);
}

TEST_CASE("resource guards") {
  CHECK(run_cli({"conjecture", "--radius", "3"}).code == cli::kResource);
  CHECK(run_cli({"profile", "--max-size", "20", "--measure", "N"}).code == cli::kResource);
  CHECK(run_cli({"check", "--family", "finite-grid", "--radius", "5", "--max-size", "3"}).code ==
        cli::kResource);
  CHECK(run_cli({"check", "--family", "connected", "--max-size", "30"}).code == cli::kResource);
}

TEST_CASE("check families") {
  const Outcome fin = run_cli({"check", "--family", "finite-grid", "--radius", "1", "--max-size", "3"});
  CHECK(fin.code == cli::kOk);
  CHECK(fin.out.find("checked: 41\n") != std::string::npos);
  CHECK(fin.out.find("violations: 0\n") != std::string::npos);

  const Outcome con = run_cli({"check", "--family", "connected", "--max-size", "5", "--threads", "2"});
  CHECK(con.code == cli::kOk);
  CHECK(con.out.find("violations: 0\n") != std::string::npos);

  const std::vector<std::string> random = {"check", "--family", "random", "--max-size", "10",
                                           "--samples", "500", "--window", "3", "--seed", "9"};
  const Outcome a = run_cli(random);
  CHECK(a.code == cli::kOk);
  CHECK(a.out.find("checked: 500\n") != std::string::npos);
  CHECK(run_cli(random).out == a.out);
}

TEST_CASE("bounds") {
  const json g = json::parse(run_cli({"bounds", "--eval", "g", "--c", "0.71743"}).out);
  CHECK(std::abs(g["value"].get<double>() - 1.0) < 1e-4);
  const json rc = json::parse(run_cli({"bounds", "--eval", "rc", "--c", "0.6053"}).out);
  CHECK(rc["value"] == 2);
  const json f = json::parse(run_cli({"bounds", "--eval", "f", "--c", "0"}).out);
  CHECK(f["value"] == 0.0);
}

TEST_CASE("measure and normalize on files") {
  const std::string path =
      write_temp("hexiso_cli_sets.json", R"([{"vertices":[[0,0],[0,3]]},{"vertices":[[0,0]]}])");
  const Outcome m = run_cli({"measure", "--input", path});
  CHECK(m.code == cli::kOk);
  const json reports = json::parse(m.out);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0]["n"] == measure(VertexSet{{0, 0}, {0, 3}}).n_count);
  CHECK(reports[1].dump() == R"({"b":1,"e":3,"l":[1,1,1],"n":3})");

  const Outcome n = run_cli({"normalize", "--input", path, "--trace"});
  CHECK(n.code == cli::kOk);
  const json norm = json::parse(n.out);
  CHECK(norm[0]["vertices"].size() == 2);
  CHECK(norm[0]["trace"]["steps"].size() >= 1);
  CHECK(norm[1]["trace"]["steps"].empty());

  // Round trip: normalized output fed back into measure.
  const std::string again = write_temp("hexiso_cli_norm.json", json({{"vertices", norm[0]["vertices"]}}).dump());
  const json back = json::parse(run_cli({"measure", "--input", again}).out);
  CHECK(back["n"].get<int>() <= reports[0]["n"].get<int>());

  const std::string inner = write_temp("hexiso_cli_inner.json", R"({"vertices":[[0,0],[1,0],[2,0]]})");
  const json fin = json::parse(run_cli({"measure", "--input", inner, "--region", "finite:1"}).out);
  CHECK(fin["n"] == 2);
  CHECK(run_cli({"measure", "--input", inner, "--region", "finite:x"}).code == cli::kUsage);
  CHECK(run_cli({"measure", "--input", inner, "--region", "finite:0"}).code == cli::kUsage);
  const std::string outside = write_temp("hexiso_cli_out.json", R"({"vertices":[[9,9]]})");
  CHECK(run_cli({"measure", "--input", outside, "--region", "finite:1"}).code == cli::kUsage);
  for (const auto& p : {path, again, inner, outside}) std::filesystem::remove(p);
}

TEST_CASE("profile and conjecture output") {
  const Outcome csv = run_cli({"profile", "--max-size", "6", "--measure", "N"});
  CHECK(csv.code == cli::kOk);
  CHECK(csv.out.rfind("n,measure,min,witness\n1,N,3,0:0\n", 0) == 0);
  CHECK(csv.out.find("\n6,N,6,0:0;0:1;1:0;1:1;2:0;2:1\n") != std::string::npos);
  const json rows = json::parse(run_cli({"profile", "--max-size", "3", "--measure", "E", "--format", "json"}).out);
  CHECK(rows.size() == 3);
  CHECK(rows[0]["min"] == 3);

  const Outcome c = run_cli({"conjecture", "--radius", "1", "--threads", "2"});
  CHECK(c.code == cli::kOk);
  const json scans = json::parse(c.out);
  REQUIRE(scans.size() == 2);
  CHECK(scans[0]["measure"] == "N");
  CHECK(scans[0]["min_ratio_sq"] == "4/3");
  CHECK(scans[1]["measure"] == "E");
  CHECK(scans[1]["min_ratio_sq"] == "4/3");
  CHECK(run_cli({"conjecture", "--radius", "1", "--threads", "1"}).out == c.out);
}

TEST_CASE("help") {
  const Outcome h = run_cli({"--help"});
  CHECK(h.code == cli::kOk);
  CHECK(h.out.find("conjecture") != std::string::npos);
}
