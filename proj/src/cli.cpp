#include "hexiso/cli.hpp"

#include <bit>
#include <cmath>
#include <ostream>

#include "CLI11.hpp"

#include "hexiso/bounds.hpp"
#include "hexiso/errors.hpp"
#include "hexiso/io.hpp"
#include "hexiso/normalize.hpp"
#include "hexiso/perimeter.hpp"
#include "hexiso/search.hpp"

namespace hexiso::cli {

namespace {

using io::json;

struct Options {
  int radius = 1;
  std::string input;
  std::string region = "infinite";
  bool trace = false;
  std::string family;
  int max_size = 0;
  std::size_t samples = 1000;
  int window = 8;
  std::uint64_t seed = 42;
  std::string measure = "N";
  std::string format = "csv";
  std::string eval;
  double c = 0.0;
  unsigned threads = 0;
};

Region parse_region(const std::string& text) {
  if (text == "infinite") return Region::infinite();
  const std::string prefix = "finite:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const int r = std::stoi(text.substr(prefix.size()), &used);
      if (used == text.size() - prefix.size()) return Region::finite(r);
    } catch (const std::logic_error&) {
    }
  }
  throw InvalidArgument("region must be 'infinite' or 'finite:R', got '" + text + "'");
}

void emit_each(std::ostream& out, const std::vector<json>& docs) {
  if (docs.size() == 1) {
    out << docs.front().dump() << '\n';
  } else {
    out << json(docs).dump() << '\n';
  }
}

int cmd_grid(const Options& o, std::ostream& out) {
  const FiniteGrid grid(o.radius);
  const PerimeterReport report = measure(grid.vertices());
  const std::int64_t r = o.radius;
  const json doc = {{"r", r},
                    {"v", grid.vertices().size()},
                    {"n", report.n_count},
                    {"e", report.e_count},
                    {"expected_v", 6 * r * r},
                    {"expected_n", 6 * r},
                    {"expected_e", 6 * r},
                    {"ok", static_cast<std::int64_t>(grid.vertices().size()) == 6 * r * r &&
                               report.n_count == 6 * r && report.e_count == 6 * r}};
  out << doc.dump() << '\n';
  return doc["ok"].get<bool>() ? kOk : kViolations;
}

int cmd_measure(const Options& o, std::ostream& out) {
  const Region region = parse_region(o.region);
  std::vector<json> docs;
  for (const VertexSet& w : io::read_vertex_sets(o.input)) docs.push_back(io::to_json(measure(w, region)));
  emit_each(out, docs);
  return kOk;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  std::vector<json> docs;
  for (const VertexSet& w : io::read_vertex_sets(o.input)) {
    const NormalizationResult result = normalize(w);
    json doc = io::to_json(result.set);
    if (o.trace) doc["trace"] = io::to_json(result.trace);
    docs.push_back(std::move(doc));
  }
  emit_each(out, docs);
  return kOk;
}

struct Violation {
  std::string check;
  VertexSet set;
  std::int64_t size = 0;
  std::int64_t count = 0;
};

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<Violation> examples;

  void record(const BoundCheck& c, const VertexSet& w, std::int64_t size, std::int64_t count) {
    if (c.holds) return;
    ++violations;
    if (examples.size() < 10) examples.push_back({c.name, w, size, count});
  }
  void merge(const Tally& other) {
    checked += other.checked;
    violations += other.violations;
    for (const Violation& v : other.examples) {
      if (examples.size() < 10) examples.push_back(v);
    }
  }
};

void check_infinite(Tally& t, const VertexSet& w) {
  const PerimeterReport r = measure(w);
  const auto size = static_cast<std::int64_t>(w.size());
  ++t.checked;
  t.record(check_inf_N(size, r.n_count), w, size, r.n_count);
  t.record(check_inf_E(size, r.e_count), w, size, r.e_count);
  t.record(check_inf_B(size, r.b_count), w, size, r.b_count);
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.max_size < 1) throw InvalidArgument("--max-size must be positive");
  const unsigned workers = resolve_threads(o.threads);
  std::vector<Tally> tallies(workers);
  if (o.family == "connected") {
    enum_connected_parallel(o.max_size, workers, [&](unsigned worker, const CanonicalSet& s) {
      check_infinite(tallies[worker], s.vertices);
    });
  } else if (o.family == "random") {
    RandomSubsetSampler sampler(o.window, o.seed);
    if (static_cast<std::size_t>(o.max_size) > sampler.population()) {
      throw InvalidArgument("--max-size exceeds the window population");
    }
    for (std::size_t i = 0; i < o.samples; ++i) {
      check_infinite(tallies[0], sampler.next(1 + i % static_cast<std::size_t>(o.max_size)));
    }
  } else if (o.family == "finite-grid") {
    check_region_request(o.radius, o.max_size);
    const RegionIndex index(o.radius);
    enum_region_masks_parallel(o.radius, o.max_size, workers, [&](unsigned worker, std::uint64_t m) {
      const PerimeterReport r = index.measure(m);
      const std::int64_t size = std::popcount(m);
      Tally& t = tallies[worker];
      ++t.checked;
      if (!(check_fin_N(size, r.n_count).holds && check_fin_E(size, r.e_count).holds &&
            check_fin_B(size, r.b_count).holds)) {
        const VertexSet w = index.to_set(m);
        t.record(check_fin_N(size, r.n_count), w, size, r.n_count);
        t.record(check_fin_E(size, r.e_count), w, size, r.e_count);
        t.record(check_fin_B(size, r.b_count), w, size, r.b_count);
      }
    });
  } else {
    throw InvalidArgument("--family must be connected, random or finite-grid");
  }
  Tally total;
  for (const Tally& t : tallies) total.merge(t);
  out << "family: " << o.family << '\n';
  out << "max-size: " << o.max_size << '\n';
  out << "checked: " << total.checked << '\n';
  for (const Violation& v : total.examples) {
    out << "violation: " << v.check << " size=" << v.size << " count=" << v.count
        << " set=" << io::compact_vertices(v.set) << '\n';
  }
  out << "violations: " << total.violations << '\n';
  return total.violations == 0 ? kOk : kViolations;
}

int cmd_profile(const Options& o, std::ostream& out) {
  const Measure m = parse_measure(o.measure);
  const auto rows = profile(o.max_size, m, o.threads);
  if (o.format == "json") {
    json doc = json::array();
    for (const ProfileRow& row : rows) doc.push_back(io::to_json(row));
    out << doc.dump() << '\n';
  } else {
    out << io::profile_csv(rows);
  }
  return kOk;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  json doc = json::array();
  for (Measure m : {Measure::n, Measure::e}) doc.push_back(io::to_json(conjecture_scan(o.radius, m, o.threads)));
  out << doc.dump() << '\n';
  return kOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  json doc = {{"eval", o.eval}, {"c", o.c}};
  if (o.eval == "f") {
    doc["value"] = f(o.c);
  } else if (o.eval == "g") {
    doc["value"] = g(o.c);
  } else {
    doc["value"] = r_threshold(o.c);
  }
  out << doc.dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isoperimetric inequalities on hexagonal grids", "hexiso"};
  app.require_subcommand(1);
  Options o;

  auto add_threads = [&o](CLI::App* cmd) {
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  };

  auto* grid = app.add_subcommand("grid", "Vertex, neighbour and edge counts of G_r");
  grid->add_option("--radius", o.radius, "Grid radius")->required()->check(CLI::PositiveNumber);

  auto* meas = app.add_subcommand("measure", "Perimeter report for vertex sets");
  meas->add_option("--input", o.input, "Vertex-set JSON file")->required();
  meas->add_option("--region", o.region, "infinite or finite:R");

  auto* norm = app.add_subcommand("normalize", "Eliminate bad rows");
  norm->add_option("--input", o.input, "Vertex-set JSON file")->required();
  norm->add_flag("--trace", o.trace, "Include the elimination trace");

  auto* check = app.add_subcommand("check", "Search for inequality violations");
  check->add_option("--family", o.family, "connected, random or finite-grid")
      ->required()
      ->check(CLI::IsMember({"connected", "random", "finite-grid"}));
  check->add_option("--max-size", o.max_size, "Largest set size")->required();
  check->add_option("--radius", o.radius, "Grid radius (finite-grid)");
  check->add_option("--samples", o.samples, "Sample count (random)");
  check->add_option("--window", o.window, "Sampling window radius (random)");
  check->add_option("--seed", o.seed, "Sampling seed (random)");
  add_threads(check);

  auto* prof = app.add_subcommand("profile", "Minimum perimeter per set size");
  prof->add_option("--max-size", o.max_size, "Largest set size")->required();
  prof->add_option("--measure", o.measure, "N, B or E")->required();
  prof->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_threads(prof);

  auto* conj = app.add_subcommand("conjecture", "Exhaustive minimum ratio scan on G_r");
  conj->add_option("--radius", o.radius, "Grid radius (1 or 2)")->required();
  add_threads(conj);

  auto* bnd = app.add_subcommand("bounds", "Evaluate f, g or the radius threshold");
  bnd->add_option("--eval", o.eval, "f, g or rc")->required()->check(CLI::IsMember({"f", "g", "rc"}));
  bnd->add_option("--c", o.c, "Constant c")->required();

  std::vector<const char*> argv{"hexiso"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (grid->parsed()) return cmd_grid(o, out);
    if (meas->parsed()) return cmd_measure(o, out);
    if (norm->parsed()) return cmd_normalize(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (prof->parsed()) return cmd_profile(o, out);
    if (conj->parsed()) return cmd_conjecture(o, out);
    return cmd_bounds(o, out);
  } catch (const ResourceGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const NonTerminationError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace hexiso::cli
