#include "hexiso/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "hexiso/errors.hpp"

namespace hexiso {

char measure_name(Measure m) {
  switch (m) {
    case Measure::n: return 'N';
    case Measure::b: return 'B';
    case Measure::e: break;
  }
  return 'E';
}

Measure parse_measure(const std::string& text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'N': return Measure::n;
      case 'B': return Measure::b;
      case 'E': return Measure::e;
      default: break;
    }
  }
  throw InvalidArgument("unknown measure '" + text + "' (expected N, B or E)");
}

std::int64_t measure_value(const PerimeterReport& report, Measure m) {
  switch (m) {
    case Measure::n: return report.n_count;
    case Measure::b: return report.b_count;
    case Measure::e: break;
  }
  return report.e_count;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CanonicalSet canonicalize(const VertexSet& w) {
  CanonicalSet out;
  if (w.empty()) return out;
  const Vertex first = w.front();
  const Vertex origin = is_even(first) ? Vertex{0, 0} : Vertex{1, 0};
  out.vertices = w.translated({origin.x - first.x, origin.y - first.y});
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Vertex v : out.vertices) {
    std::uint64_t s = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.x)) << 32) |
                      static_cast<std::uint32_t>(v.y);
    h = (h ^ splitmix64(s)) * 0x100000001b3ULL;
  }
  out.hash = h;
  return out;
}

bool is_connected(const VertexSet& w) {
  if (w.empty()) return true;
  std::vector<Vertex> stack{w.front()};
  std::vector<Vertex> seen{w.front()};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : neighbors(v)) {
      if (w.contains(u) && std::find(seen.begin(), seen.end(), u) == seen.end()) {
        seen.push_back(u);
        stack.push_back(u);
      }
    }
  }
  return seen.size() == w.size();
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t units, unsigned threads,
                  const std::function<void(std::size_t, unsigned)>& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), units));
  if (workers <= 1) {
    for (std::size_t u = 0; u < units; ++u) fn(u, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t u = next++; u < units; u = next++) fn(u, t);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = units;
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------------------

namespace {

// Connectivity of `vs` minus the element at `skip` (n <= 15).
bool connected_without(const std::vector<Vertex>& vs, std::size_t skip) {
  const std::size_t n = vs.size();
  const std::size_t start = skip == 0 ? 1 : 0;
  std::uint32_t seen = (1u << start) | (1u << skip);
  std::uint32_t frontier = 1u << start;
  while (frontier != 0) {
    const int i = std::countr_zero(frontier);
    frontier &= frontier - 1;
    for (std::size_t j = 0; j < n; ++j) {
      if ((seen >> j & 1u) == 0 && adjacent(vs[i], vs[j])) {
        seen |= 1u << j;
        frontier |= 1u << j;
      }
    }
  }
  return std::popcount(seen) == static_cast<int>(n);
}

void require_connected_size(int n_max) {
  if (n_max < 1 || n_max > kMaxConnectedSize) {
    throw ResourceGuardError("connected enumeration supports 1 <= n <= " +
                             std::to_string(kMaxConnectedSize) + ", got " +
                             std::to_string(n_max));
  }
}

void descend(const CanonicalSet& node, int n_max,
             const std::function<void(const CanonicalSet&)>& visit) {
  visit(node);
  if (static_cast<int>(node.vertices.size()) >= n_max) return;
  for (const CanonicalSet& child : connected_children(node)) descend(child, n_max, visit);
}

}  // namespace

std::vector<CanonicalSet> connected_roots() {
  return {canonicalize(VertexSet{{0, 0}}), canonicalize(VertexSet{{1, 0}})};
}

std::vector<CanonicalSet> connected_children(const CanonicalSet& parent) {
  std::vector<CanonicalSet> out;
  for (Vertex u : neighbor_set(parent.vertices)) {
    std::vector<Vertex> grown(parent.vertices.begin(), parent.vertices.end());
    const auto pos = grown.insert(std::upper_bound(grown.begin(), grown.end(), u), u);
    // u must be the largest non-cut vertex: every larger vertex is a cut vertex.
    bool accepted = true;
    for (auto it = grown.end(); --it != pos;) {
      if (connected_without(grown, static_cast<std::size_t>(it - grown.begin()))) {
        accepted = false;
        break;
      }
    }
    if (accepted) out.push_back(canonicalize(VertexSet(std::move(grown))));
  }
  return out;
}

void enum_connected(int n_max, const std::function<void(const CanonicalSet&)>& visit) {
  require_connected_size(n_max);
  for (const CanonicalSet& root : connected_roots()) descend(root, n_max, visit);
}

void enum_connected_parallel(int n_max, unsigned threads,
                             const std::function<void(unsigned, const CanonicalSet&)>& visit) {
  require_connected_size(n_max);
  constexpr int kSplit = 6;
  if (n_max <= kSplit) {
    enum_connected(n_max, [&](const CanonicalSet& s) { visit(0, s); });
    return;
  }
  std::vector<CanonicalSet> frontier;
  enum_connected(kSplit, [&](const CanonicalSet& s) {
    if (static_cast<int>(s.vertices.size()) < kSplit) {
      visit(0, s);
    } else {
      frontier.push_back(s);
    }
  });
  parallel_for(frontier.size(), threads, [&](std::size_t unit, unsigned worker) {
    descend(frontier[unit], n_max, [&](const CanonicalSet& s) { visit(worker, s); });
  });
}

// ---------------------------------------------------------------------------

RegionIndex::RegionIndex(int radius) : radius_(radius) {
  const FiniteGrid grid(radius);
  if (grid.vertices().size() > 64) {
    throw InvalidArgument("RegionIndex supports at most 64 vertices (radius <= 3)");
  }
  vertices_.assign(grid.vertices().begin(), grid.vertices().end());
  adjacency_.assign(vertices_.size(), 0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (Vertex u : neighbors(vertices_[i])) {
      const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), u);
      if (it != vertices_.end() && *it == u) adjacency_[i] |= std::uint64_t{1} << (it - vertices_.begin());
    }
  }
  full_ = vertices_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertices_.size()) - 1;
}

PerimeterReport RegionIndex::measure(std::uint64_t mask) const {
  PerimeterReport r;
  std::uint64_t outside = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    const std::uint64_t out = adjacency_[std::countr_zero(m)] & ~mask;
    outside |= out;
    r.e_count += std::popcount(out);
    r.b_count += out != 0;
  }
  r.n_count = std::popcount(outside);
  return r;
}

VertexSet RegionIndex::to_set(std::uint64_t mask) const {
  std::vector<Vertex> out;
  for (std::uint64_t m = mask & full_; m != 0; m &= m - 1) out.push_back(vertices_[std::countr_zero(m)]);
  return VertexSet(std::move(out));
}

std::uint64_t RegionIndex::to_mask(const VertexSet& w) const {
  std::uint64_t mask = 0;
  for (Vertex v : w) {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
      throw ContainmentError("vertex outside G_" + std::to_string(radius_));
    }
    mask |= std::uint64_t{1} << (it - vertices_.begin());
  }
  return mask;
}

void check_region_request(int radius, int k_max) {
  if (radius < 1) throw InvalidArgument("radius must be at least 1");
  if (radius > 2) {
    throw ResourceGuardError("exhaustive subset enumeration is limited to radius <= 2, got " +
                             std::to_string(radius));
  }
  if (k_max < 1 || k_max > 3 * radius * radius) {
    throw InvalidArgument("subset size bound must lie in [1, 3r^2], got " + std::to_string(k_max));
  }
}

void enum_region_masks(int radius, int k_max, const std::function<void(std::uint64_t)>& visit) {
  enum_region_masks_parallel(radius, k_max, 1, [&](unsigned, std::uint64_t m) { visit(m); });
}

void enum_region_masks_parallel(int radius, int k_max, unsigned threads,
                                const std::function<void(unsigned, std::uint64_t)>& visit) {
  check_region_request(radius, k_max);
  const int bits = 6 * radius * radius;
  const int high = bits > 12 ? 8 : 0;
  const int low = bits - high;
  parallel_for(std::size_t{1} << high, threads, [&](std::size_t unit, unsigned worker) {
    const std::uint64_t prefix = static_cast<std::uint64_t>(unit) << low;
    const int prefix_bits = std::popcount(prefix);
    if (prefix_bits > k_max) return;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << low); ++m) {
      const std::uint64_t mask = prefix | m;
      if (mask != 0 && prefix_bits + std::popcount(m) <= k_max) visit(worker, mask);
    }
  });
}

void enum_region_subsets(int radius, int k_max,
                         const std::function<void(const VertexSet&)>& visit) {
  check_region_request(radius, k_max);
  const RegionIndex index(radius);
  enum_region_masks(radius, k_max, [&](std::uint64_t m) { visit(index.to_set(m)); });
}

// ---------------------------------------------------------------------------

RandomSubsetSampler::RandomSubsetSampler(int window_radius, std::uint64_t seed) {
  const FiniteGrid window(window_radius);
  population_.assign(window.vertices().begin(), window.vertices().end());
  picked_.assign(population_.size(), 0);
  std::uint64_t state = seed;
  engine_.seed(splitmix64(state));
}

std::uint64_t RandomSubsetSampler::below(std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * bound) >> 64);
}

VertexSet RandomSubsetSampler::next(std::size_t size) {
  const std::size_t n = population_.size();
  if (size == 0 || size > n) {
    throw InvalidArgument("sample size " + std::to_string(size) + " outside [1, " +
                          std::to_string(n) + "]");
  }
  std::vector<Vertex> out;
  out.reserve(size);
  std::vector<std::size_t> chosen;
  chosen.reserve(size);
  for (std::size_t j = n - size; j < n; ++j) {
    std::size_t t = static_cast<std::size_t>(below(j + 1));
    if (picked_[t]) t = j;
    picked_[t] = 1;
    chosen.push_back(t);
  }
  for (std::size_t t : chosen) {
    picked_[t] = 0;
    out.push_back(population_[t]);
  }
  return VertexSet(std::move(out));
}

void sample_random(int window_radius, std::size_t size, std::size_t count, std::uint64_t seed,
                   const std::function<void(const VertexSet&)>& visit) {
  if (window_radius < 1 || size < 1 || count < 1) {
    throw InvalidArgument("sample_random needs positive window, size and count");
  }
  RandomSubsetSampler sampler(window_radius, seed);
  for (std::size_t i = 0; i < count; ++i) visit(sampler.next(size));
}

// ---------------------------------------------------------------------------

namespace {

bool lex_less(const VertexSet& a, const VertexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<ProfileRow> profile(int n_max, Measure measure, unsigned threads) {
  require_connected_size(n_max);
  const unsigned workers = resolve_threads(threads);
  // best[worker][n]
  std::vector<std::vector<std::optional<ProfileRow>>> best(
      workers, std::vector<std::optional<ProfileRow>>(n_max + 1));
  auto offer = [&](std::optional<ProfileRow>& slot, ProfileRow row) {
    if (!slot || row.min_value < slot->min_value ||
        (row.min_value == slot->min_value && lex_less(row.argmin.vertices, slot->argmin.vertices))) {
      slot = std::move(row);
    }
  };
  enum_connected_parallel(n_max, workers, [&](unsigned worker, const CanonicalSet& s) {
    const int n = static_cast<int>(s.vertices.size());
    const std::int64_t value = measure_value(hexiso::measure(s.vertices), measure);
    auto& slot = best[worker][n];
    if (slot && value > slot->min_value) return;
    offer(slot, ProfileRow{n, measure, value, s, measure != Measure::e});
  });
  std::vector<ProfileRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    std::optional<ProfileRow> merged;
    for (auto& per_worker : best) {
      if (per_worker[n]) offer(merged, *per_worker[n]);
    }
    rows.push_back(std::move(*merged));
  }
  return rows;
}

ScanResult conjecture_scan(int radius, Measure measure, unsigned threads) {
  if (measure == Measure::b) {
    throw InvalidArgument("conjecture scan covers the N and E measures only");
  }
  const int k_max = 3 * radius * radius;
  check_region_request(radius, k_max);
  const RegionIndex index(radius);
  struct Best {
    Rational ratio;
    std::uint64_t mask = 0;
    std::uint64_t count = 0;
  };
  const unsigned workers = resolve_threads(threads);
  std::vector<Best> best(workers);
  auto better = [](const Rational& r, std::uint64_t m, const Best& b) {
    return b.mask == 0 || r < b.ratio || (r == b.ratio && m < b.mask);
  };
  enum_region_masks_parallel(radius, k_max, workers, [&](unsigned worker, std::uint64_t mask) {
    const std::int64_t v = measure_value(index.measure(mask), measure);
    const Rational ratio(v * v, std::popcount(mask));
    Best& b = best[worker];
    ++b.count;
    if (better(ratio, mask, b)) {
      b.ratio = ratio;
      b.mask = mask;
    }
  });
  Best total;
  for (const Best& b : best) {
    total.count += b.count;
    if (b.mask != 0 && better(b.ratio, b.mask, total)) {
      total.ratio = b.ratio;
      total.mask = b.mask;
    }
  }
  ScanResult out;
  out.radius = radius;
  out.measure = measure;
  out.min_ratio_sq = total.ratio;
  out.witness = index.to_set(total.mask);
  out.subsets = total.count;
  out.conjecture_consistent = total.ratio >= Rational(4, 3);
  return out;
}

}  // namespace hexiso
