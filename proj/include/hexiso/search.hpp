#pragma once

// Enumeration and sampling engines used to verify the bounds by brute force.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hexiso/bounds.hpp"
#include "hexiso/hexgrid.hpp"
#include "hexiso/perimeter.hpp"

namespace hexiso {

enum class Measure { n, b, e };

char measure_name(Measure m);
// Accepts "N", "B", "E" (either case); InvalidArgument otherwise.
Measure parse_measure(const std::string& text);
std::int64_t measure_value(const PerimeterReport& report, Measure m);

/// Representative of a vertex set modulo parity-preserving translations:
/// the lexicographically smallest vertex sits at (0,0) when it is even and
/// at (1,0) when it is odd.
struct CanonicalSet {
  VertexSet vertices;
  std::uint64_t hash = 0;

  friend bool operator==(const CanonicalSet& a, const CanonicalSet& b) {
    return a.hash == b.hash && a.vertices == b.vertices;
  }
};

CanonicalSet canonicalize(const VertexSet& w);
bool is_connected(const VertexSet& w);

// Worker count for a request of `requested` threads (0 = all cores).
unsigned resolve_threads(unsigned requested);

// Runs fn(unit, worker) for every unit in [0, units) on up to `threads`
// workers. Units are handed out in increasing order.
void parallel_for(std::size_t units, unsigned threads,
                  const std::function<void(std::size_t unit, unsigned worker)>& fn);

// ---------------------------------------------------------------------------
// Connected sets of the infinite grid

inline constexpr int kMaxConnectedSize = 14;

// Classes of size |parent| + 1 whose canonical parent is `parent`. The
// parent of a set is obtained by deleting its lexicographically largest
// vertex whose removal keeps the set connected.
std::vector<CanonicalSet> connected_children(const CanonicalSet& parent);
std::vector<CanonicalSet> connected_roots();

// Every connected set with at most n_max vertices, once per translation
// class, in depth-first order. ResourceGuardError unless 1 <= n_max <= 14.
void enum_connected(int n_max, const std::function<void(const CanonicalSet&)>& visit);

/// Parallel form of enum_connected. Classes up to a split depth are visited
/// on the calling thread with worker 0; the subtrees below the split are
/// distributed over the workers. visit(worker, set) must only touch
/// per-worker state.
void enum_connected_parallel(int n_max, unsigned threads,
                             const std::function<void(unsigned worker, const CanonicalSet&)>& visit);

// ---------------------------------------------------------------------------
// Subsets of G_r

/// Bitmask view of G_r for exhaustive enumeration (at most 64 vertices).
class RegionIndex {
 public:
  explicit RegionIndex(int radius);

  int radius() const { return radius_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::uint64_t full_mask() const { return full_; }

  // In-grid measures: N_in, B and E against V(G_r) \ W. l is left zero.
  PerimeterReport measure(std::uint64_t mask) const;
  VertexSet to_set(std::uint64_t mask) const;
  std::uint64_t to_mask(const VertexSet& w) const;

 private:
  int radius_;
  std::vector<Vertex> vertices_;
  std::vector<std::uint64_t> adjacency_;
  std::uint64_t full_ = 0;
};

// Validates (r, k_max): r in {1, 2} (ResourceGuardError above 2) and
// 1 <= k_max <= 3 r^2.
void check_region_request(int radius, int k_max);

// Every non-empty subset of V(G_r) with at most k_max vertices, as a mask
// over RegionIndex(r).vertices(), in increasing mask order.
void enum_region_masks(int radius, int k_max, const std::function<void(std::uint64_t)>& visit);

// Same enumeration partitioned into 256 blocks of the high mask bits.
void enum_region_masks_parallel(int radius, int k_max, unsigned threads,
                                const std::function<void(unsigned worker, std::uint64_t)>& visit);

void enum_region_subsets(int radius, int k_max, const std::function<void(const VertexSet&)>& visit);

// ---------------------------------------------------------------------------
// Random sets

std::uint64_t splitmix64(std::uint64_t& state);

/// Uniform subsets of V(G_window) without replacement (Floyd's selection),
/// deterministic for a given seed.
class RandomSubsetSampler {
 public:
  RandomSubsetSampler(int window_radius, std::uint64_t seed);

  std::size_t population() const { return population_.size(); }
  // InvalidArgument when size is 0 or exceeds the population.
  VertexSet next(std::size_t size);

 private:
  std::uint64_t below(std::uint64_t bound);

  std::vector<Vertex> population_;
  std::mt19937_64 engine_;
  std::vector<std::uint8_t> picked_;
};

void sample_random(int window_radius, std::size_t size, std::size_t count, std::uint64_t seed,
                   const std::function<void(const VertexSet&)>& visit);

// ---------------------------------------------------------------------------
// Profiles and the conjecture scan

struct ProfileRow {
  int n = 0;
  Measure measure = Measure::n;
  std::int64_t min_value = 0;
  CanonicalSet argmin;
  // Minimum over connected sets only; exact over all sets for Measure::e.
  bool connected_only = true;
};

std::vector<ProfileRow> profile(int n_max, Measure measure, unsigned threads = 1);

struct ScanResult {
  int radius = 0;
  Measure measure = Measure::n;
  Rational min_ratio_sq;  // min over W of measure(W)^2 / |W|
  VertexSet witness;
  std::uint64_t subsets = 0;
  bool conjecture_consistent = false;  // min_ratio_sq >= 4/3
};

// Exhaustive over all W in V(G_r) with |W| <= 3 r^2, measures in-grid.
// Measure::b is rejected with InvalidArgument.
ScanResult conjecture_scan(int radius, Measure measure, unsigned threads = 1);

}  // namespace hexiso
