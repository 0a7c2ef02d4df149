#pragma once

// Perimeter measures of a finite vertex set W:
//   N(W)  neighbour vertices, outside W and adjacent to W
//   B(W)  boundary vertices, inside W and adjacent to the complement
//   E(W)  cut edges between W and the complement
// plus the per-direction gray-row counts and outermost neighbours.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "hexiso/hexgrid.hpp"

namespace hexiso {

/// Ambient graph the measures are taken in: the infinite grid, or G_r with
/// the complement restricted to V(G_r).
class Region {
 public:
  static Region infinite();
  static Region finite(int radius);

  bool is_finite() const { return grid_ != nullptr; }
  // Null for the infinite region.
  const FiniteGrid* grid() const { return grid_.get(); }
  bool contains(Vertex v) const { return !grid_ || grid_->contains(v); }

 private:
  explicit Region(std::shared_ptr<const FiniteGrid> grid) : grid_(std::move(grid)) {}
  std::shared_ptr<const FiniteGrid> grid_;
};

// (l1, l2, l3): number of distinct d-keys among the vertices of W.
using GrayRowCounts = std::array<std::int64_t, 3>;

struct PerimeterReport {
  std::int64_t n_count = 0;
  std::int64_t b_count = 0;
  std::int64_t e_count = 0;
  GrayRowCounts l{0, 0, 0};

  friend bool operator==(const PerimeterReport&, const PerimeterReport&) = default;
};

// The measure functions throw ContainmentError when W leaves the region.
VertexSet neighbor_set(const VertexSet& w, const Region& region = Region::infinite());
VertexSet boundary_set(const VertexSet& w, const Region& region = Region::infinite());
std::vector<Edge> cut_edges(const VertexSet& w, const Region& region = Region::infinite());

// Neighbours of W (taken in the infinite grid) lying outside G_r.
VertexSet outside_neighbor_set(const VertexSet& w, const FiniteGrid& grid);

// All three counts in one sweep. The empty set reports zeros everywhere.
PerimeterReport measure(const VertexSet& w, const Region& region = Region::infinite());

// Throws EmptySetError for empty W.
GrayRowCounts gray_row_counts(const VertexSet& w);

/// For every gray row of direction d, the two white vertices just past the
/// extreme black vertices on that row (extremes taken over the whole row,
/// not per run). Size is 2 * l_d. Throws EmptySetError for empty W.
VertexSet outermost_neighbors(const VertexSet& w, Direction d);

// Number of directions for which each vertex is an outermost neighbour.
std::map<Vertex, int> outermost_multiplicity(const VertexSet& w);

}  // namespace hexiso
