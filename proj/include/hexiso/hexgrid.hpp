#pragma once

// Brick-wall coordinates for the honeycomb lattice.
//
// Every vertex (x, y) has horizontal neighbours (x-1, y) and (x+1, y); its
// third neighbour is (x, y+1) when x+y is even and (x, y-1) when x+y is odd.
//
//        (0,1)--(1,1)--(2,1)
//          |              |
//        (0,0)--(1,0)--(2,0)
//                 |
//               (1,-1)
//
// Edges split into three classes. Vertical edges form direction 3; a
// horizontal edge belongs to direction 1 when its left endpoint has even
// parity and to direction 2 otherwise. Removing the edges of one direction
// leaves a family of infinite paths ("rows"), indexed by row_key().

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace hexiso {

using Coord = std::int32_t;

struct Vertex {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr bool is_even(Vertex v) { return ((v.x + v.y) & 1) == 0; }

// Translation vector. Only vectors with dx+dy even map the grid onto itself.
struct Offset {
  Coord dx = 0;
  Coord dy = 0;

  friend constexpr auto operator<=>(const Offset&, const Offset&) = default;
  constexpr bool preserves_parity() const { return ((dx + dy) & 1) == 0; }
  constexpr Offset operator*(Coord k) const { return {dx * k, dy * k}; }
  constexpr Offset operator-() const { return {-dx, -dy}; }
};

constexpr Vertex operator+(Vertex v, Offset o) { return {v.x + o.dx, v.y + o.dy}; }

enum class Direction : std::uint8_t { d1 = 1, d2 = 2, d3 = 3 };

inline constexpr std::array<Direction, 3> kDirections{Direction::d1, Direction::d2,
                                                      Direction::d3};

constexpr int index_of(Direction d) { return static_cast<int>(d); }
// Throws InvalidArgument for values outside {1, 2, 3}.
Direction direction_from_index(int index);

// Translation that moves every vertex two steps along its row of
// direction d: (1,1), (1,-1) and (2,0) for d = 1, 2, 3.
constexpr Offset period_vector(Direction d) {
  switch (d) {
    case Direction::d1: return {1, 1};
    case Direction::d2: return {1, -1};
    case Direction::d3: break;
  }
  return {2, 0};
}

struct Edge {
  Vertex u;
  Vertex v;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::array<Vertex, 3> neighbors(Vertex v);
bool adjacent(Vertex a, Vertex b);

// Canonical edge (u < v). Throws InvalidEdge if a and b are not adjacent.
Edge make_edge(Vertex a, Vertex b);
Direction edge_direction(const Edge& e);
// Direction of the unique edge joining v and u; u must be a neighbour of v.
Direction edge_direction(Vertex v, Vertex u);

using RowKey = std::int64_t;

constexpr RowKey row_key(Vertex v, Direction d) {
  switch (d) {
    case Direction::d1: return static_cast<RowKey>(v.y - v.x) >> 1;
    case Direction::d2: return static_cast<RowKey>(v.x + v.y) >> 1;
    case Direction::d3: break;
  }
  return v.y;
}

// Change of the d-key under translation by period_vector(along); 0 when
// d == along, otherwise +1 or -1.
constexpr int key_step(Direction d, Direction along) {
  const Vertex origin{0, 0};
  return static_cast<int>(row_key(origin + period_vector(along), d) - row_key(origin, d));
}

// Position of a vertex along its row of direction d. Consecutive positions
// on the same row are adjacent vertices.
constexpr std::int64_t row_position(Vertex v, Direction d) {
  switch (d) {
    case Direction::d1: return static_cast<std::int64_t>(v.x) + v.y;
    case Direction::d2: return static_cast<std::int64_t>(v.y) - v.x;
    case Direction::d3: break;
  }
  return v.x;
}

// Inverse of (row_key, row_position).
Vertex vertex_on_row(Direction d, RowKey key, std::int64_t position);

/// Finite set of vertices, kept sorted and free of duplicates.
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts and silently drops duplicates.
  explicit VertexSet(std::vector<Vertex> vertices);
  VertexSet(std::initializer_list<Vertex> vertices);

  // Throws InvalidArgument if the input lists a vertex twice.
  static VertexSet from_distinct(std::vector<Vertex> vertices);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  const Vertex& front() const { return vertices_.front(); }
  std::span<const Vertex> view() const { return vertices_; }

  // Throws InvalidArgument for a translation that does not preserve parity.
  VertexSet translated(Offset o) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> vertices_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

// The two adjacent vertices shared by row k1 of d1 and row k2 of d2.
// Throws InvalidArgument when d1 == d2.
VertexSet row_intersection(Direction d1, RowKey k1, Direction d2, RowKey k2);

/// The finite hexagonal grid G_r: all hexagonal faces within face distance
/// r-1 of the central face {(0,0),(1,0),(2,0),(0,1),(1,1),(2,1)}.
class FiniteGrid {
 public:
  // Throws InvalidArgument for r < 1.
  explicit FiniteGrid(int radius);

  int radius() const { return radius_; }
  const VertexSet& vertices() const { return vertices_; }
  // O(1) membership test, independent of the stored set.
  bool contains(Vertex v) const;

  // Inclusive x-range of row y; {1, 0} when the row misses the grid.
  std::pair<Coord, Coord> row_extent(Coord y) const;

 private:
  int radius_;
  VertexSet vertices_;
};

FiniteGrid finite_grid(int radius);

}  // namespace hexiso
