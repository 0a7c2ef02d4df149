#include "hexiso/hexgrid.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "hexiso/errors.hpp"

namespace hexiso {

Direction direction_from_index(int index) {
  if (index < 1 || index > 3) {
    throw InvalidArgument("direction must be 1, 2 or 3, got " + std::to_string(index));
  }
  return static_cast<Direction>(index);
}

std::array<Vertex, 3> neighbors(Vertex v) {
  const Coord dy = is_even(v) ? 1 : -1;
  return {Vertex{v.x - 1, v.y}, Vertex{v.x + 1, v.y}, Vertex{v.x, v.y + dy}};
}

bool adjacent(Vertex a, Vertex b) {
  const auto nb = neighbors(a);
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

Edge make_edge(Vertex a, Vertex b) {
  if (!adjacent(a, b)) {
    throw InvalidEdge("vertices (" + std::to_string(a.x) + "," + std::to_string(a.y) + ") and (" +
                      std::to_string(b.x) + "," + std::to_string(b.y) + ") are not adjacent");
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Direction edge_direction(const Edge& e) {
  if (!adjacent(e.u, e.v)) {
    throw InvalidEdge("edge endpoints are not adjacent");
  }
  return edge_direction(e.u, e.v);
}

Direction edge_direction(Vertex v, Vertex u) {
  if (v.x == u.x) {
    return Direction::d3;
  }
  const Vertex left = v.x < u.x ? v : u;
  return is_even(left) ? Direction::d1 : Direction::d2;
}

Vertex vertex_on_row(Direction d, RowKey key, std::int64_t position) {
  const std::int64_t odd = position & 1;
  switch (d) {
    case Direction::d1: {
      // position = x + y, y - x = 2 key + (position mod 2)
      const std::int64_t y = (position + 2 * key + odd) / 2;
      return {static_cast<Coord>(position - y), static_cast<Coord>(y)};
    }
    case Direction::d2: {
      // position = y - x, x + y = 2 key + (position mod 2)
      const std::int64_t y = (position + 2 * key + odd) / 2;
      return {static_cast<Coord>(y - position), static_cast<Coord>(y)};
    }
    case Direction::d3: break;
  }
  return {static_cast<Coord>(position), static_cast<Coord>(key)};
}

VertexSet::VertexSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (!std::is_sorted(vertices_.begin(), vertices_.end())) {
    std::sort(vertices_.begin(), vertices_.end());
  }
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> vertices)
    : VertexSet(std::vector<Vertex>(vertices)) {}

VertexSet VertexSet::from_distinct(std::vector<Vertex> vertices) {
  const std::size_t n = vertices.size();
  VertexSet s(std::move(vertices));
  if (s.size() != n) {
    throw InvalidArgument("vertex set contains duplicate vertices");
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

VertexSet VertexSet::translated(Offset o) const {
  if (!o.preserves_parity()) {
    throw InvalidArgument("translation (" + std::to_string(o.dx) + "," + std::to_string(o.dy) +
                          ") is not a grid automorphism");
  }
  VertexSet out;
  out.vertices_.reserve(vertices_.size());
  for (Vertex v : vertices_) out.vertices_.push_back(v + o);
  return out;  // translation keeps the order
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet row_intersection(Direction d1, RowKey k1, Direction d2, RowKey k2) {
  if (d1 == d2) {
    throw InvalidArgument("row_intersection needs two different directions");
  }
  if (index_of(d1) > index_of(d2)) {
    std::swap(d1, d2);
    std::swap(k1, k2);
  }
  auto make = [](std::int64_t x, std::int64_t y) {
    return Vertex{static_cast<Coord>(x), static_cast<Coord>(y)};
  };
  if (d1 == Direction::d1 && d2 == Direction::d2) {
    // y - x and x + y share parity, so both are 2k or both are 2k+1.
    return VertexSet{make(k2 - k1, k1 + k2), make(k2 - k1, k1 + k2 + 1)};
  }
  if (d1 == Direction::d1) {
    // y = k2, y - x in {2 k1, 2 k1 + 1}
    return VertexSet{make(k2 - 2 * k1, k2), make(k2 - 2 * k1 - 1, k2)};
  }
  // d2 with d3: y = k2, x + y in {2 k1, 2 k1 + 1}
  return VertexSet{make(2 * k1 - k2, k2), make(2 * k1 + 1 - k2, k2)};
}

namespace {

// Largest face-distance layer of faces whose lower-left corner sits on row y,
// expressed as the half-width 2(r-1) - |y|; negative when no face exists.
int face_half_width(int radius, Coord face_row) {
  const int r1 = radius - 1;
  const int ay = std::abs(face_row);
  return ay > r1 ? -1 : 2 * r1 - ay;
}

}  // namespace

std::pair<Coord, Coord> FiniteGrid::row_extent(Coord y) const {
  // Vertices of row y come from faces anchored on rows y and y-1. Faces on
  // row fy have lower-left x in [-w, w]; each covers x..x+2.
  const int w = std::max(face_half_width(radius_, y), face_half_width(radius_, y - 1));
  if (w < 0) return {1, 0};
  return {-w, w + 2};
}

FiniteGrid::FiniteGrid(int radius) : radius_(radius) {
  if (radius < 1) {
    throw InvalidArgument("finite grid radius must be at least 1, got " + std::to_string(radius));
  }
  std::vector<Vertex> vs;
  vs.reserve(6 * static_cast<std::size_t>(radius) * radius);
  const Coord lo = -(radius - 1);
  const Coord hi = radius;
  // Column by column, so the vertices come out in sorted order.
  const Coord width = 2 * radius;
  for (Coord x = -width; x <= width + 2; ++x) {
    for (Coord y = lo; y <= hi; ++y) {
      if (contains({x, y})) vs.push_back({x, y});
    }
  }
  vertices_ = VertexSet(std::move(vs));
}

bool FiniteGrid::contains(Vertex v) const {
  const auto [a, b] = row_extent(v.y);
  return v.x >= a && v.x <= b;
}

FiniteGrid finite_grid(int radius) { return FiniteGrid(radius); }

}  // namespace hexiso
