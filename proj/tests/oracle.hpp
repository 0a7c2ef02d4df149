#pragma once

// Brute-force reference implementations used only by the tests. They work
// from the adjacency relation alone (neighbors()/adjacent()) and never call
// the closed-form key, position or parallelogram code they are checked
// against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "hexiso/hexgrid.hpp"

namespace oracle {

using hexiso::Coord;
using hexiso::Direction;
using hexiso::Vertex;

inline std::vector<Vertex> window(Coord lo_x, Coord hi_x, Coord lo_y, Coord hi_y) {
  std::vector<Vertex> out;
  for (Coord x = lo_x; x <= hi_x; ++x) {
    for (Coord y = lo_y; y <= hi_y; ++y) out.push_back({x, y});
  }
  return out;
}

// Neighbours of v joined by an edge of a direction other than d.
inline std::vector<Vertex> row_neighbors(Vertex v, Direction d) {
  std::vector<Vertex> out;
  for (Vertex u : hexiso::neighbors(v)) {
    if (hexiso::edge_direction(v, u) != d) out.push_back(u);
  }
  return out;
}

// The row of direction d through v, clipped to `steps` vertices each way,
// listed in path order.
inline std::vector<Vertex> walk_row(Vertex v, Direction d, int steps) {
  const auto nb = row_neighbors(v, d);
  std::vector<Vertex> left, right;
  for (int side = 0; side < 2; ++side) {
    auto& out = side == 0 ? left : right;
    Vertex prev = v, cur = nb[side];
    for (int i = 0; i < steps; ++i) {
      out.push_back(cur);
      const auto next = row_neighbors(cur, d);
      const Vertex step = next[0] == prev ? next[1] : next[0];
      prev = cur;
      cur = step;
    }
  }
  std::vector<Vertex> path(left.rbegin(), left.rend());
  path.push_back(v);
  path.insert(path.end(), right.begin(), right.end());
  return path;
}

inline std::set<Vertex> bbox_plus(const std::set<Vertex>& w, Coord margin) {
  Coord lx = w.begin()->x, hx = lx, ly = w.begin()->y, hy = ly;
  for (Vertex v : w) {
    lx = std::min(lx, v.x);
    hx = std::max(hx, v.x);
    ly = std::min(ly, v.y);
    hy = std::max(hy, v.y);
  }
  const auto vs = window(lx - margin, hx + margin, ly - margin, hy + margin);
  return {vs.begin(), vs.end()};
}

// |N(W)|, |B(W)|, |E(W)| straight from the definitions over a window that
// contains W and all of its neighbours. `inside` restricts the complement.
struct Counts {
  std::int64_t n = 0, b = 0, e = 0;
};

template <class Inside>
Counts perimeter(const std::vector<Vertex>& w_list, Inside inside) {
  const std::set<Vertex> w(w_list.begin(), w_list.end());
  Counts c;
  if (w.empty()) return c;
  for (Vertex x : bbox_plus(w, 2)) {
    if (w.count(x) == 0 && inside(x)) {
      bool adjacent_to_w = false;
      for (Vertex y : w) adjacent_to_w = adjacent_to_w || hexiso::adjacent(x, y);
      c.n += adjacent_to_w;
    }
  }
  for (Vertex x : w) {
    bool boundary = false;
    for (Vertex y : bbox_plus({x}, 1)) {
      if (w.count(y) == 0 && inside(y) && hexiso::adjacent(x, y)) {
        boundary = true;
        ++c.e;
      }
    }
    c.b += boundary;
  }
  return c;
}

inline Counts perimeter(const std::vector<Vertex>& w) {
  return perimeter(w, [](Vertex) { return true; });
}

// G_r by breadth-first search over hexagonal faces. A face is the 6-cycle
// through an even vertex (x, y): x..x+2 on rows y and y+1. Two faces are
// adjacent when they share two vertices (an edge).
inline std::set<Vertex> face_vertices(Vertex corner) {
  std::set<Vertex> f;
  for (Coord dx = 0; dx <= 2; ++dx) {
    f.insert({corner.x + dx, corner.y});
    f.insert({corner.x + dx, corner.y + 1});
  }
  return f;
}

inline std::set<Vertex> grid_by_faces(int radius) {
  std::set<Vertex> faces{{0, 0}};
  std::vector<Vertex> frontier{{0, 0}};
  for (int layer = 1; layer < radius; ++layer) {
    std::vector<Vertex> next;
    for (Vertex f : frontier) {
      const auto fv = face_vertices(f);
      for (Coord dx = -3; dx <= 3; ++dx) {
        for (Coord dy = -2; dy <= 2; ++dy) {
          const Vertex g{f.x + dx, f.y + dy};
          if (((g.x + g.y) & 1) != 0 || faces.count(g)) continue;
          const auto gv = face_vertices(g);
          std::vector<Vertex> shared;
          std::set_intersection(fv.begin(), fv.end(), gv.begin(), gv.end(),
                                std::back_inserter(shared));
          if (shared.size() == 2 && hexiso::adjacent(shared[0], shared[1])) {
            faces.insert(g);
            next.push_back(g);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::set<Vertex> out;
  for (Vertex f : faces) {
    const auto fv = face_vertices(f);
    out.insert(fv.begin(), fv.end());
  }
  return out;
}

inline bool connected(const std::set<Vertex>& s) {
  if (s.empty()) return true;
  std::set<Vertex> seen{*s.begin()};
  std::queue<Vertex> q;
  q.push(*s.begin());
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex u : hexiso::neighbors(v)) {
      if (s.count(u) && seen.insert(u).second) q.push(u);
    }
  }
  return seen.size() == s.size();
}

// Translation classes of connected sets of each size 1..n_max, by naive
// level-wise closure (grow every class by every neighbour, dedupe by
// normalised vertex list). Index 0 is empty.
inline std::vector<std::set<std::vector<Vertex>>> connected_classes(int n_max) {
  auto normal = [](std::vector<Vertex> s) {
    std::sort(s.begin(), s.end());
    const Vertex f = s.front();
    const Vertex o = ((f.x + f.y) & 1) == 0 ? Vertex{0, 0} : Vertex{1, 0};
    for (Vertex& v : s) v = {v.x - f.x + o.x, v.y - f.y + o.y};
    return s;
  };
  std::vector<std::set<std::vector<Vertex>>> levels(1);
  levels.push_back({normal({{0, 0}}), normal({{1, 0}})});
  for (int n = 2; n <= n_max; ++n) {
    std::set<std::vector<Vertex>> next;
    for (const auto& s : levels.back()) {
      for (Vertex v : s) {
        for (Vertex u : hexiso::neighbors(v)) {
          if (std::find(s.begin(), s.end(), u) != s.end()) continue;
          auto grown = s;
          grown.push_back(u);
          next.insert(normal(grown));
        }
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

inline std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
