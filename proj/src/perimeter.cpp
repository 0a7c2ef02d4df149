#include "hexiso/perimeter.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "hexiso/errors.hpp"
#include "membership.hpp"

namespace hexiso {

Region Region::infinite() { return Region(nullptr); }

Region Region::finite(int radius) { return Region(std::make_shared<const FiniteGrid>(radius)); }

namespace {

void require_inside(const VertexSet& w, const Region& region) {
  if (!region.is_finite()) return;
  for (Vertex v : w) {
    if (!region.contains(v)) {
      throw ContainmentError("vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                             ") lies outside G_" + std::to_string(region.grid()->radius()));
    }
  }
}

void require_nonempty(const VertexSet& w, const char* what) {
  if (w.empty()) throw EmptySetError(std::string(what) + " needs a non-empty vertex set");
}

}  // namespace

VertexSet neighbor_set(const VertexSet& w, const Region& region) {
  require_inside(w, region);
  const detail::Membership in_w(w.view());
  std::vector<Vertex> out;
  out.reserve(w.size());
  for (Vertex v : w) {
    for (Vertex u : neighbors(v)) {
      if (!in_w.contains(u) && region.contains(u)) out.push_back(u);
    }
  }
  return VertexSet(std::move(out));
}

VertexSet boundary_set(const VertexSet& w, const Region& region) {
  require_inside(w, region);
  const detail::Membership in_w(w.view());
  std::vector<Vertex> out;
  for (Vertex v : w) {
    for (Vertex u : neighbors(v)) {
      if (!in_w.contains(u) && region.contains(u)) {
        out.push_back(v);
        break;
      }
    }
  }
  return VertexSet(std::move(out));
}

std::vector<Edge> cut_edges(const VertexSet& w, const Region& region) {
  require_inside(w, region);
  const detail::Membership in_w(w.view());
  std::vector<Edge> out;
  for (Vertex v : w) {
    for (Vertex u : neighbors(v)) {
      if (!in_w.contains(u) && region.contains(u)) out.push_back(make_edge(v, u));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet outside_neighbor_set(const VertexSet& w, const FiniteGrid& grid) {
  std::vector<Vertex> out;
  for (Vertex v : neighbor_set(w)) {
    if (!grid.contains(v)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

PerimeterReport measure(const VertexSet& w, const Region& region) {
  PerimeterReport report;
  if (w.empty()) return report;
  require_inside(w, region);
  const detail::Membership in_w(w.view());
  std::vector<Vertex> outside;
  outside.reserve(w.size());
  for (Vertex v : w) {
    bool on_boundary = false;
    for (Vertex u : neighbors(v)) {
      if (in_w.contains(u) || !region.contains(u)) continue;
      outside.push_back(u);
      ++report.e_count;
      on_boundary = true;
    }
    if (on_boundary) ++report.b_count;
  }
  std::sort(outside.begin(), outside.end());
  report.n_count = std::unique(outside.begin(), outside.end()) - outside.begin();
  report.l = gray_row_counts(w);
  return report;
}

GrayRowCounts gray_row_counts(const VertexSet& w) {
  require_nonempty(w, "gray_row_counts");
  GrayRowCounts l{};
  std::vector<RowKey> keys(w.size());
  std::vector<std::uint8_t> seen;
  for (Direction d : kDirections) {
    std::transform(w.begin(), w.end(), keys.begin(), [d](Vertex v) { return row_key(v, d); });
    const auto [lo, hi] = std::minmax_element(keys.begin(), keys.end());
    const RowKey span = *hi - *lo + 1;
    std::int64_t count = 0;
    if (span <= 4 * static_cast<RowKey>(keys.size())) {
      seen.assign(static_cast<std::size_t>(span), 0);
      for (RowKey k : keys) {
        auto& bit = seen[static_cast<std::size_t>(k - *lo)];
        count += bit == 0;
        bit = 1;
      }
    } else {
      std::sort(keys.begin(), keys.end());
      count = std::unique(keys.begin(), keys.end()) - keys.begin();
    }
    l[index_of(d) - 1] = count;
  }
  return l;
}

VertexSet outermost_neighbors(const VertexSet& w, Direction d) {
  require_nonempty(w, "outermost_neighbors");
  struct Extent {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  };
  std::unordered_map<RowKey, Extent> rows;
  for (Vertex v : w) {
    Extent& e = rows[row_key(v, d)];
    const std::int64_t p = row_position(v, d);
    e.lo = std::min(e.lo, p);
    e.hi = std::max(e.hi, p);
  }
  std::vector<Vertex> out;
  out.reserve(2 * rows.size());
  for (const auto& [key, e] : rows) {
    out.push_back(vertex_on_row(d, key, e.lo - 1));
    out.push_back(vertex_on_row(d, key, e.hi + 1));
  }
  return VertexSet(std::move(out));
}

std::map<Vertex, int> outermost_multiplicity(const VertexSet& w) {
  std::map<Vertex, int> count;
  for (Direction d : kDirections) {
    for (Vertex v : outermost_neighbors(w, d)) ++count[v];
  }
  return count;
}

}  // namespace hexiso
