#pragma once

// Bad-row elimination. A row of direction i is bad for W when it holds no
// vertex of W but W has vertices on rows of direction i on both sides of it.
// Translating the part of W on one side along the rows of another direction j
// closes the gap without creating new bad rows for j and without increasing
// |N(W)|; repeating this yields a set of equal size with no bad rows at all.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hexiso/hexgrid.hpp"

namespace hexiso {

struct BadRow {
  Direction direction = Direction::d1;
  RowKey key = 0;

  friend constexpr auto operator<=>(const BadRow&, const BadRow&) = default;
};

struct KeyRange {
  RowKey lo = 0;
  RowKey hi = -1;

  std::int64_t length() const { return hi < lo ? 0 : hi - lo + 1; }
  bool contains(RowKey k) const { return k >= lo && k <= hi; }
  friend constexpr bool operator==(const KeyRange&, const KeyRange&) = default;
};

/// Region bounded by the white rows of directions 1 and 2 that enclose W.
/// Each (d1-key, d2-key) pair contributes two adjacent vertices.
struct Parallelogram {
  KeyRange d1_range;
  KeyRange d2_range;
  std::int64_t vertex_count = 0;

  bool contains(Vertex v) const;
  VertexSet vertices() const;
};

struct NormalizationStep {
  BadRow row;
  Direction agreeable = Direction::d1;
  Offset shift;
  std::size_t moved = 0;
};

struct NormalizationTrace {
  std::vector<NormalizationStep> steps;
  int iterations = 0;
  // 2*l1*l2 after directions 1 and 2 are cleared, one entry per pass.
  std::vector<std::int64_t> potential_history;
};

struct NormalizationResult {
  VertexSet set;
  NormalizationTrace trace;
};

// Bad rows of direction d in ascending key order. Throws EmptySetError.
std::vector<BadRow> find_bad_rows(const VertexSet& w, Direction d);
bool has_bad_rows(const VertexSet& w);

// Throws EmptySetError, or PreconditionError if W has bad rows of
// direction 1 or 2.
Parallelogram parallelogram(const VertexSet& w);

// Moves the part of W above b (larger b-keys) along rows of direction j
// until it sits directly next to the part below, i.e. by g period vectors
// where g is the length of the white run containing b.
// Throws InvalidArgument when j == b.direction and PreconditionError when b
// is not a bad row of W.
VertexSet eliminate_bad_row(const VertexSet& w, const BadRow& b, Direction j);

/// Full normal form. Each pass clears direction 1 (moving along direction 2),
/// then direction 2 (moving along direction 1), then direction 3 one row at a
/// time by moving the W-part in the smaller side of the parallelogram along
/// its longer side. Throws NonTerminationError once the pass count exceeds
/// 4 * (l1 + l2 + l3 + |W|).
NormalizationResult normalize(const VertexSet& w);

// Reapplies the steps of a trace to the original set.
VertexSet replay(const VertexSet& w, const NormalizationTrace& trace);

}  // namespace hexiso
