#include "hexiso/normalize.hpp"

#include <algorithm>
#include <string>

#include "hexiso/errors.hpp"
#include "hexiso/perimeter.hpp"

namespace hexiso {

namespace {

std::vector<RowKey> distinct_keys(const VertexSet& w, Direction d) {
  std::vector<RowKey> keys;
  keys.reserve(w.size());
  for (Vertex v : w) keys.push_back(row_key(v, d));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

// Maximal runs of white keys between gray keys, as [first, last].
std::vector<KeyRange> white_runs(const VertexSet& w, Direction d) {
  const auto keys = distinct_keys(w, d);
  std::vector<KeyRange> runs;
  for (std::size_t i = 1; i < keys.size(); ++i) {
    if (keys[i] - keys[i - 1] > 1) runs.push_back({keys[i - 1] + 1, keys[i] - 1});
  }
  return runs;
}

KeyRange key_range(const VertexSet& w, Direction d) {
  KeyRange r{row_key(w.front(), d), row_key(w.front(), d)};
  for (Vertex v : w) {
    const RowKey k = row_key(v, d);
    r.lo = std::min(r.lo, k);
    r.hi = std::max(r.hi, k);
  }
  return r;
}

enum class Side { below, above };

// Translates the vertices of W strictly below/above `key` (in direction d).
VertexSet shift_side(const VertexSet& w, Direction d, RowKey key, Side side, Offset shift,
                     std::size_t& moved) {
  std::vector<Vertex> out;
  out.reserve(w.size());
  moved = 0;
  for (Vertex v : w) {
    const RowKey k = row_key(v, d);
    const bool move = side == Side::above ? k > key : k < key;
    if (move) {
      out.push_back(v + shift);
      ++moved;
    } else {
      out.push_back(v);
    }
  }
  return VertexSet(std::move(out));
}

// Offset moving the above-part of a gap of width g down onto the part below.
Offset closing_shift(Direction d, Direction j, std::int64_t g) {
  return period_vector(j) * static_cast<Coord>(-g * key_step(d, j));
}

// Removes the lowest white run of direction d, moving along j.
VertexSet close_lowest_run(const VertexSet& w, Direction d, Direction j,
                           NormalizationTrace& trace) {
  const auto runs = white_runs(w, d);
  const KeyRange run = runs.front();
  NormalizationStep step{{d, run.lo}, j, closing_shift(d, j, run.length()), 0};
  VertexSet out = shift_side(w, d, run.lo, Side::above, step.shift, step.moved);
  trace.steps.push_back(step);
  return out;
}

std::int64_t potential(const VertexSet& w) {
  const auto l = gray_row_counts(w);
  return 2 * l[0] * l[1];
}

// Direction whose rows carry the longer side of the parallelogram. A row of
// direction 1 spans the d2-range and vice versa.
Direction longer_side_direction(const Parallelogram& p) {
  return p.d2_range.length() >= p.d1_range.length() ? Direction::d1 : Direction::d2;
}

// Eliminates the lowest direction-3 bad row of w, one row at a time, using
// the fixed parallelogram p of the set that entered this stage.
VertexSet close_direction3_row(const VertexSet& w, const Parallelogram& p,
                               NormalizationTrace& trace) {
  const RowKey key = find_bad_rows(w, Direction::d3).front().key;

  // Vertex (k1, k2) pairs occupy y = k1 + k2 and k1 + k2 + 1.
  std::int64_t below = 0, above = 0;
  for (RowKey k1 = p.d1_range.lo; k1 <= p.d1_range.hi; ++k1) {
    for (RowKey k2 = p.d2_range.lo; k2 <= p.d2_range.hi; ++k2) {
      for (RowKey y = k1 + k2; y <= k1 + k2 + 1; ++y) {
        if (y < key) ++below;
        if (y > key) ++above;
      }
    }
  }
  const Side side = above <= below ? Side::above : Side::below;
  const Direction j = longer_side_direction(p);
  Offset shift = closing_shift(Direction::d3, j, 1);
  if (side == Side::below) shift = -shift;

  NormalizationStep step{{Direction::d3, key}, j, shift, 0};
  VertexSet out = shift_side(w, Direction::d3, key, side, shift, step.moved);
  trace.steps.push_back(step);
  return out;
}

void require_nonempty(const VertexSet& w, const char* what) {
  if (w.empty()) throw EmptySetError(std::string(what) + " needs a non-empty vertex set");
}

}  // namespace

bool Parallelogram::contains(Vertex v) const {
  return d1_range.contains(row_key(v, Direction::d1)) &&
         d2_range.contains(row_key(v, Direction::d2));
}

VertexSet Parallelogram::vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(vertex_count, 0)));
  for (RowKey k1 = d1_range.lo; k1 <= d1_range.hi; ++k1) {
    for (RowKey k2 = d2_range.lo; k2 <= d2_range.hi; ++k2) {
      for (Vertex v : row_intersection(Direction::d1, k1, Direction::d2, k2)) out.push_back(v);
    }
  }
  return VertexSet(std::move(out));
}

std::vector<BadRow> find_bad_rows(const VertexSet& w, Direction d) {
  require_nonempty(w, "find_bad_rows");
  std::vector<BadRow> out;
  for (const KeyRange& run : white_runs(w, d)) {
    for (RowKey k = run.lo; k <= run.hi; ++k) out.push_back({d, k});
  }
  return out;
}

bool has_bad_rows(const VertexSet& w) {
  return std::any_of(kDirections.begin(), kDirections.end(),
                     [&](Direction d) { return !white_runs(w, d).empty(); });
}

Parallelogram parallelogram(const VertexSet& w) {
  require_nonempty(w, "parallelogram");
  for (Direction d : {Direction::d1, Direction::d2}) {
    if (!white_runs(w, d).empty()) {
      throw PreconditionError("parallelogram needs a set without bad rows of direction " +
                              std::to_string(index_of(d)));
    }
  }
  Parallelogram p{key_range(w, Direction::d1), key_range(w, Direction::d2), 0};
  p.vertex_count = 2 * p.d1_range.length() * p.d2_range.length();
  return p;
}

VertexSet eliminate_bad_row(const VertexSet& w, const BadRow& b, Direction j) {
  if (j == b.direction) {
    throw InvalidArgument("agreeable direction must differ from the bad row's direction");
  }
  require_nonempty(w, "eliminate_bad_row");
  const auto runs = white_runs(w, b.direction);
  const auto run = std::find_if(runs.begin(), runs.end(),
                                [&](const KeyRange& r) { return r.contains(b.key); });
  if (run == runs.end()) {
    throw PreconditionError("row " + std::to_string(b.key) + " of direction " +
                            std::to_string(index_of(b.direction)) + " is not a bad row");
  }
  std::size_t moved = 0;
  return shift_side(w, b.direction, b.key, Side::above,
                    closing_shift(b.direction, j, run->length()), moved);
}

NormalizationResult normalize(const VertexSet& w) {
  require_nonempty(w, "normalize");
  const auto l = gray_row_counts(w);
  const int cap = static_cast<int>(4 * (l[0] + l[1] + l[2] + static_cast<std::int64_t>(w.size())));

  NormalizationResult result{w, {}};
  VertexSet& cur = result.set;
  NormalizationTrace& trace = result.trace;
  while (has_bad_rows(cur)) {
    if (++trace.iterations > cap) {
      throw NonTerminationError("normalization exceeded " + std::to_string(cap) + " passes");
    }
    while (!white_runs(cur, Direction::d1).empty()) {
      cur = close_lowest_run(cur, Direction::d1, Direction::d2, trace);
    }
    while (!white_runs(cur, Direction::d2).empty()) {
      cur = close_lowest_run(cur, Direction::d2, Direction::d1, trace);
    }
    trace.potential_history.push_back(potential(cur));
    const Parallelogram p = parallelogram(cur);
    while (!white_runs(cur, Direction::d3).empty()) {
      cur = close_direction3_row(cur, p, trace);
    }
  }
  return result;
}

VertexSet replay(const VertexSet& w, const NormalizationTrace& trace) {
  VertexSet cur = w;
  for (const NormalizationStep& step : trace.steps) {
    const Direction d = step.row.direction;
    const Vertex origin{0, 0};
    const RowKey delta = row_key(origin + step.shift, d) - row_key(origin, d);
    std::size_t moved = 0;
    cur = shift_side(cur, d, step.row.key, delta < 0 ? Side::above : Side::below, step.shift,
                     moved);
  }
  return cur;
}

}  // namespace hexiso
