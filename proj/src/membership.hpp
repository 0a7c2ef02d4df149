#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "hexiso/hexgrid.hpp"

namespace hexiso::detail {

// Membership test over a sorted vertex span. Uses a bounding-box bitmap when
// the box is not much larger than the set, binary search otherwise.
class Membership {
 public:
  explicit Membership(std::span<const Vertex> sorted) : sorted_(sorted) {
    if (sorted.empty()) return;
    Coord min_y = sorted.front().y, max_y = min_y;
    for (Vertex v : sorted) {
      min_y = std::min(min_y, v.y);
      max_y = std::max(max_y, v.y);
    }
    min_x_ = sorted.front().x;
    min_y_ = min_y;
    width_ = static_cast<std::int64_t>(sorted.back().x) - min_x_ + 1;
    height_ = static_cast<std::int64_t>(max_y) - min_y + 1;
    const std::int64_t area = width_ * height_;
    if (area <= std::max<std::int64_t>(4096, 16 * static_cast<std::int64_t>(sorted.size()))) {
      bits_.assign(static_cast<std::size_t>(area), 0);
      for (Vertex v : sorted) bits_[index(v)] = 1;
    }
  }

  bool contains(Vertex v) const {
    if (sorted_.empty()) return false;
    if (!bits_.empty()) {
      const std::int64_t dx = static_cast<std::int64_t>(v.x) - min_x_;
      const std::int64_t dy = static_cast<std::int64_t>(v.y) - min_y_;
      if (dx < 0 || dy < 0 || dx >= width_ || dy >= height_) return false;
      return bits_[index(v)] != 0;
    }
    return std::binary_search(sorted_.begin(), sorted_.end(), v);
  }

 private:
  std::size_t index(Vertex v) const {
    return static_cast<std::size_t>((static_cast<std::int64_t>(v.y) - min_y_) * width_ +
                                    (static_cast<std::int64_t>(v.x) - min_x_));
  }

  std::span<const Vertex> sorted_;
  std::int64_t min_x_ = 0, min_y_ = 0, width_ = 0, height_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace hexiso::detail
