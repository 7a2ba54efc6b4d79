#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "civitas/geometry.hpp"

namespace civitas {

/// Uniform grid bucketing items by the cell of their centre. With the cell
/// size at least the largest item diameter, any two intersecting items sit in
/// the same or adjacent cells.
class SpatialGrid {
 public:
  explicit SpatialGrid(double cell_size) : cell_(cell_size) {}

  double cell_size() const { return cell_; }

  void insert(std::size_t id, Point p) { cells_[key(cell_of(p.x), cell_of(p.y))].push_back(id); }

  void erase(std::size_t id, Point p) {
    auto it = cells_.find(key(cell_of(p.x), cell_of(p.y)));
    if (it == cells_.end()) return;
    auto& v = it->second;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == id) {
        v[i] = v.back();
        v.pop_back();
        break;
      }
    }
    if (v.empty()) cells_.erase(it);
  }

  /// Ids whose centres fall in cells overlapping [lo, hi].
  template <class Fn>
  void for_each_in(Point lo, Point hi, Fn&& fn) const {
    const std::int64_t x0 = cell_of(lo.x), x1 = cell_of(hi.x);
    const std::int64_t y0 = cell_of(lo.y), y1 = cell_of(hi.y);
    for (std::int64_t cy = y0; cy <= y1; ++cy) {
      for (std::int64_t cx = x0; cx <= x1; ++cx) {
        auto it = cells_.find(key(cx, cy));
        if (it == cells_.end()) continue;
        for (std::size_t id : it->second) fn(id);
      }
    }
  }

  std::vector<std::size_t> query(Point lo, Point hi) const {
    std::vector<std::size_t> out;
    for_each_in(lo, hi, [&](std::size_t id) { out.push_back(id); });
    return out;
  }

  /// Calls fn(cell, neighbour) for every cell and each of its neighbours in
  /// the forward half of the 3x3 block (itself included), so every adjacent
  /// pair of cells is visited exactly once.
  template <class Fn>
  void for_each_cell_pair(Fn&& fn) const {
    static constexpr int kForward[5][2] = {{0, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}};
    for (const auto& [k, ids] : cells_) {
      const std::int64_t cx = static_cast<std::int32_t>(k >> 32);
      const std::int64_t cy = static_cast<std::int32_t>(k & 0xffffffffu);
      for (const auto& off : kForward) {
        auto it = cells_.find(key(cx + off[0], cy + off[1]));
        if (it == cells_.end()) continue;
        fn(ids, it->second, off[0] == 0 && off[1] == 0);
      }
    }
  }

 private:
  std::int64_t cell_of(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }
  static std::uint64_t key(std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx)) << 32) |
           static_cast<std::uint32_t>(cy);
  }

  double cell_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

}  // namespace civitas
