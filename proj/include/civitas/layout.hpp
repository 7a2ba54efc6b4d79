#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "civitas/alcuin.hpp"
#include "civitas/geometry.hpp"

namespace civitas {

struct StageRecord {
  std::string name;
  std::int64_t count = 0;
  std::int64_t iterations = 0;
};

/// How a layout was produced. Not part of the file format.
struct Provenance {
  std::uint64_t seed = 0;
  std::int64_t budget_ms = 0;
  std::vector<StageRecord> stages;
};

struct Layout {
  ProblemInstance instance;
  std::vector<PlacedRect> houses;
  Provenance provenance;

  std::size_t count() const { return houses.size(); }
};

/// A house of the instance's size at the given pose, on the file grid.
inline PlacedRect make_house(const HouseDimensions& house, Point center, double theta) {
  return PlacedRect({quantize(center.x), quantize(center.y)}, house.length, house.width,
                    quantize_angle(theta));
}

}  // namespace civitas
