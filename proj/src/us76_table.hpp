#pragma once

#include <array>
#include <cstddef>

namespace desurv::detail {

struct Us76Row {
  double altitude_km;
  double temperature;
  double pressure;
  double density;
};

inline constexpr std::size_t kUs76UpperRows = 458;
extern const std::array<Us76Row, kUs76UpperRows> kUs76Upper;

}  // namespace desurv::detail
