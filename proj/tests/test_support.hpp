#pragma once

#include <array>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "h3sep/io.hpp"

namespace h3sep::testing {

inline constexpr std::array<double, 4> kTableAngles{
    std::numbers::pi / 2.0, std::numbers::pi / 6.0, std::numbers::pi / 3.0,
    std::numbers::pi / 8.0};

inline std::filesystem::path data_dir() { return H3SEP_TEST_DATA_DIR; }

inline std::vector<std::pair<double, double>> reference_rows(double alpha) {
  return io::read_reference_table(data_dir() / io::reference_table_name(alpha));
}

inline double relative_error(double value, double reference) {
  const double scale = std::abs(reference) > 0.0 ? std::abs(reference) : 1.0;
  return std::abs(value - reference) / scale;
}

}  // namespace h3sep::testing
