// Copyright 2026 The sslpred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sslpred/heatmap_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace sslpred {

std::string format_number(double v) {
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void write_heatmap_csv(const HeatmapGrid& grid, std::ostream& os) {
  os << "x,y,time_s\n";
  for (std::size_t iy = 0; iy < grid.ny; ++iy) {
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const double x = grid.origin.x + static_cast<double>(ix) * grid.cell_size;
      const double y = grid.origin.y + static_cast<double>(iy) * grid.cell_size;
      os << format_number(x) << ',' << format_number(y) << ','
         << format_number(grid.at(ix, iy)) << '\n';
    }
  }
}

namespace {

std::ofstream open_out(const std::string& path, std::ios::openmode mode) {
  std::ofstream os(path, mode);
  if (!os) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  return os;
}

}  // namespace

void write_heatmap_csv_file(const HeatmapGrid& grid, const std::string& path) {
  auto os = open_out(path, std::ios::out | std::ios::trunc);
  write_heatmap_csv(grid, os);
  if (!os.good()) {
    throw std::runtime_error("write failed: " + path);
  }
}

void write_heatmap_pgm_file(const HeatmapGrid& grid, const std::string& path) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : grid.values) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const bool have_finite = std::isfinite(lo) && hi >= lo;
  const double span = have_finite ? hi - lo : 0.0;

  auto os = open_out(path, std::ios::out | std::ios::trunc | std::ios::binary);
  os << "P5\n" << grid.nx << ' ' << grid.ny << "\n255\n";
  for (std::size_t iy = 0; iy < grid.ny; ++iy) {
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const double v = grid.at(ix, iy);
      unsigned char px;
      if (std::isinf(v)) {
        px = 255;
      } else if (!have_finite || span == 0.0) {
        px = 0;
      } else {
        px = static_cast<unsigned char>(
            std::lround(255.0 * (v - lo) / span));
      }
      os.put(static_cast<char>(px));
    }
  }
  if (!os.good()) {
    throw std::runtime_error("write failed: " + path);
  }

  auto meta = open_out(path + ".txt", std::ios::out | std::ios::trunc);
  meta << "format: P5, one byte per cell, row iy=0 first, ix increasing\n";
  meta << "origin_x_m: " << format_number(grid.origin.x) << '\n';
  meta << "origin_y_m: " << format_number(grid.origin.y) << '\n';
  meta << "cell_size_m: " << format_number(grid.cell_size) << '\n';
  if (have_finite) {
    meta << "min_time_s: " << format_number(lo) << " (pixel 0)\n";
    meta << "max_time_s: " << format_number(hi) << " (pixel 255)\n";
    meta << "pixel = round(255 * (time - min) / (max - min)); +inf -> 255\n";
  } else {
    meta << "no finite times; all cells +inf -> 255\n";
  }
  if (!meta.good()) {
    throw std::runtime_error("write failed: " + path + ".txt");
  }
}

}  // namespace sslpred
