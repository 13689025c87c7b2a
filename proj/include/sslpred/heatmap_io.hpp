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

#ifndef SSLPRED_HEATMAP_IO_HPP_
#define SSLPRED_HEATMAP_IO_HPP_

#include <iosfwd>
#include <string>

#include "sslpred/pursuit.hpp"

namespace sslpred {

/// Formats a double with 6 significant digits ("inf" for infinities).
std::string format_number(double v);

/// CSV with header `x,y,time_s`, one row per cell, row-major (iy outer).
void write_heatmap_csv(const HeatmapGrid& grid, std::ostream& os);
void write_heatmap_csv_file(const HeatmapGrid& grid, const std::string& path);

/// Binary PGM (P5). Finite times are mapped affinely to 0..255 (min -> 0,
/// max -> 255); +inf maps to 255. Row iy=0 is written first. The mapping is
/// described in a sidecar text file at `path` + ".txt".
void write_heatmap_pgm_file(const HeatmapGrid& grid, const std::string& path);

}  // namespace sslpred

#endif  // SSLPRED_HEATMAP_IO_HPP_
