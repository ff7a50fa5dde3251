#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "rlx/cube/cube_world.hpp"

namespace rlx {

// Top view of one cube: per (w, b) cell, the number of distinct depths that
// were visited at least once (0..depth).
std::vector<std::vector<int>> cube_top_view(const CubeConfig& config,
                                            std::span<const std::uint64_t> visits, int cube);

// Writes, per cube g, `cube<g>_top.csv` (top-view counts, one row per b,
// comma-separated over w) and `cube<g>_depth<d>.pgm` (P2 graymap, visited
// cells black, untouched cells white).
void write_heatmaps(const CubeConfig& config, std::span<const std::uint64_t> visits,
                    const std::filesystem::path& dir);

// visits_<agent>.csv round-trip: "g,w,b,d,count" rows for nonzero cells.
void write_visit_counts(const CubeConfig& config, std::span<const std::uint64_t> visits,
                        const std::filesystem::path& file);
std::vector<std::uint64_t> read_visit_counts(const CubeConfig& config,
                                             const std::filesystem::path& file);

}  // namespace rlx
