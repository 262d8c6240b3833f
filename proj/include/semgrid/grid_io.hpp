#pragma once

#include <filesystem>

#include "semgrid/grid.hpp"

namespace semgrid {

// Binary grid file, little-endian:
//   magic "SGRD", u16 version (=1), u16 width, u16 height, f32 cell_size,
//   u16 agent_col, u16 agent_row, f64 timestamp, then width*height class-id
//   bytes row-major.
inline constexpr std::uint16_t kGridFormatVersion = 1;

void write_grid(const SemanticGrid& grid, const std::filesystem::path& path);

// Throws DataError on bad magic/version ("corrupt header") or when the byte
// count does not match the header ("size mismatch").
SemanticGrid read_grid(const std::filesystem::path& path);

}  // namespace semgrid
