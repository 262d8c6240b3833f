#pragma once

#include "semgrid/egomotion.hpp"
#include "semgrid/grid.hpp"
#include "semgrid/projection.hpp"

namespace semgrid {

// Rotates every point by alpha (classes untouched).
SemanticPointCloud rotate_pointcloud(const SemanticPointCloud& cloud, double alpha);

// Nearest-cell rasterization. Cell collisions are won by the class with the
// highest category priority, ties within a category by the higher class id,
// equal classes by the later point. Out-of-bounds points are dropped; cells
// nobody claims stay `unknown`.
SemanticGrid discretize(const SemanticPointCloud& cloud, const GridGeometry& geom);

// Integer cell shift by round(q / cell_size); vacated cells become unknown.
// Positive q.z moves grid content toward higher rows (the world slides past
// the agent as it drives forward).
SemanticGrid translate_grid(const SemanticGrid& grid, Vec2 q_meters);

SemanticGrid translate_grid_cells(const SemanticGrid& grid, int shift_cols, int shift_rows_z);

}  // namespace semgrid
