#include "semgrid/alignment.hpp"

namespace semgrid {

SemanticPointCloud rotate_pointcloud(const SemanticPointCloud& cloud, double alpha) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    SemanticPointCloud out;
    out.timestamp = cloud.timestamp;
    out.points.reserve(cloud.points.size());
    for (const GroundPoint& p : cloud.points) {
        out.points.push_back({c * p.x - s * p.z, s * p.x + c * p.z, p.cls});
    }
    return out;
}

SemanticGrid discretize(const SemanticPointCloud& cloud, const GridGeometry& geom) {
    SemanticGrid grid(geom, cloud.timestamp);
    for (const GroundPoint& p : cloud.points) {
        int col, row;
        geom.cell_of(p.x, p.z, &col, &row);
        if (!geom.in_bounds(col, row)) continue;
        ClassId& cell = grid.at(col, row);
        if (!outranks(cell, p.cls)) cell = p.cls;
    }
    return grid;
}

SemanticGrid translate_grid_cells(const SemanticGrid& grid, int shift_cols, int shift_rows_z) {
    SemanticGrid out(grid.geom, grid.timestamp);
    const int w = grid.geom.width, h = grid.geom.height;
    for (int row = 0; row < h; ++row) {
        const int src_row = row - shift_rows_z;
        if (src_row < 0 || src_row >= h) continue;
        for (int col = 0; col < w; ++col) {
            const int src_col = col + shift_cols;
            if (src_col < 0 || src_col >= w) continue;
            out.at(col, row) = grid.at(src_col, src_row);
        }
    }
    return out;
}

SemanticGrid translate_grid(const SemanticGrid& grid, Vec2 q_meters) {
    const int sx = static_cast<int>(std::llround(q_meters.x / grid.geom.cell_size));
    const int sz = static_cast<int>(std::llround(q_meters.z / grid.geom.cell_size));
    return translate_grid_cells(grid, sx, sz);
}

}  // namespace semgrid
