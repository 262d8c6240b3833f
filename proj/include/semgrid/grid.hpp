#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

#include "semgrid/classes.hpp"

namespace semgrid {

// Cell geometry of an egocentric grid. Row 0 is the far edge ahead of the
// agent, z grows toward row 0, x grows with the column index.
struct GridGeometry {
    int width = 0;
    int height = 0;
    double cell_size = 0.0;  // meters per cell
    int agent_col = 0;
    int agent_row = 0;

    static GridGeometry centered(int width, int height, double extent_m) {
        return {width, height, extent_m / width, width / 2, height / 2};
    }

    bool in_bounds(int col, int row) const {
        return col >= 0 && col < width && row >= 0 && row < height;
    }

    // Metric agent-frame coordinates -> cell indices (may be out of bounds).
    void cell_of(double x, double z, int* col, int* row) const {
        *col = agent_col + static_cast<int>(std::llround(x / cell_size));
        *row = agent_row - static_cast<int>(std::llround(z / cell_size));
    }

    // Center of a cell in metric agent-frame coordinates.
    void center_of(int col, int row, double* x, double* z) const {
        *x = (col - agent_col) * cell_size;
        *z = (agent_row - row) * cell_size;
    }

    bool operator==(const GridGeometry&) const = default;
};

// Argmax-collapsed semantic grid: one class id per cell, row-major.
struct SemanticGrid {
    GridGeometry geom;
    double timestamp = 0.0;
    std::vector<ClassId> cells;

    SemanticGrid() = default;
    explicit SemanticGrid(const GridGeometry& g, double t = 0.0, ClassId fill = 0)
        : geom(g), timestamp(t), cells(static_cast<std::size_t>(g.width) * g.height, fill) {}

    ClassId at(int col, int row) const {
        assert(geom.in_bounds(col, row));
        return cells[static_cast<std::size_t>(row) * geom.width + col];
    }
    ClassId& at(int col, int row) {
        assert(geom.in_bounds(col, row));
        return cells[static_cast<std::size_t>(row) * geom.width + col];
    }

    std::size_t size() const { return cells.size(); }

    bool operator==(const SemanticGrid&) const = default;
};

// Per-cell class scores, stored as per-class planes: values[c * W*H + cell].
struct ProbabilisticGrid {
    GridGeometry geom;
    double timestamp = 0.0;
    int features = kNumClasses;
    std::vector<double> values;

    ProbabilisticGrid() = default;
    explicit ProbabilisticGrid(const GridGeometry& g, double t = 0.0, int f = kNumClasses)
        : geom(g), timestamp(t), features(f),
          values(static_cast<std::size_t>(g.width) * g.height * f, 0.0) {}

    std::size_t plane_size() const { return static_cast<std::size_t>(geom.width) * geom.height; }
    double* plane(int c) { return values.data() + static_cast<std::size_t>(c) * plane_size(); }
    const double* plane(int c) const {
        return values.data() + static_cast<std::size_t>(c) * plane_size();
    }
    double at(int c, int col, int row) const {
        return plane(c)[static_cast<std::size_t>(row) * geom.width + col];
    }
    double& at(int c, int col, int row) {
        return plane(c)[static_cast<std::size_t>(row) * geom.width + col];
    }

    // Collapses to the highest-scoring class per cell (lowest id on ties).
    SemanticGrid argmax() const;
};

// Per-pixel class labels in image space; kInvalidLabel marks sky/unlabeled.
struct SemanticImage {
    int width = 0;
    int height = 0;
    std::vector<ClassId> labels;

    SemanticImage() = default;
    SemanticImage(int w, int h, ClassId fill = kInvalidLabel)
        : width(w), height(h), labels(static_cast<std::size_t>(w) * h, fill) {}

    ClassId at(int u, int v) const { return labels[static_cast<std::size_t>(v) * width + u]; }
    ClassId& at(int u, int v) { return labels[static_cast<std::size_t>(v) * width + u]; }
};

inline constexpr double kInvalidDepth = -1.0;

inline bool depth_valid(double d) { return std::isfinite(d) && d > 0.0; }

struct DepthMap {
    int width = 0;
    int height = 0;
    std::vector<double> depth;

    DepthMap() = default;
    DepthMap(int w, int h, double fill = kInvalidDepth)
        : width(w), height(h), depth(static_cast<std::size_t>(w) * h, fill) {}

    double at(int u, int v) const { return depth[static_cast<std::size_t>(v) * width + u]; }
    double& at(int u, int v) { return depth[static_cast<std::size_t>(v) * width + u]; }
};

}  // namespace semgrid
