#pragma once

#include <filesystem>
#include <vector>

#include "semgrid/grid.hpp"

namespace semgrid {

struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // RGB, row-major

    RgbImage() = default;
    RgbImage(int w, int h, Rgb fill = {255, 255, 255})
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3) {
        for (std::size_t i = 0; i < pixels.size(); i += 3) {
            pixels[i] = fill.r;
            pixels[i + 1] = fill.g;
            pixels[i + 2] = fill.b;
        }
    }

    void set(int x, int y, Rgb c) {
        std::uint8_t* p = &pixels[(static_cast<std::size_t>(y) * width + x) * 3];
        p[0] = c.r;
        p[1] = c.g;
        p[2] = c.b;
    }
};

void write_png(const RgbImage& img, const std::filesystem::path& path);

// One pixel per cell using the class palette. Cells where `mask` is true are
// drawn white (used to visualize the loss mask on target panels).
RgbImage grid_to_rgb(const SemanticGrid& grid, const std::vector<std::uint8_t>* mask = nullptr);

// Grayscale map of per-cell values in [0,1].
RgbImage scalar_to_rgb(const std::vector<double>& values, int width, int height);

// Horizontal montage with a white gap between panels.
RgbImage hstack(const std::vector<RgbImage>& panels, int gap = 2);

void render_png(const SemanticGrid& grid, const std::filesystem::path& path);
void render_png(const ProbabilisticGrid& grid, const std::filesystem::path& path);

}  // namespace semgrid
