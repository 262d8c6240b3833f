#include "semgrid/png.hpp"

#include <png.h>

#include <algorithm>
#include <cstdio>

#include "semgrid/common.hpp"

namespace semgrid {

void write_png(const RgbImage& img, const std::filesystem::path& path) {
    FILE* fp = std::fopen(path.string().c_str(), "wb");
    if (!fp) throw DataError("cannot open PNG for writing: " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        if (png) png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        throw DataError("libpng initialization failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        throw DataError("libpng write failed: " + path.string());
    }

    png_init_io(png, fp);
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(static_cast<std::size_t>(img.height));
    for (int y = 0; y < img.height; ++y) {
        rows[y] = const_cast<png_bytep>(&img.pixels[static_cast<std::size_t>(y) * img.width * 3]);
    }
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

RgbImage grid_to_rgb(const SemanticGrid& grid, const std::vector<std::uint8_t>* mask) {
    RgbImage img(grid.geom.width, grid.geom.height);
    for (int row = 0; row < grid.geom.height; ++row) {
        for (int col = 0; col < grid.geom.width; ++col) {
            const std::size_t i = static_cast<std::size_t>(row) * grid.geom.width + col;
            if (mask && (*mask)[i]) {
                img.set(col, row, {255, 255, 255});
            } else {
                img.set(col, row, class_info(grid.cells[i]).color);
            }
        }
    }
    return img;
}

RgbImage scalar_to_rgb(const std::vector<double>& values, int width, int height) {
    RgbImage img(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double v = std::clamp(values[static_cast<std::size_t>(y) * width + x], 0.0, 1.0);
            const auto g = static_cast<std::uint8_t>(std::lround(v * 255.0));
            img.set(x, y, {g, g, g});
        }
    }
    return img;
}

RgbImage hstack(const std::vector<RgbImage>& panels, int gap) {
    int width = 0, height = 0;
    for (const auto& p : panels) {
        width += p.width;
        height = std::max(height, p.height);
    }
    width += gap * std::max<int>(0, static_cast<int>(panels.size()) - 1);
    RgbImage out(width, height);
    int x0 = 0;
    for (const auto& p : panels) {
        for (int y = 0; y < p.height; ++y) {
            for (int x = 0; x < p.width; ++x) {
                const std::uint8_t* px = &p.pixels[(static_cast<std::size_t>(y) * p.width + x) * 3];
                out.set(x0 + x, y, {px[0], px[1], px[2]});
            }
        }
        x0 += p.width + gap;
    }
    return out;
}

void render_png(const SemanticGrid& grid, const std::filesystem::path& path) {
    write_png(grid_to_rgb(grid), path);
}

void render_png(const ProbabilisticGrid& grid, const std::filesystem::path& path) {
    write_png(grid_to_rgb(grid.argmax()), path);
}

}  // namespace semgrid
