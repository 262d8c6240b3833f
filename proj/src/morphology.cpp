#include "semgrid/morphology.hpp"

#include <cassert>

namespace semgrid {
namespace {

// Offsets of a k-sized element around its anchor. Erosion scans these;
// dilation scans the reflected set so erode/dilate pairs do not drift for
// even k.
struct Element {
    int lo, hi;  // inclusive offsets
    explicit Element(int k) {
        const int anchor = (k - 1) / 2;
        lo = -anchor;
        hi = k - 1 - anchor;
    }
};

}  // namespace

BinaryMask binary_dilate(const BinaryMask& mask, int width, int height, int k) {
    if (k <= 1) return mask;
    const Element e(k);
    BinaryMask out(mask.size(), 0);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            std::uint8_t v = 0;
            // Reflected element: source offsets are negated.
            for (int dy = -e.hi; dy <= -e.lo && !v; ++dy) {
                const int sy = y + dy;
                if (sy < 0 || sy >= height) continue;
                for (int dx = -e.hi; dx <= -e.lo; ++dx) {
                    const int sx = x + dx;
                    if (sx < 0 || sx >= width) continue;
                    if (mask[static_cast<std::size_t>(sy) * width + sx]) {
                        v = 1;
                        break;
                    }
                }
            }
            out[static_cast<std::size_t>(y) * width + x] = v;
        }
    }
    return out;
}

BinaryMask binary_erode(const BinaryMask& mask, int width, int height, int k) {
    if (k <= 1) return mask;
    const Element e(k);
    BinaryMask out(mask.size(), 0);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            std::uint8_t v = 1;
            for (int dy = e.lo; dy <= e.hi && v; ++dy) {
                const int sy = y + dy;
                if (sy < 0 || sy >= height) {
                    v = 0;
                    break;
                }
                for (int dx = e.lo; dx <= e.hi; ++dx) {
                    const int sx = x + dx;
                    if (sx < 0 || sx >= width ||
                        !mask[static_cast<std::size_t>(sy) * width + sx]) {
                        v = 0;
                        break;
                    }
                }
            }
            out[static_cast<std::size_t>(y) * width + x] = v;
        }
    }
    return out;
}

SemanticGrid morphological_filter(const SemanticGrid& grid, const MorphologyProfile& profile) {
    const int w = grid.geom.width, h = grid.geom.height;
    SemanticGrid out(grid.geom, grid.timestamp);

    // Class ids already ascend within each category, so walking categories in
    // priority order and classes in id order gives the paint order directly.
    for (ClassId cls = 1; cls < kNumClasses; ++cls) {
        const auto& k = profile.for_category(category_of(cls));
        BinaryMask mask(grid.cells.size(), 0);
        bool any = false;
        for (std::size_t i = 0; i < grid.cells.size(); ++i) {
            if (grid.cells[i] == cls) {
                mask[i] = 1;
                any = true;
            }
        }
        if (!any) continue;
        mask = binary_dilate(mask, w, h, k[0]);
        mask = binary_erode(mask, w, h, k[1]);
        mask = binary_erode(mask, w, h, k[2]);
        mask = binary_dilate(mask, w, h, k[3]);
        for (std::size_t i = 0; i < mask.size(); ++i) {
            if (mask[i]) out.cells[i] = cls;
        }
    }
    return out;
}

}  // namespace semgrid
