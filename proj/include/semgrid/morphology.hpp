#pragma once

#include <array>
#include <vector>

#include "semgrid/grid.hpp"

namespace semgrid {

using BinaryMask = std::vector<std::uint8_t>;

// Square structuring element of size k; the anchor sits at floor((k-1)/2).
// Cells outside the grid count as background. Size 1 is the identity.
BinaryMask binary_dilate(const BinaryMask& mask, int width, int height, int k);
BinaryMask binary_erode(const BinaryMask& mask, int width, int height, int k);

// Kernel sizes of the four-step dilate/erode/erode/dilate noise filter,
// per category.
struct MorphologyProfile {
    std::array<std::array<int, 4>, kNumCategories> kernels;

    static MorphologyProfile identity() {
        return {{{{{1, 1, 1, 1}}, {{1, 1, 1, 1}}, {{1, 1, 1, 1}}, {{1, 1, 1, 1}}}}};
    }

    // Large static surfaces get the aggressive profile that closes sparsely
    // sampled areas at long range; everything else gets the light one.
    static MorphologyProfile default_profile() {
        return {{{{{3, 2, 4, 4}}, {{1, 1, 2, 2}}, {{1, 1, 2, 2}}, {{1, 1, 2, 2}}}}};
    }

    const std::array<int, 4>& for_category(Category c) const {
        return kernels[static_cast<int>(c)];
    }
};

// Runs dilate(k1), erode(k2), erode(k3), dilate(k4) on each class's binary
// mask and recomposes the results in ascending (category priority, class id)
// order, so higher-priority classes paint last. Unclaimed cells are unknown.
SemanticGrid morphological_filter(const SemanticGrid& grid, const MorphologyProfile& profile);

}  // namespace semgrid
