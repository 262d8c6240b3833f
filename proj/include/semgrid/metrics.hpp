#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "semgrid/grid.hpp"

namespace semgrid {

// Cells excluded from loss and IoU: seen by some input frame but without
// ground truth in the target. Stored with its provenance masks.
struct LossMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> mask;      // 1 = ignored
    std::vector<std::uint8_t> covered;   // union of known() over target + inputs
    std::vector<std::uint8_t> target_known;

    bool ignored(int col, int row) const {
        return mask[static_cast<std::size_t>(row) * width + col] != 0;
    }
};

// 1 where the cell is classified (not `unknown`).
std::vector<std::uint8_t> known_mask(const SemanticGrid& grid);

// mask = covered AND NOT known(target); the bottom `bottom_exclude` rows are
// forced to score (removed from the mask). Throws DataError on geometry
// mismatch between target and inputs.
LossMask loss_mask(const SemanticGrid& target, std::span<const SemanticGrid* const> inputs,
                   int bottom_exclude = 0);

struct MaskedCrossEntropy {
    double loss = 0.0;
    // d(loss)/d(pred), same per-class plane layout as ProbabilisticGrid
    // values; exactly zero at masked cells.
    std::vector<double> grad;
};

// Mean per-cell categorical cross-entropy with masked cells substituted by
// the ground truth, so they contribute exactly zero loss and gradient. The
// mean is taken over all cells. Throws DataError if geometries differ or any
// cell's class scores deviate from sum 1 by more than 1e-4.
MaskedCrossEntropy masked_cross_entropy(const ProbabilisticGrid& pred,
                                        const SemanticGrid& target, const LossMask& mask);

// Per-class intersection over union on non-masked cells; classes whose union
// is empty are absent from the result.
std::array<std::optional<double>, kNumClasses> class_iou(const SemanticGrid& pred,
                                                         const SemanticGrid& target,
                                                         const LossMask& mask);

// Unweighted mean over the present member classes of each category.
std::array<std::optional<double>, kNumCategories> category_miou(
    const std::array<std::optional<double>, kNumClasses>& per_class);

// Mean of the present per-class IoUs.
std::optional<double> mean_iou(const std::array<std::optional<double>, kNumClasses>& per_class);

// Per-cell maximum class score.
std::vector<double> certainty_map(const ProbabilisticGrid& pred);

// Pools intersection/union counts over many (pred, target, mask) triples so
// reported IoUs are global, not per-sequence averages.
class IouAccumulator {
public:
    void add(const SemanticGrid& pred, const SemanticGrid& target, const LossMask& mask);
    std::array<std::optional<double>, kNumClasses> per_class() const;

private:
    std::array<std::uint64_t, kNumClasses> intersection_{};
    std::array<std::uint64_t, kNumClasses> union_{};
};

}  // namespace semgrid
