#include "semgrid/metrics.hpp"

#include <cmath>

#include "semgrid/common.hpp"
#include "semgrid/kernels/kernels.hpp"

namespace semgrid {
namespace {

constexpr ClassId kUnknown = static_cast<ClassId>(Class::Unknown);

void require_same_geometry(const GridGeometry& a, const GridGeometry& b, const char* what) {
    if (a.width != b.width || a.height != b.height)
        throw DataError(std::string("grid geometry mismatch in ") + what);
}

}  // namespace

std::vector<std::uint8_t> known_mask(const SemanticGrid& grid) {
    std::vector<std::uint8_t> out(grid.cells.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = grid.cells[i] != kUnknown;
    return out;
}

LossMask loss_mask(const SemanticGrid& target, std::span<const SemanticGrid* const> inputs,
                   int bottom_exclude) {
    LossMask m;
    m.width = target.geom.width;
    m.height = target.geom.height;
    m.target_known = known_mask(target);
    m.covered = m.target_known;
    for (const SemanticGrid* g : inputs) {
        require_same_geometry(target.geom, g->geom, "loss_mask");
        for (std::size_t i = 0; i < m.covered.size(); ++i) {
            if (g->cells[i] != kUnknown) m.covered[i] = 1;
        }
    }
    m.mask.resize(m.covered.size());
    for (std::size_t i = 0; i < m.mask.size(); ++i) {
        m.mask[i] = m.covered[i] && !m.target_known[i];
    }
    // A deployable system always scores the rows right at the vehicle, where
    // targets never carry ground truth; disabled by default.
    const int first_forced = m.height - bottom_exclude;
    for (int row = std::max(0, first_forced); row < m.height; ++row) {
        for (int col = 0; col < m.width; ++col) {
            m.mask[static_cast<std::size_t>(row) * m.width + col] = 0;
        }
    }
    return m;
}

MaskedCrossEntropy masked_cross_entropy(const ProbabilisticGrid& pred,
                                        const SemanticGrid& target, const LossMask& mask) {
    require_same_geometry(pred.geom, target.geom, "masked_cross_entropy");
    if (mask.width != pred.geom.width || mask.height != pred.geom.height)
        throw DataError("loss mask geometry mismatch in masked_cross_entropy");

    const std::size_t ps = pred.plane_size();
    for (std::size_t i = 0; i < ps; ++i) {
        double s = 0.0;
        for (int c = 0; c < pred.features; ++c) s += pred.values[c * ps + i];
        if (std::abs(s - 1.0) > 1e-4)
            throw DataError("prediction is not softmax-normalized");
    }

    MaskedCrossEntropy out;
    out.grad.assign(pred.values.size(), 0.0);
    const double inv_cells = 1.0 / static_cast<double>(ps);
    double loss = 0.0;
    for (std::size_t i = 0; i < ps; ++i) {
        if (mask.mask[i]) continue;  // substituted by ground truth: zero term
        const ClassId cls = target.cells[i];
        const double p = pred.values[static_cast<std::size_t>(cls) * ps + i];
        loss -= std::log(std::max(p, 1e-300)) * inv_cells;
        out.grad[static_cast<std::size_t>(cls) * ps + i] = -inv_cells / std::max(p, 1e-300);
    }
    out.loss = loss;
    return out;
}

std::array<std::optional<double>, kNumClasses> class_iou(const SemanticGrid& pred,
                                                         const SemanticGrid& target,
                                                         const LossMask& mask) {
    IouAccumulator acc;
    acc.add(pred, target, mask);
    return acc.per_class();
}

void IouAccumulator::add(const SemanticGrid& pred, const SemanticGrid& target,
                         const LossMask& mask) {
    require_same_geometry(pred.geom, target.geom, "class_iou");
    for (std::size_t i = 0; i < pred.cells.size(); ++i) {
        if (mask.mask[i]) continue;
        const ClassId p = pred.cells[i], t = target.cells[i];
        if (p == t) {
            ++intersection_[p];
            ++union_[p];
        } else {
            ++union_[p];
            ++union_[t];
        }
    }
}

std::array<std::optional<double>, kNumClasses> IouAccumulator::per_class() const {
    std::array<std::optional<double>, kNumClasses> out;
    for (int c = 0; c < kNumClasses; ++c) {
        if (union_[c] > 0) {
            out[c] = static_cast<double>(intersection_[c]) / static_cast<double>(union_[c]);
        }
    }
    return out;
}

std::array<std::optional<double>, kNumCategories> category_miou(
    const std::array<std::optional<double>, kNumClasses>& per_class) {
    std::array<std::optional<double>, kNumCategories> out;
    for (int cat = 0; cat < kNumCategories; ++cat) {
        double sum = 0.0;
        int n = 0;
        for (ClassId c = 0; c < kNumClasses; ++c) {
            if (category_priority(c) == cat && per_class[c]) {
                sum += *per_class[c];
                ++n;
            }
        }
        if (n > 0) out[cat] = sum / n;
    }
    return out;
}

std::optional<double> mean_iou(const std::array<std::optional<double>, kNumClasses>& per_class) {
    double sum = 0.0;
    int n = 0;
    for (const auto& v : per_class) {
        if (v) {
            sum += *v;
            ++n;
        }
    }
    if (n == 0) return std::nullopt;
    return sum / n;
}

std::vector<double> certainty_map(const ProbabilisticGrid& pred) {
    const std::size_t ps = pred.plane_size();
    std::vector<double> out(pred.plane(0), pred.plane(0) + ps);
    const auto& k = kernels::active();
    for (int c = 1; c < pred.features; ++c) k.emax(pred.plane(c), out.data(), ps);
    return out;
}

}  // namespace semgrid
