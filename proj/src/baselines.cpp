#include "semgrid/baselines.hpp"

#include "semgrid/common.hpp"

namespace semgrid {

SemanticGrid bl_nt(std::span<const SemanticGrid> inputs) {
    if (inputs.empty()) throw DataError("bl_nt needs at least one input grid");
    return inputs.back();
}

SemanticGrid bl_dc(std::span<const SemanticGrid> inputs, const EgomotionTrack& track,
                   double t_last, double tau) {
    if (inputs.empty()) throw DataError("bl_dc needs at least one input grid");
    return translate_grid(inputs.back(), integrate_translation(track, t_last, tau));
}

SemanticGrid bl_overlay(const SemanticGrid& lower, const SemanticGrid& upper) {
    if (lower.geom.width != upper.geom.width || lower.geom.height != upper.geom.height)
        throw DataError("bl_overlay grids have mismatched geometry");
    SemanticGrid out = lower;
    for (std::size_t i = 0; i < out.cells.size(); ++i) {
        if (out.cells[i] == static_cast<ClassId>(Class::Unknown)) out.cells[i] = upper.cells[i];
    }
    return out;
}

}  // namespace semgrid
