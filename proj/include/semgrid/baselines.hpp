#pragma once

#include <span>

#include "semgrid/alignment.hpp"

namespace semgrid {

// Replicates the last input grid as the prediction. Meant for grids built
// without the temporal translation step.
SemanticGrid bl_nt(std::span<const SemanticGrid> inputs);

// Translates the last (untranslated) input grid by the egomotion integrated
// from its capture time to the prediction time.
SemanticGrid bl_dc(std::span<const SemanticGrid> inputs, const EgomotionTrack& track,
                   double t_last, double tau);

// Per-cell sensor merge: the lower sensor wins unless it is unknown. Used to
// assemble the split-scenario baselines before translation.
SemanticGrid bl_overlay(const SemanticGrid& lower, const SemanticGrid& upper);

}  // namespace semgrid
