#pragma once

#include <span>

#include "semgrid/alignment.hpp"
#include "semgrid/morphology.hpp"

namespace semgrid {

// One camera observation to synchronize.
struct ObservedFrame {
    const SemanticImage* image = nullptr;
    const DepthMap* depth = nullptr;
    const CameraModel* camera = nullptr;
    double t = 0.0;
};

struct SyncOptions {
    GridGeometry geom;
    MorphologyProfile morphology = MorphologyProfile::default_profile();
    // Disables the temporal translation step; the grids stay at their capture
    // position and only orientation alignment is applied.
    bool translate = true;
};

// Transforms each frame to the common future time tau:
//   project -> rotate(alpha[t1 -> ti]) -> discretize -> filter
//   -> translate(q[ti -> tau])
// The orientation reference is the first frame's time. Frame times must be
// non-decreasing and not after tau.
std::vector<SemanticGrid> synchronize_sequence(std::span<const ObservedFrame> frames,
                                               const EgomotionTrack& track, double tau,
                                               const SyncOptions& options);

// Single-frame version: returns the aligned, filtered, untranslated grid
// g(ti) rotated by alpha[t0 -> ti].
SemanticGrid build_aligned_grid(const ObservedFrame& frame, const EgomotionTrack& track,
                                double t0, const SyncOptions& options);

}  // namespace semgrid
