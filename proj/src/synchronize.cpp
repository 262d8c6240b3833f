#include "semgrid/synchronize.hpp"

#include "semgrid/common.hpp"

namespace semgrid {

SemanticGrid build_aligned_grid(const ObservedFrame& frame, const EgomotionTrack& track,
                                double t0, const SyncOptions& options) {
    SemanticPointCloud cloud =
        project_to_pointcloud(*frame.image, *frame.depth, *frame.camera, frame.t);
    const double alpha = integrate_orientation(track, t0, frame.t);
    if (alpha != 0.0) cloud = rotate_pointcloud(cloud, alpha);
    SemanticGrid grid = discretize(cloud, options.geom);
    return morphological_filter(grid, options.morphology);
}

std::vector<SemanticGrid> synchronize_sequence(std::span<const ObservedFrame> frames,
                                               const EgomotionTrack& track, double tau,
                                               const SyncOptions& options) {
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (frames[i].t > tau) throw ConfigError("frame time after synchronization target");
        if (i > 0 && frames[i].t < frames[i - 1].t)
            throw ConfigError("frame times must be non-decreasing");
    }

    std::vector<SemanticGrid> out(frames.size());
    if (frames.empty()) return out;
    const double t0 = frames.front().t;
    // Fail before the parallel section: workers must not throw.
    integrate_orientation(track, t0, tau);
    parallel_for(frames.size(), [&](std::size_t i) {
        SemanticGrid grid = build_aligned_grid(frames[i], track, t0, options);
        if (options.translate) {
            grid = translate_grid(grid, integrate_translation(track, frames[i].t, tau));
        }
        out[i] = std::move(grid);
    });
    return out;
}

}  // namespace semgrid
