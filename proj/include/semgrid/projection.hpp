#pragma once

#include <vector>

#include "semgrid/camera.hpp"
#include "semgrid/grid.hpp"

namespace semgrid {

struct GroundPoint {
    double x = 0.0;  // meters, lateral
    double z = 0.0;  // meters, forward
    ClassId cls = 0;
};

// Ground-plane projection of a semantic image: the height coordinate has been
// computed and discarded, points keep (x, z) and the pixel class.
struct SemanticPointCloud {
    double timestamp = 0.0;
    std::vector<GroundPoint> points;
};

// Agent-frame 3D point of pixel (u, v) at the given depth:
//   R * K^-1 * (u, v, 1) * depth + t
// Depth is the forward (z) distance in the camera frame, not the ray length.
Vec3 pixel_to_agent(const CameraModel& cam, double u, double v, double depth);

// One point per pixel with a valid class label, valid depth, and inside the
// camera crop (if any); pixel order is row-major. Throws DataError when the
// image and depth dimensions differ.
SemanticPointCloud project_to_pointcloud(const SemanticImage& image, const DepthMap& depth,
                                         const CameraModel& cam, double timestamp = 0.0);

}  // namespace semgrid
