#include "semgrid/projection.hpp"

#include <string>

#include "semgrid/common.hpp"

namespace semgrid {

void validate_camera(const CameraModel& cam) {
    if (!(cam.fx > 0.0) || !(cam.fy > 0.0))
        throw ConfigError("camera focal lengths must be positive");
    const Mat3 r = cam.rotation();
    const Mat3 rt = r.transposed();
    // R * R^T == I within 1e-9.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 3; ++k) dot += r.m[i * 3 + k] * rt.m[k * 3 + j];
            const double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(dot - expect) > 1e-9)
                throw ConfigError("camera rotation is not orthonormal");
        }
    }
}

Vec3 pixel_to_agent(const CameraModel& cam, double u, double v, double depth) {
    const Vec3 ray = cam.ray(u, v);
    const Vec3 p = cam.rotation() * Vec3{ray.x * depth, ray.y * depth, ray.z * depth};
    const Vec3 t = cam.translation();
    return {p.x + t.x, p.y + t.y, p.z + t.z};
}

SemanticPointCloud project_to_pointcloud(const SemanticImage& image, const DepthMap& depth,
                                         const CameraModel& cam, double timestamp) {
    if (image.width != depth.width || image.height != depth.height) {
        throw DataError("semantic image and depth map dimensions differ: " +
                        std::to_string(image.width) + "x" + std::to_string(image.height) +
                        " vs " + std::to_string(depth.width) + "x" + std::to_string(depth.height));
    }

    // The rotation and translation are fixed per image; keep them out of the
    // pixel loop.
    const Mat3 r = cam.rotation();
    const Vec3 t = cam.translation();

    SemanticPointCloud cloud;
    cloud.timestamp = timestamp;
    cloud.points.reserve(static_cast<std::size_t>(image.width) * image.height);
    for (int v = 0; v < image.height; ++v) {
        for (int u = 0; u < image.width; ++u) {
            const ClassId cls = image.at(u, v);
            if (!is_valid_class(cls)) continue;
            const double d = depth.at(u, v);
            if (!depth_valid(d)) continue;
            if (!cam.in_crop(u, v)) continue;
            const Vec3 ray = cam.ray(u, v);
            const double cx = ray.x * d, cy = ray.y * d, cz = d;
            const double ax = r.m[0] * cx + r.m[1] * cy + r.m[2] * cz + t.x;
            const double az = r.m[6] * cx + r.m[7] * cy + r.m[8] * cz + t.z;
            // The y (height) component is dropped: points live on the ground plane.
            cloud.points.push_back({ax, az, cls});
        }
    }
    return cloud;
}

}  // namespace semgrid
