#pragma once

#include <array>
#include <cmath>
#include <optional>

namespace semgrid {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

struct Mat3 {
    // Row-major.
    std::array<double, 9> m{};

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    Mat3 transposed() const {
        return {{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
    }
};

// Half-open pixel rectangle [u0,u1) x [v0,v1) of a virtual sensor crop.
struct CropRect {
    int u0 = 0, v0 = 0, u1 = 0, v1 = 0;

    bool contains(int u, int v) const { return u >= u0 && u < u1 && v >= v0 && v < v1; }
    bool operator==(const CropRect&) const = default;
};

// Pinhole camera with pose relative to the agent frame (x right, y down,
// z forward; the ground plane is y = 0 with the camera above it at y < 0).
struct CameraModel {
    double fx = 1.0, fy = 1.0;  // focal lengths, pixels
    double u0 = 0.0, v0 = 0.0;  // principal point, pixels
    double yaw = 0.0, pitch = 0.0, roll = 0.0;  // extrinsic rotation, radians
    double tx = 0.0, ty = 0.0, tz = 0.0;        // camera center in agent frame, meters
    std::optional<CropRect> crop;

    // Camera-to-agent rotation assembled from yaw/pitch/roll:
    //   | cy*cp  cy*sp*sr - sy*cr  cy*sp*cr + sy*sr |
    //   | sy*cp  sy*sp*sr + cy*cr  sy*sp*cr - cy*sr |
    //   | -sp    cp*sr             cp*cr            |
    Mat3 rotation() const {
        const double sy = std::sin(yaw), cy = std::cos(yaw);
        const double sp = std::sin(pitch), cp = std::cos(pitch);
        const double sr = std::sin(roll), cr = std::cos(roll);
        return {{cy * cp, cy * sp * sr - sy * cr, cy * sp * cr + sy * sr,
                 sy * cp, sy * sp * sr + cy * cr, sy * sp * cr - cy * sr,
                 -sp, cp * sr, cp * cr}};
    }

    Vec3 translation() const { return {tx, ty, tz}; }

    // K^-1 * (u, v, 1): the camera-frame ray with unit forward component.
    Vec3 ray(double u, double v) const {
        return {(u - u0) / fx, (v - v0) / fy, 1.0};
    }

    bool in_crop(int u, int v) const { return !crop || crop->contains(u, v); }
};

// Throws ConfigError if focal lengths are not positive or the assembled
// rotation is not orthonormal within 1e-9.
void validate_camera(const CameraModel& cam);

}  // namespace semgrid
