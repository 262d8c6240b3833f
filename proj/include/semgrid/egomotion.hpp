#pragma once

#include <vector>

#include "semgrid/camera.hpp"

namespace semgrid {

struct Vec2 {
    double x = 0.0, z = 0.0;
};

// One egomotion measurement: yaw rate and agent-frame velocity, valid from
// this sample's time until the next sample.
struct EgoSample {
    double t = 0.0;
    double yaw_rate = 0.0;  // rad/s, positive rotates x toward z (Rot2 below)
    double vx = 0.0;        // m/s, lateral
    double vz = 0.0;        // m/s, forward
};

struct EgomotionTrack {
    std::vector<EgoSample> samples;
};

// Throws ConfigError unless timestamps are strictly increasing.
void validate_track(const EgomotionTrack& track);

// Left-Riemann integral of the yaw rate over [t0, ti]; each sample's rate
// holds until the next sample. Throws ConfigError if t0 > ti or either time
// lies outside [first sample, last sample].
double integrate_orientation(const EgomotionTrack& track, double t0, double ti);

// Left-Riemann integral of the agent-frame velocity over [ti, tau].
Vec2 integrate_translation(const EgomotionTrack& track, double ti, double tau);

// In-plane rotation used everywhere (pipeline and simulator):
//   x' = cos(a) * x - sin(a) * z
//   z' = sin(a) * x + cos(a) * z
inline Vec2 rot2(double a, Vec2 v) {
    const double c = std::cos(a), s = std::sin(a);
    return {c * v.x - s * v.z, s * v.x + c * v.z};
}

}  // namespace semgrid
