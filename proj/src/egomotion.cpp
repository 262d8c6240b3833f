#include "semgrid/egomotion.hpp"

#include <algorithm>
#include <string>

#include "semgrid/common.hpp"

namespace semgrid {
namespace {

void check_span(const EgomotionTrack& track, double a, double b) {
    if (track.samples.empty()) throw ConfigError("egomotion track is empty");
    if (a > b) throw ConfigError("egomotion integration interval is reversed");
    const double lo = track.samples.front().t;
    const double hi = track.samples.back().t;
    if (a < lo - 1e-9 || b > hi + 1e-9)
        throw ConfigError("egomotion integration interval [" + std::to_string(a) + ", " +
                          std::to_string(b) + "] outside track span [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
}

// Accumulates rate(sample) * overlap([t_j, t_j+1), [a, b]) over all samples.
template <typename Rate, typename Acc>
void integrate(const EgomotionTrack& track, double a, double b, Rate rate, Acc acc) {
    const auto& s = track.samples;
    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        const double lo = std::max(s[j].t, a);
        const double hi = std::min(s[j + 1].t, b);
        if (hi > lo) acc(rate(s[j]), hi - lo);
    }
}

}  // namespace

void validate_track(const EgomotionTrack& track) {
    for (std::size_t i = 1; i < track.samples.size(); ++i) {
        if (!(track.samples[i].t > track.samples[i - 1].t))
            throw ConfigError("egomotion timestamps must be strictly increasing");
    }
}

double integrate_orientation(const EgomotionTrack& track, double t0, double ti) {
    check_span(track, t0, ti);
    double alpha = 0.0;
    integrate(track, t0, ti, [](const EgoSample& s) { return s.yaw_rate; },
              [&](double r, double dt) { alpha += r * dt; });
    return alpha;
}

Vec2 integrate_translation(const EgomotionTrack& track, double ti, double tau) {
    check_span(track, ti, tau);
    Vec2 q;
    integrate(track, ti, tau, [](const EgoSample& s) { return Vec2{s.vx, s.vz}; },
              [&](Vec2 v, double dt) {
                  q.x += v.x * dt;
                  q.z += v.z * dt;
              });
    return q;
}

}  // namespace semgrid
