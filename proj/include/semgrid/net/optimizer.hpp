#pragma once

#include "semgrid/net/network.hpp"

namespace semgrid::net {

inline constexpr double kRmsDecay = 0.9;
inline constexpr double kRmsEpsilon = 1e-8;

// One RMSprop update over all parameters:
//   acc = 0.9 * acc + 0.1 * g^2
//   p  -= lr * g / (sqrt(acc) + 1e-8)
// The accumulators live in the network and persist across steps.
void rmsprop_step(EDNetwork& net, double lr);

}  // namespace semgrid::net
