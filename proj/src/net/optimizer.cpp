#include "semgrid/net/optimizer.hpp"

#include <cmath>

namespace semgrid::net {

void rmsprop_step(EDNetwork& net, double lr) {
    std::vector<double>& p = net.params();
    std::vector<double>& g = net.grads();
    std::vector<double>& r = net.rms();
    const std::size_t n = p.size();
    parallel_for(worker_count(), [&](std::size_t w) {
        const std::size_t chunk = (n + worker_count() - 1) / worker_count();
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) {
            r[i] = kRmsDecay * r[i] + (1.0 - kRmsDecay) * g[i] * g[i];
            p[i] -= lr * g[i] / (std::sqrt(r[i]) + kRmsEpsilon);
        }
    });
}

}  // namespace semgrid::net
