#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace semgrid::net {

// Dense NCHW tensor of doubles. Planes (one channel of one batch element)
// are contiguous, which is what every kernel call operates on.
struct Tensor {
    int n = 0, c = 0, h = 0, w = 0;
    std::vector<double> v;

    Tensor() = default;
    Tensor(int n_, int c_, int h_, int w_) { resize(n_, c_, h_, w_); }

    void resize(int n_, int c_, int h_, int w_) {
        n = n_;
        c = c_;
        h = h_;
        w = w_;
        v.assign(static_cast<std::size_t>(n) * c * h * w, 0.0);
    }

    // Like resize but keeps existing contents when the element count already
    // matches; forward passes overwrite every element anyway.
    void ensure(int n_, int c_, int h_, int w_) {
        const std::size_t need = static_cast<std::size_t>(n_) * c_ * h_ * w_;
        if (need != v.size()) v.resize(need);
        n = n_;
        c = c_;
        h = h_;
        w = w_;
    }

    std::size_t plane_size() const { return static_cast<std::size_t>(h) * w; }
    std::size_t sample_size() const { return static_cast<std::size_t>(c) * plane_size(); }
    std::size_t size() const { return v.size(); }

    double* plane(int ni, int ci) {
        return v.data() + (static_cast<std::size_t>(ni) * c + ci) * plane_size();
    }
    const double* plane(int ni, int ci) const {
        return v.data() + (static_cast<std::size_t>(ni) * c + ci) * plane_size();
    }
    double* sample(int ni) { return v.data() + static_cast<std::size_t>(ni) * sample_size(); }
    const double* sample(int ni) const {
        return v.data() + static_cast<std::size_t>(ni) * sample_size();
    }

    void zero() { std::fill(v.begin(), v.end(), 0.0); }
};

}  // namespace semgrid::net
