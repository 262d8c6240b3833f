#include "semgrid/net/network.hpp"

#include <cmath>
#include <cstring>

#include "semgrid/kernels/kernels.hpp"

namespace semgrid::net {
namespace {

constexpr double kBnEps = 1e-5;
constexpr double kBnMomentum = 0.9;  // running = m * running + (1 - m) * batch

struct ConvRange {
    // Output row/col window of one kernel tap and the matching source offset.
    int y0, y1, xs, xe, src_row, src_col;
};

ConvRange tap_range(const LayerDesc& l, int h, int w, int ky, int kx) {
    ConvRange r;
    r.y0 = std::max(0, l.pad_t - ky);
    r.y1 = std::min(h, h + l.pad_t - ky);
    r.xs = std::max(0, l.pad_l - kx);
    r.xe = std::min(w, w + l.pad_l - kx);
    r.src_row = r.y0 + ky - l.pad_t;
    r.src_col = r.xs + kx - l.pad_l;
    return r;
}

}  // namespace

void validate_config(const EDConfig& c) {
    if (c.depth < 1) throw ConfigError("ED depth must be >= 1");
    if (c.features < 1) throw ConfigError("ED feature count must be >= 1");
    if (c.in_channels < 1 || c.out_channels < 1)
        throw ConfigError("ED channel counts must be >= 1");
    if (c.dropout_rate < 0.0 || c.dropout_rate >= 1.0)
        throw ConfigError("ED dropout rate must be in [0, 1)");
    const int div = 1 << c.depth;
    if (c.grid_size < div || c.grid_size % div != 0)
        throw ConfigError("ED grid size " + std::to_string(c.grid_size) +
                          " is not divisible by 2^depth = " + std::to_string(div));
}

std::size_t EDNetwork::add_param(std::size_t count) {
    const std::size_t off = params_.size();
    params_.resize(off + count, 0.0);
    return off;
}

std::size_t EDNetwork::add_state(std::size_t count) {
    const std::size_t off = state_.size();
    state_.resize(off + count, 0.0);
    return off;
}

int EDNetwork::add_slot(TensorShape shape) {
    shapes_.push_back(shape);
    return static_cast<int>(shapes_.size()) - 1;
}

int EDNetwork::conv(int in_slot, int out_c, int k, bool pad_end_only) {
    const TensorShape in = shapes_[in_slot];
    LayerDesc l;
    l.kind = LayerKind::Conv;
    l.in0 = in_slot;
    l.in_c = in.c;
    l.out_c = out_c;
    l.k = k;
    if (pad_end_only) {
        l.pad_t = l.pad_l = 0;
        l.pad_b = l.pad_r = k - 1;
    } else {
        l.pad_t = l.pad_l = (k - 1) / 2;
        l.pad_b = l.pad_r = k / 2;
    }
    l.w_off = add_param(static_cast<std::size_t>(out_c) * in.c * k * k);
    l.b_off = add_param(static_cast<std::size_t>(out_c));
    l.out = add_slot({out_c, in.h, in.w});
    layers_.push_back(l);
    return l.out;
}

int EDNetwork::batchnorm(int in_slot) {
    const TensorShape in = shapes_[in_slot];
    LayerDesc l;
    l.kind = LayerKind::BatchNorm;
    l.in0 = in_slot;
    l.bn_c = in.c;
    l.gamma_off = add_param(static_cast<std::size_t>(in.c));
    l.beta_off = add_param(static_cast<std::size_t>(in.c));
    l.rmean_off = add_state(static_cast<std::size_t>(in.c));
    l.rvar_off = add_state(static_cast<std::size_t>(in.c));
    l.bn_slot = n_bn_++;
    l.out = add_slot(in);
    layers_.push_back(l);
    return l.out;
}

int EDNetwork::relu(int in_slot) {
    LayerDesc l;
    l.kind = LayerKind::Relu;
    l.in0 = in_slot;
    l.out = add_slot(shapes_[in_slot]);
    layers_.push_back(l);
    return l.out;
}

EDNetwork::EDNetwork(const EDConfig& config) : config_(config) {
    validate_config(config);
    const int d = config.depth;
    const int f = config.features;
    const int g = config.grid_size;

    add_slot({config.in_channels, g, g});  // slot 0: network input
    int cur = 0;
    std::vector<int> skip(static_cast<std::size_t>(d) + 1, -1);

    for (int k = 1; k <= d; ++k) {
        const int out_c = f << (k - 1);
        cur = relu(batchnorm(conv(cur, out_c, 3, false)));
        cur = relu(batchnorm(conv(cur, out_c, 3, false)));
        skip[k] = cur;
        if (k < d) {
            const TensorShape in = shapes_[cur];
            LayerDesc l;
            l.kind = LayerKind::MaxPool;
            l.in0 = cur;
            l.aux_slot = n_pool_++;
            l.out = add_slot({in.c, in.h / 2, in.w / 2});
            layers_.push_back(l);
            cur = l.out;
        }
    }
    {
        LayerDesc l;
        l.kind = LayerKind::Dropout;
        l.in0 = cur;
        l.aux_slot = n_dropout_++;
        l.out = add_slot(shapes_[cur]);
        layers_.push_back(l);
        cur = l.out;
    }
    latent_shape_ = shapes_[cur];

    for (int j = 1; j <= d - 1; ++j) {
        const int mirror = d - j;
        // Upsample x2
        {
            const TensorShape in = shapes_[cur];
            LayerDesc l;
            l.kind = LayerKind::Upsample;
            l.in0 = cur;
            l.out = add_slot({in.c, in.h * 2, in.w * 2});
            layers_.push_back(l);
            cur = l.out;
        }
        cur = conv(cur, shapes_[cur].c / 2, 2, true);  // linear, no batch norm
        // Skip concat with the encoder block of the same spatial size.
        {
            const TensorShape a = shapes_[cur];
            const TensorShape b = shapes_[skip[mirror]];
            if (a.h != b.h || a.w != b.w)
                throw ConfigError("skip connection shape mismatch at decoder block " +
                                  std::to_string(j));
            LayerDesc l;
            l.kind = LayerKind::Concat;
            l.in0 = cur;
            l.in1 = skip[mirror];
            l.out = add_slot({a.c + b.c, a.h, a.w});
            layers_.push_back(l);
            cur = l.out;
        }
        const int out_c = shapes_[cur].c / 2;
        cur = batchnorm(conv(cur, out_c, 3, false));  // linear activation
        cur = batchnorm(conv(cur, out_c, 3, false));
    }

    // Two channel-reduction convs down to the class count, then softmax.
    const int mid = std::max(config.out_channels, shapes_[cur].c / 2);
    cur = batchnorm(conv(cur, mid, 3, false));
    cur = batchnorm(conv(cur, config.out_channels, 3, false));
    {
        LayerDesc l;
        l.kind = LayerKind::Softmax;
        l.in0 = cur;
        l.out = add_slot(shapes_[cur]);
        layers_.push_back(l);
        cur = l.out;
    }
    output_slot_ = cur;

    const TensorShape out_shape = shapes_[output_slot_];
    if (out_shape.c != config.out_channels || out_shape.h != g || out_shape.w != g)
        throw ConfigError("ED output shape audit failed");

    grads_.assign(params_.size(), 0.0);
    rms_.assign(params_.size(), 0.0);

    // Seeded He-style fan-in uniform init for conv kernels; biases zero,
    // batch-norm scale 1 / shift 0, running stats at the identity.
    Rng rng(config.seed);
    for (const LayerDesc& l : layers_) {
        if (l.kind == LayerKind::Conv) {
            const std::size_t count = static_cast<std::size_t>(l.out_c) * l.in_c * l.k * l.k;
            const double limit = std::sqrt(6.0 / (static_cast<double>(l.in_c) * l.k * l.k));
            for (std::size_t i = 0; i < count; ++i) {
                params_[l.w_off + i] = rng.uniform(-limit, limit);
            }
        } else if (l.kind == LayerKind::BatchNorm) {
            for (int c = 0; c < l.bn_c; ++c) {
                params_[l.gamma_off + c] = 1.0;
                state_[l.rvar_off + c] = 1.0;
            }
        }
    }
}

void EDNetwork::zero_grads() { std::fill(grads_.begin(), grads_.end(), 0.0); }

void EDNetwork::forward(const Tensor& input, bool train_mode, Rng* dropout_rng, Cache& cache) {
    if (input.c != config_.in_channels || input.h != config_.grid_size ||
        input.w != config_.grid_size)
        throw DataError("ED input shape mismatch");
    if (train_mode && dropout_rng == nullptr)
        throw ConfigError("train-mode forward needs a dropout RNG");

    const auto& K = kernels::active();
    const int n = input.n;
    cache.train_mode = train_mode;
    cache.slots.resize(shapes_.size());
    cache.bn_mean.resize(static_cast<std::size_t>(n_bn_));
    cache.bn_invstd.resize(static_cast<std::size_t>(n_bn_));
    cache.pool_idx.resize(static_cast<std::size_t>(n_pool_));
    cache.dropout_mask.resize(static_cast<std::size_t>(n_dropout_));

    cache.slots[0].ensure(n, input.c, input.h, input.w);
    cache.slots[0].v = input.v;

    for (const LayerDesc& l : layers_) {
        const TensorShape os = shapes_[l.out];
        Tensor& out = cache.slots[l.out];
        out.ensure(n, os.c, os.h, os.w);
        const Tensor& x = cache.slots[l.in0];

        switch (l.kind) {
            case LayerKind::Conv: {
                const int h = os.h, w = os.w;
                parallel_for(static_cast<std::size_t>(n) * l.out_c, [&](std::size_t p) {
                    const int ni = static_cast<int>(p) / l.out_c;
                    const int oc = static_cast<int>(p) % l.out_c;
                    double* dst = out.plane(ni, oc);
                    std::fill(dst, dst + out.plane_size(), params_[l.b_off + oc]);
                    for (int ic = 0; ic < l.in_c; ++ic) {
                        const double* src = x.plane(ni, ic);
                        const double* wbase =
                            &params_[l.w_off +
                                     (static_cast<std::size_t>(oc) * l.in_c + ic) * l.k * l.k];
                        for (int ky = 0; ky < l.k; ++ky) {
                            for (int kx = 0; kx < l.k; ++kx) {
                                const ConvRange r = tap_range(l, h, w, ky, kx);
                                if (r.y1 <= r.y0 || r.xe <= r.xs) continue;
                                K.axpy2d(wbase[ky * l.k + kx],
                                         src + static_cast<std::size_t>(r.src_row) * w + r.src_col,
                                         w, dst + static_cast<std::size_t>(r.y0) * w + r.xs, w,
                                         r.y1 - r.y0, r.xe - r.xs);
                            }
                        }
                    }
                });
                break;
            }
            case LayerKind::BatchNorm: {
                auto& means = cache.bn_mean[l.bn_slot];
                auto& invstds = cache.bn_invstd[l.bn_slot];
                means.resize(static_cast<std::size_t>(l.bn_c));
                invstds.resize(static_cast<std::size_t>(l.bn_c));
                const double m = static_cast<double>(n) * x.plane_size();
                parallel_for(static_cast<std::size_t>(l.bn_c), [&](std::size_t c) {
                    double mean, var;
                    if (train_mode) {
                        double s = 0.0, sq = 0.0;
                        for (int ni = 0; ni < n; ++ni) {
                            s += K.sum(x.plane(ni, static_cast<int>(c)), x.plane_size());
                            sq += K.sumsq(x.plane(ni, static_cast<int>(c)), x.plane_size());
                        }
                        mean = s / m;
                        var = std::max(0.0, sq / m - mean * mean);
                        state_[l.rmean_off + c] =
                            kBnMomentum * state_[l.rmean_off + c] + (1.0 - kBnMomentum) * mean;
                        state_[l.rvar_off + c] =
                            kBnMomentum * state_[l.rvar_off + c] + (1.0 - kBnMomentum) * var;
                    } else {
                        mean = state_[l.rmean_off + c];
                        var = state_[l.rvar_off + c];
                    }
                    const double invstd = 1.0 / std::sqrt(var + kBnEps);
                    means[c] = mean;
                    invstds[c] = invstd;
                    const double a = params_[l.gamma_off + c] * invstd;
                    const double b = params_[l.beta_off + c] - a * mean;
                    for (int ni = 0; ni < n; ++ni) {
                        K.affine(a, b, x.plane(ni, static_cast<int>(c)),
                                 out.plane(ni, static_cast<int>(c)), x.plane_size());
                    }
                });
                break;
            }
            case LayerKind::Relu:
                K.relu(x.v.data(), out.v.data(), x.size());
                break;
            case LayerKind::MaxPool: {
                auto& idx = cache.pool_idx[l.aux_slot];
                idx.resize(out.size());
                const int oh = os.h, ow = os.w, iw = x.w;
                parallel_for(static_cast<std::size_t>(n) * os.c, [&](std::size_t p) {
                    const int ni = static_cast<int>(p) / os.c;
                    const int c = static_cast<int>(p) % os.c;
                    const double* src = x.plane(ni, c);
                    double* dst = out.plane(ni, c);
                    std::uint8_t* id = idx.data() + p * out.plane_size();
                    for (int y = 0; y < oh; ++y) {
                        for (int xo = 0; xo < ow; ++xo) {
                            const double* q = src + (static_cast<std::size_t>(2 * y) * iw + 2 * xo);
                            double best = q[0];
                            std::uint8_t bi = 0;
                            if (q[1] > best) { best = q[1]; bi = 1; }
                            if (q[iw] > best) { best = q[iw]; bi = 2; }
                            if (q[iw + 1] > best) { best = q[iw + 1]; bi = 3; }
                            dst[static_cast<std::size_t>(y) * ow + xo] = best;
                            id[static_cast<std::size_t>(y) * ow + xo] = bi;
                        }
                    }
                });
                break;
            }
            case LayerKind::Dropout: {
                const double rate = config_.dropout_rate;
                if (train_mode && rate > 0.0) {
                    auto& mask = cache.dropout_mask[l.aux_slot];
                    mask.resize(x.size());
                    const double keep = 1.0 / (1.0 - rate);
                    for (std::size_t i = 0; i < mask.size(); ++i) {
                        mask[i] = dropout_rng->uniform() < rate ? 0.0 : keep;
                    }
                    K.emul(x.v.data(), mask.data(), out.v.data(), x.size());
                } else {
                    out.v = x.v;
                }
                break;
            }
            case LayerKind::Upsample: {
                const int ih = x.h, iw = x.w, ow = os.w;
                parallel_for(static_cast<std::size_t>(n) * os.c, [&](std::size_t p) {
                    const int ni = static_cast<int>(p) / os.c;
                    const int c = static_cast<int>(p) % os.c;
                    const double* src = x.plane(ni, c);
                    double* dst = out.plane(ni, c);
                    for (int y = 0; y < ih; ++y) {
                        double* row0 = dst + static_cast<std::size_t>(2 * y) * ow;
                        double* row1 = row0 + ow;
                        const double* s = src + static_cast<std::size_t>(y) * iw;
                        for (int xo = 0; xo < iw; ++xo) {
                            row0[2 * xo] = row0[2 * xo + 1] = s[xo];
                        }
                        std::memcpy(row1, row0, sizeof(double) * static_cast<std::size_t>(ow));
                    }
                });
                break;
            }
            case LayerKind::Concat: {
                const Tensor& x1 = cache.slots[l.in1];
                parallel_for(static_cast<std::size_t>(n), [&](std::size_t ni) {
                    std::memcpy(out.plane(static_cast<int>(ni), 0),
                                x.plane(static_cast<int>(ni), 0),
                                sizeof(double) * x.sample_size());
                    std::memcpy(out.plane(static_cast<int>(ni), x.c),
                                x1.plane(static_cast<int>(ni), 0),
                                sizeof(double) * x1.sample_size());
                });
                break;
            }
            case LayerKind::Softmax: {
                parallel_for(static_cast<std::size_t>(n), [&](std::size_t ni) {
                    const std::size_t ps = x.plane_size();
                    std::vector<double> maxbuf(x.plane(static_cast<int>(ni), 0),
                                               x.plane(static_cast<int>(ni), 0) + ps);
                    for (int c = 1; c < os.c; ++c) {
                        K.emax(x.plane(static_cast<int>(ni), c), maxbuf.data(), ps);
                    }
                    std::vector<double> sumbuf(ps, 0.0);
                    for (int c = 0; c < os.c; ++c) {
                        const double* src = x.plane(static_cast<int>(ni), c);
                        double* dst = out.plane(static_cast<int>(ni), c);
                        for (std::size_t i = 0; i < ps; ++i) dst[i] = std::exp(src[i] - maxbuf[i]);
                        K.add(dst, sumbuf.data(), ps);
                    }
                    for (int c = 0; c < os.c; ++c) {
                        double* dst = out.plane(static_cast<int>(ni), c);
                        K.ediv(dst, sumbuf.data(), dst, ps);
                    }
                });
                break;
            }
        }
    }
}

void EDNetwork::backward(const Cache& cache, const Tensor& d_output) {
    const auto& K = kernels::active();
    const int n = cache.slots[0].n;

    std::vector<Tensor>& d = backward_slots_;
    d.resize(shapes_.size());
    for (std::size_t s = 0; s < shapes_.size(); ++s) {
        d[s].ensure(n, shapes_[s].c, shapes_[s].h, shapes_[s].w);
        d[s].zero();
    }
    d[output_slot_].v = d_output.v;

    for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
        const LayerDesc& l = *it;
        const Tensor& x = cache.slots[l.in0];
        const Tensor& dout = d[l.out];
        Tensor& dx = d[l.in0];

        switch (l.kind) {
            case LayerKind::Conv: {
                const int h = shapes_[l.out].h, w = shapes_[l.out].w;
                // d(input): accumulate, the source may feed several layers.
                parallel_for(static_cast<std::size_t>(n) * l.in_c, [&](std::size_t p) {
                    const int ni = static_cast<int>(p) / l.in_c;
                    const int ic = static_cast<int>(p) % l.in_c;
                    double* dst = dx.plane(ni, ic);
                    for (int oc = 0; oc < l.out_c; ++oc) {
                        const double* src = dout.plane(ni, oc);
                        const double* wbase =
                            &params_[l.w_off +
                                     (static_cast<std::size_t>(oc) * l.in_c + ic) * l.k * l.k];
                        for (int ky = 0; ky < l.k; ++ky) {
                            for (int kx = 0; kx < l.k; ++kx) {
                                const ConvRange r = tap_range(l, h, w, ky, kx);
                                if (r.y1 <= r.y0 || r.xe <= r.xs) continue;
                                K.axpy2d(wbase[ky * l.k + kx],
                                         src + static_cast<std::size_t>(r.y0) * w + r.xs, w,
                                         dst + static_cast<std::size_t>(r.src_row) * w + r.src_col,
                                         w, r.y1 - r.y0, r.xe - r.xs);
                            }
                        }
                    }
                });
                // d(weights), d(bias): each output channel owned by one worker.
                parallel_for(static_cast<std::size_t>(l.out_c), [&](std::size_t oc) {
                    double db = 0.0;
                    for (int ni = 0; ni < n; ++ni) {
                        db += K.sum(dout.plane(ni, static_cast<int>(oc)), dout.plane_size());
                    }
                    grads_[l.b_off + oc] += db;
                    for (int ic = 0; ic < l.in_c; ++ic) {
                        double* gw = &grads_[l.w_off + (oc * l.in_c + ic) * l.k * l.k];
                        for (int ky = 0; ky < l.k; ++ky) {
                            for (int kx = 0; kx < l.k; ++kx) {
                                const ConvRange r = tap_range(l, h, w, ky, kx);
                                if (r.y1 <= r.y0 || r.xe <= r.xs) continue;
                                double acc = 0.0;
                                for (int ni = 0; ni < n; ++ni) {
                                    acc += K.dot2d(
                                        dout.plane(ni, static_cast<int>(oc)) +
                                            static_cast<std::size_t>(r.y0) * w + r.xs,
                                        w,
                                        x.plane(ni, ic) +
                                            static_cast<std::size_t>(r.src_row) * w + r.src_col,
                                        w, r.y1 - r.y0, r.xe - r.xs);
                                }
                                gw[ky * l.k + kx] += acc;
                            }
                        }
                    }
                });
                break;
            }
            case LayerKind::BatchNorm: {
                const auto& means = cache.bn_mean[l.bn_slot];
                const auto& invstds = cache.bn_invstd[l.bn_slot];
                const double m = static_cast<double>(n) * x.plane_size();
                parallel_for(static_cast<std::size_t>(l.bn_c), [&](std::size_t c) {
                    double s1 = 0.0, sxd = 0.0;
                    for (int ni = 0; ni < n; ++ni) {
                        s1 += K.sum(dout.plane(ni, static_cast<int>(c)), x.plane_size());
                        sxd += K.dot(dout.plane(ni, static_cast<int>(c)),
                                     x.plane(ni, static_cast<int>(c)), x.plane_size());
                    }
                    const double mean = means[c], invstd = invstds[c];
                    const double s2 = sxd - mean * s1;
                    grads_[l.gamma_off + c] += s2 * invstd;
                    grads_[l.beta_off + c] += s1;
                    const double gamma = params_[l.gamma_off + c];
                    double a, b, cc;
                    if (cache.train_mode) {
                        a = gamma * invstd;
                        b = -gamma * invstd * invstd * invstd * s2 / m;
                        cc = -a * s1 / m - b * mean;
                    } else {
                        // Eval-mode statistics are constants.
                        a = gamma * invstd;
                        b = 0.0;
                        cc = 0.0;
                    }
                    for (int ni = 0; ni < n; ++ni) {
                        K.lincomb2(a, dout.plane(ni, static_cast<int>(c)), b,
                                   x.plane(ni, static_cast<int>(c)), cc,
                                   dx.plane(ni, static_cast<int>(c)), x.plane_size());
                    }
                });
                break;
            }
            case LayerKind::Relu:
                K.relu_mask_grad(x.v.data(), dout.v.data(), dx.v.data(), x.size());
                break;
            case LayerKind::MaxPool: {
                const auto& idx = cache.pool_idx[l.aux_slot];
                const TensorShape os = shapes_[l.out];
                const int oh = os.h, ow = os.w, iw = x.w;
                parallel_for(static_cast<std::size_t>(n) * os.c, [&](std::size_t p) {
                    const int ni = static_cast<int>(p) / os.c;
                    const int c = static_cast<int>(p) % os.c;
                    const double* src = dout.plane(ni, c);
                    double* dst = dx.plane(ni, c);
                    const std::uint8_t* id = idx.data() + p * dout.plane_size();
                    for (int y = 0; y < oh; ++y) {
                        for (int xo = 0; xo < ow; ++xo) {
                            const std::size_t o = static_cast<std::size_t>(y) * ow + xo;
                            const std::uint8_t bi = id[o];
                            const std::size_t base =
                                static_cast<std::size_t>(2 * y + bi / 2) * iw + 2 * xo + bi % 2;
                            dst[base] += src[o];
                        }
                    }
                });
                break;
            }
            case LayerKind::Dropout: {
                if (cache.train_mode && config_.dropout_rate > 0.0) {
                    const auto& mask = cache.dropout_mask[l.aux_slot];
                    K.emul(dout.v.data(), mask.data(), dx.v.data(), dx.size());
                } else {
                    dx.v = dout.v;
                }
                break;
            }
            case LayerKind::Upsample: {
                const int ih = x.h, iw = x.w, ow = shapes_[l.out].w;
                parallel_for(static_cast<std::size_t>(n) * x.c, [&](std::size_t p) {
                    const int ni = static_cast<int>(p) / x.c;
                    const int c = static_cast<int>(p) % x.c;
                    const double* src = dout.plane(ni, c);
                    double* dst = dx.plane(ni, c);
                    for (int y = 0; y < ih; ++y) {
                        const double* row0 = src + static_cast<std::size_t>(2 * y) * ow;
                        const double* row1 = row0 + ow;
                        double* s = dst + static_cast<std::size_t>(y) * iw;
                        for (int xo = 0; xo < iw; ++xo) {
                            s[xo] += row0[2 * xo] + row0[2 * xo + 1] + row1[2 * xo] +
                                     row1[2 * xo + 1];
                        }
                    }
                });
                break;
            }
            case LayerKind::Concat: {
                Tensor& dx1 = d[l.in1];
                parallel_for(static_cast<std::size_t>(n), [&](std::size_t ni) {
                    K.add(dout.plane(static_cast<int>(ni), 0), dx.plane(static_cast<int>(ni), 0),
                          dx.sample_size());
                    K.add(dout.plane(static_cast<int>(ni), dx.c),
                          dx1.plane(static_cast<int>(ni), 0), dx1.sample_size());
                });
                break;
            }
            case LayerKind::Softmax: {
                const Tensor& probs = cache.slots[l.out];
                const int classes = shapes_[l.out].c;
                parallel_for(static_cast<std::size_t>(n), [&](std::size_t ni) {
                    const std::size_t ps = x.plane_size();
                    std::vector<double> sbuf(ps, 0.0);
                    std::vector<double> tmp(ps);
                    for (int c = 0; c < classes; ++c) {
                        K.emul_acc(dout.plane(static_cast<int>(ni), c),
                                   probs.plane(static_cast<int>(ni), c), sbuf.data(), ps);
                    }
                    for (int c = 0; c < classes; ++c) {
                        K.esub(dout.plane(static_cast<int>(ni), c), sbuf.data(), tmp.data(), ps);
                        K.emul(tmp.data(), probs.plane(static_cast<int>(ni), c),
                               dx.plane(static_cast<int>(ni), c), ps);
                    }
                });
                break;
            }
        }
    }
}

ProbabilisticGrid EDNetwork::output_grid(const Cache& cache, int ni, const GridGeometry& geom,
                                         double timestamp) const {
    const Tensor& out = cache.slots[output_slot_];
    ProbabilisticGrid grid(geom, timestamp, out.c);
    std::memcpy(grid.values.data(), out.sample(ni), sizeof(double) * out.sample_size());
    return grid;
}

}  // namespace semgrid::net
