#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semgrid/common.hpp"
#include "semgrid/grid.hpp"
#include "semgrid/net/tensor.hpp"

namespace semgrid::net {

struct EDConfig {
    int depth = 2;          // encoder blocks
    int features = 16;      // channels of the first block; doubles per block
    int in_channels = 20;   // n_sensors * n_frames * n_classes
    int out_channels = 10;  // n_classes
    int grid_size = 64;
    double dropout_rate = 0.5;
    std::uint64_t seed = 1;

    bool operator==(const EDConfig&) const = default;
};

struct TensorShape {
    int c = 0, h = 0, w = 0;
    bool operator==(const TensorShape&) const = default;
};

enum class LayerKind : std::uint8_t {
    Conv,
    BatchNorm,
    Relu,
    MaxPool,
    Dropout,
    Upsample,
    Concat,
    Softmax,
};

struct LayerDesc {
    LayerKind kind;
    int in0 = -1, in1 = -1, out = -1;  // tensor slots
    // Conv
    int in_c = 0, out_c = 0, k = 0;
    int pad_t = 0, pad_l = 0, pad_b = 0, pad_r = 0;
    std::size_t w_off = 0, b_off = 0;
    // BatchNorm
    int bn_c = 0;
    std::size_t gamma_off = 0, beta_off = 0;
    std::size_t rmean_off = 0, rvar_off = 0;  // into the state vector
    int bn_slot = -1;                         // per-channel mean/invstd cache
    int aux_slot = -1;                        // pool argmax / dropout mask cache
};

// Encoder-decoder CNN that fuses stacked one-hot semantic grids into a
// per-cell class distribution.
//
// Encoder: `depth` blocks of [conv3x3+BN+ReLU, conv3x3+BN+ReLU]; blocks
// 1..depth-1 end with a 2x2 max-pool, the last block ends with dropout, so a
// 128-cell grid at depth 3 reaches a 32x32 latent. Decoder: depth-1 blocks of
// [nearest-neighbor x2 upsample, 2x2 conv halving the channels, skip concat
// with the matching encoder output, two 3x3 convs with batch norm and linear
// activation]; after the last block two more 3x3 convs reduce the channels to
// out_channels (via max(out_channels, C/2)), then a per-cell softmax.
class EDNetwork {
public:
    explicit EDNetwork(const EDConfig& config);

    const EDConfig& config() const { return config_; }
    std::size_t parameter_count() const { return params_.size(); }
    TensorShape latent_shape() const { return latent_shape_; }

    std::vector<double>& params() { return params_; }
    const std::vector<double>& params() const { return params_; }
    std::vector<double>& grads() { return grads_; }
    std::vector<double>& rms() { return rms_; }
    const std::vector<double>& rms() const { return rms_; }
    std::vector<double>& state() { return state_; }
    const std::vector<double>& state() const { return state_; }

    struct Cache {
        std::vector<Tensor> slots;
        std::vector<std::vector<double>> bn_mean, bn_invstd;
        std::vector<std::vector<std::uint8_t>> pool_idx;
        std::vector<std::vector<double>> dropout_mask;
        bool train_mode = false;
    };

    // Runs the network on input [N, in_channels, G, G]. In train mode batch
    // statistics drive the batch-norm layers (running statistics are updated)
    // and dropout draws its mask from `dropout_rng`; in eval mode the running
    // statistics are used, no RNG is consumed and no state is written.
    void forward(const Tensor& input, bool train_mode, Rng* dropout_rng, Cache& cache);

    const Tensor& output(const Cache& cache) const { return cache.slots[output_slot_]; }

    // Accumulates parameter gradients of the cached forward pass given
    // d(loss)/d(output). Call zero_grads() first.
    void backward(const Cache& cache, const Tensor& d_output);

    void zero_grads();

    // Copies one batch element of the output into a ProbabilisticGrid.
    ProbabilisticGrid output_grid(const Cache& cache, int ni, const GridGeometry& geom,
                                  double timestamp = 0.0) const;

    const std::vector<LayerDesc>& layers() const { return layers_; }
    const std::vector<TensorShape>& slot_shapes() const { return shapes_; }

private:
    std::size_t add_param(std::size_t count);
    std::size_t add_state(std::size_t count);
    int add_slot(TensorShape shape);
    int conv(int in_slot, int out_c, int k, bool pad_end_only);
    int batchnorm(int in_slot);
    int relu(int in_slot);

    EDConfig config_;
    std::vector<LayerDesc> layers_;
    std::vector<TensorShape> shapes_;
    std::vector<double> params_, grads_, rms_, state_;
    std::vector<Tensor> backward_slots_;  // reused across backward calls
    TensorShape latent_shape_;
    int output_slot_ = -1;
    int n_bn_ = 0, n_pool_ = 0, n_dropout_ = 0;
};

// Validates divisibility and channel arithmetic; throws ConfigError.
void validate_config(const EDConfig& config);

}  // namespace semgrid::net
