#pragma once

#include <filesystem>

#include "semgrid/net/network.hpp"

namespace semgrid::net {

// Checkpoint file, little-endian:
//   magic "SGED", u16 version (=1),
//   i32 depth, i32 features, i32 in_channels, i32 out_channels, i32 grid_size,
//   f64 dropout_rate, u64 seed,
//   u64 n_params, f64 params..., f64 rms...,
//   u64 n_state,  f64 state...   (batch-norm running statistics)
inline constexpr std::uint16_t kCheckpointVersion = 1;

void save_checkpoint(const EDNetwork& net, const std::filesystem::path& path);

// Rebuilds a network from the stored config and restores parameters,
// optimizer accumulators and running statistics bit-exactly.
EDNetwork load_checkpoint(const std::filesystem::path& path);

// Restores into an existing network; throws DataError when the stored config
// differs from net.config().
void load_checkpoint_into(EDNetwork& net, const std::filesystem::path& path);

}  // namespace semgrid::net
