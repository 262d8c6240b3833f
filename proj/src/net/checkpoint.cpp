#include "semgrid/net/checkpoint.hpp"

#include <cstring>
#include <fstream>

namespace semgrid::net {
namespace {

template <typename T>
void put(std::ofstream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T take(std::ifstream& in, const std::filesystem::path& path) {
    T v;
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw DataError("truncated checkpoint: " + path.string());
    return v;
}

void put_blob(std::ofstream& out, const std::vector<double>& v) {
    put<std::uint64_t>(out, v.size());
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * sizeof(double)));
}

std::vector<double> take_blob(std::ifstream& in, const std::filesystem::path& path) {
    const auto n = take<std::uint64_t>(in, path);
    std::vector<double> v(n);
    in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(double)));
    if (!in) throw DataError("truncated checkpoint: " + path.string());
    return v;
}

EDConfig read_header(std::ifstream& in, const std::filesystem::path& path) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "SGED", 4) != 0)
        throw DataError("not a checkpoint file: " + path.string());
    if (take<std::uint16_t>(in, path) != kCheckpointVersion)
        throw DataError("unsupported checkpoint version: " + path.string());
    EDConfig c;
    c.depth = take<std::int32_t>(in, path);
    c.features = take<std::int32_t>(in, path);
    c.in_channels = take<std::int32_t>(in, path);
    c.out_channels = take<std::int32_t>(in, path);
    c.grid_size = take<std::int32_t>(in, path);
    c.dropout_rate = take<double>(in, path);
    c.seed = take<std::uint64_t>(in, path);
    return c;
}

}  // namespace

void save_checkpoint(const EDNetwork& net, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot open checkpoint for writing: " + path.string());
    out.write("SGED", 4);
    put<std::uint16_t>(out, kCheckpointVersion);
    const EDConfig& c = net.config();
    put<std::int32_t>(out, c.depth);
    put<std::int32_t>(out, c.features);
    put<std::int32_t>(out, c.in_channels);
    put<std::int32_t>(out, c.out_channels);
    put<std::int32_t>(out, c.grid_size);
    put<double>(out, c.dropout_rate);
    put<std::uint64_t>(out, c.seed);
    put_blob(out, net.params());
    put_blob(out, net.rms());
    put_blob(out, net.state());
    if (!out) throw DataError("failed writing checkpoint: " + path.string());
}

EDNetwork load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open checkpoint: " + path.string());
    EDNetwork net(read_header(in, path));
    std::vector<double> params = take_blob(in, path);
    std::vector<double> rms = take_blob(in, path);
    std::vector<double> state = take_blob(in, path);
    if (params.size() != net.parameter_count() || rms.size() != net.parameter_count() ||
        state.size() != net.state().size())
        throw DataError("checkpoint blob sizes do not match its config: " + path.string());
    net.params() = std::move(params);
    net.rms() = std::move(rms);
    net.state() = std::move(state);
    return net;
}

void load_checkpoint_into(EDNetwork& net, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open checkpoint: " + path.string());
    const EDConfig stored = read_header(in, path);
    if (!(stored == net.config()))
        throw DataError("checkpoint config mismatch: " + path.string());
    in.close();
    EDNetwork loaded = load_checkpoint(path);
    net.params() = loaded.params();
    net.rms() = loaded.rms();
    net.state() = loaded.state();
}

}  // namespace semgrid::net
