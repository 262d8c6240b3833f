#include "semgrid/grid_io.hpp"

#include <cstring>
#include <fstream>

#include "semgrid/common.hpp"

namespace semgrid {
namespace {

// On-disk values are little-endian; the in-memory copy below is only correct
// on little-endian hosts, which covers every supported target.
template <typename T>
void put(std::string& buf, T v) {
    char bytes[sizeof(T)];
    std::memcpy(bytes, &v, sizeof(T));
    buf.append(bytes, sizeof(T));
}

template <typename T>
T take(const std::string& buf, std::size_t& off) {
    T v;
    std::memcpy(&v, buf.data() + off, sizeof(T));
    off += sizeof(T);
    return v;
}

constexpr std::size_t kHeaderSize = 4 + 2 + 2 + 2 + 4 + 2 + 2 + 8;

}  // namespace

void write_grid(const SemanticGrid& grid, const std::filesystem::path& path) {
    std::string buf;
    buf.reserve(kHeaderSize + grid.cells.size());
    buf.append("SGRD", 4);
    put<std::uint16_t>(buf, kGridFormatVersion);
    put<std::uint16_t>(buf, static_cast<std::uint16_t>(grid.geom.width));
    put<std::uint16_t>(buf, static_cast<std::uint16_t>(grid.geom.height));
    put<float>(buf, static_cast<float>(grid.geom.cell_size));
    put<std::uint16_t>(buf, static_cast<std::uint16_t>(grid.geom.agent_col));
    put<std::uint16_t>(buf, static_cast<std::uint16_t>(grid.geom.agent_row));
    put<double>(buf, grid.timestamp);
    buf.append(reinterpret_cast<const char*>(grid.cells.data()), grid.cells.size());

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot open grid file for writing: " + path.string());
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw DataError("failed writing grid file: " + path.string());
}

SemanticGrid read_grid(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open grid file: " + path.string());
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    if (buf.size() < kHeaderSize || buf.compare(0, 4, "SGRD") != 0)
        throw DataError("corrupt header in grid file: " + path.string());
    std::size_t off = 4;
    const auto version = take<std::uint16_t>(buf, off);
    if (version != kGridFormatVersion)
        throw DataError("corrupt header: unsupported grid version in " + path.string());

    SemanticGrid grid;
    grid.geom.width = take<std::uint16_t>(buf, off);
    grid.geom.height = take<std::uint16_t>(buf, off);
    grid.geom.cell_size = take<float>(buf, off);
    grid.geom.agent_col = take<std::uint16_t>(buf, off);
    grid.geom.agent_row = take<std::uint16_t>(buf, off);
    grid.timestamp = take<double>(buf, off);

    const std::size_t n = static_cast<std::size_t>(grid.geom.width) * grid.geom.height;
    if (buf.size() - off != n)
        throw DataError("size mismatch in grid file: " + path.string());
    grid.cells.assign(buf.begin() + static_cast<std::ptrdiff_t>(off), buf.end());
    for (ClassId c : grid.cells) {
        if (!is_valid_class(c)) throw DataError("invalid class id in grid file: " + path.string());
    }
    return grid;
}

}  // namespace semgrid
