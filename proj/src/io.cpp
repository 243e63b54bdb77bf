#include "mfglab/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace mfglab {

namespace {

constexpr std::uint32_t kMagic = 0x4247464D;  // "MFGB" little-endian

struct BinHeader {
    std::uint32_t magic;
    std::uint32_t d;
    std::uint32_t n;
    std::uint32_t nt;
    double T;
    std::uint8_t reserved[8];
};
static_assert(sizeof(BinHeader) == 32, "header must be 32 bytes");

std::ofstream open_out(const std::string& path, bool binary) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::binary);
    if (!out) throw std::runtime_error("io: cannot open for writing: " + path);
    return out;
}

void write_values(std::ofstream& out, const std::vector<double>& v) {
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * sizeof(double)));
}

BinHeader read_header(std::ifstream& in, const std::string& path) {
    BinHeader hdr{};
    in.read(reinterpret_cast<char*>(&hdr), sizeof(hdr));
    if (!in || hdr.magic != kMagic)
        throw std::runtime_error("io: bad binary header in " + path);
    return hdr;
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_field_csv(const std::string& path, const ScalarField& f) {
    auto out = open_out(path, false);
    const Grid& g = *f.grid;
    out << (g.d == 2 ? "node,x,y,value\n" : "node,x,value\n");
    for (std::size_t node = 0; node < g.num_nodes(); ++node) {
        int i, j;
        g.node_ij(node, i, j);
        out << node << ',' << format_double(g.coord(i));
        if (g.d == 2) out << ',' << format_double(g.coord(j));
        out << ',' << format_double(f[node]) << '\n';
    }
}

void write_field_csv(const std::string& path, const SpaceTimeField& f) {
    auto out = open_out(path, false);
    const Grid& g = *f.grid;
    out << (g.d == 2 ? "level,t,node,x,y,value\n" : "level,t,node,x,value\n");
    for (int k = 0; k <= g.nt; ++k) {
        for (std::size_t node = 0; node < g.num_nodes(); ++node) {
            int i, j;
            g.node_ij(node, i, j);
            out << k << ',' << format_double(g.time(k)) << ',' << node << ','
                << format_double(g.coord(i));
            if (g.d == 2) out << ',' << format_double(g.coord(j));
            out << ',' << format_double(f.at(k, node)) << '\n';
        }
    }
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto out = open_out(path, false);
    for (std::size_t c = 0; c < header.size(); ++c)
        out << header[c] << (c + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            out << row[c] << (c + 1 < row.size() ? "," : "\n");
}

void write_field_binary(const std::string& path, const ScalarField& f) {
    auto out = open_out(path, true);
    BinHeader hdr{};
    hdr.magic = kMagic;
    hdr.d = static_cast<std::uint32_t>(f.grid->d);
    hdr.n = static_cast<std::uint32_t>(f.grid->n);
    hdr.nt = 0;
    hdr.T = f.grid->T;
    out.write(reinterpret_cast<const char*>(&hdr), sizeof(hdr));
    write_values(out, f.v);
}

void write_field_binary(const std::string& path, const SpaceTimeField& f) {
    auto out = open_out(path, true);
    BinHeader hdr{};
    hdr.magic = kMagic;
    hdr.d = static_cast<std::uint32_t>(f.grid->d);
    hdr.n = static_cast<std::uint32_t>(f.grid->n);
    hdr.nt = static_cast<std::uint32_t>(f.grid->nt);
    hdr.T = f.grid->T;
    out.write(reinterpret_cast<const char*>(&hdr), sizeof(hdr));
    write_values(out, f.v);
}

ScalarField read_scalar_binary(const std::string& path, const GridPtr& grid) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("io: cannot open " + path);
    const BinHeader hdr = read_header(in, path);
    if (hdr.d != static_cast<std::uint32_t>(grid->d) ||
        hdr.n != static_cast<std::uint32_t>(grid->n) || hdr.nt != 0)
        throw std::runtime_error("io: header does not match grid: " + path);
    ScalarField f(grid);
    in.read(reinterpret_cast<char*>(f.v.data()),
            static_cast<std::streamsize>(f.v.size() * sizeof(double)));
    if (!in) throw std::runtime_error("io: truncated payload in " + path);
    return f;
}

SpaceTimeField read_space_time_binary(const std::string& path, const GridPtr& grid) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("io: cannot open " + path);
    const BinHeader hdr = read_header(in, path);
    if (hdr.d != static_cast<std::uint32_t>(grid->d) ||
        hdr.n != static_cast<std::uint32_t>(grid->n) ||
        hdr.nt != static_cast<std::uint32_t>(grid->nt))
        throw std::runtime_error("io: header does not match grid: " + path);
    SpaceTimeField f(grid);
    in.read(reinterpret_cast<char*>(f.v.data()),
            static_cast<std::streamsize>(f.v.size() * sizeof(double)));
    if (!in) throw std::runtime_error("io: truncated payload in " + path);
    return f;
}

}  // namespace mfglab
