#include "epdiff/output.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace epdiff {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void put_u64_le(std::ofstream& out, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64_le(std::ifstream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

void put_f64_le(std::ofstream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64_le(out, bits);
}

double get_f64_le(std::ifstream& in) {
    const std::uint64_t bits = get_u64_le(in);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

std::ofstream open_out(const std::string& path, std::ios_base::openmode mode) {
    std::ofstream out(path, mode);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

} // namespace

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRecord>& records) {
    std::ofstream out = open_out(path, std::ios_base::out);
    out << "step,t,hamiltonian,mass,momentum_x,momentum_y,max_speed,l2_m\n";
    for (const auto& r : records) {
        out << r.step << ',' << fmt(r.t) << ',' << fmt(r.hamiltonian) << ',';
        if (r.mass) out << fmt(*r.mass);
        out << ',' << fmt(r.momentum_x) << ',';
        if (r.momentum_y) out << fmt(*r.momentum_y);
        out << ',' << fmt(r.max_speed) << ',' << fmt(r.l2_m) << '\n';
    }
}

void write_snapshot_csv(const std::string& path, const GridPtr& grid,
                        const std::vector<std::string>& names, const FieldsState& fields) {
    if (grid->dim() != 1)
        throw std::invalid_argument("write_snapshot_csv: 1-D snapshots only");
    std::ofstream out = open_out(path, std::ios_base::out);
    out << "x";
    for (const auto& n : names) out << ',' << n;
    out << '\n';
    for (std::size_t i = 0; i < grid->size(0); ++i) {
        out << fmt(grid->coord(0, i));
        for (const auto& f : fields) out << ',' << fmt(f[i]);
        out << '\n';
    }
}

void write_snapshot_binary(const std::string& path, const GridPtr& grid,
                           const FieldsState& fields) {
    std::ofstream out = open_out(path, std::ios_base::out | std::ios_base::binary);
    out.write("EPDF", 4);
    put_u64_le(out, static_cast<std::uint64_t>(grid->dim()));
    put_u64_le(out, grid->size(0));
    put_u64_le(out, grid->dim() == 2 ? grid->size(1) : 1);
    put_u64_le(out, fields.size());
    for (const auto& f : fields)
        for (double v : f.values) put_f64_le(out, v);
}

BinarySnapshot read_snapshot_binary(const std::string& path) {
    std::ifstream in(path, std::ios_base::in | std::ios_base::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    char magic[4];
    in.read(magic, 4);
    if (std::memcmp(magic, "EPDF", 4) != 0)
        throw std::runtime_error("bad snapshot magic in " + path);
    BinarySnapshot s;
    s.dim = get_u64_le(in);
    s.nx = get_u64_le(in);
    s.ny = get_u64_le(in);
    s.field_count = get_u64_le(in);
    const std::size_t n = s.nx * s.ny;
    s.fields.resize(s.field_count);
    for (auto& f : s.fields) {
        f.resize(n);
        for (auto& v : f) v = get_f64_le(in);
    }
    if (!in) throw std::runtime_error("truncated snapshot: " + path);
    return s;
}

std::string snapshot_filename(std::size_t step, int dim) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "snapshot_%06zu.%s", step, dim == 1 ? "csv" : "bin");
    return buf;
}

} // namespace epdiff
