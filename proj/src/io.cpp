#include "besovlab/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace besovlab::io {

namespace {

// The layout is little-endian; on the platforms we target the host order is
// little-endian already, so plain byte copies suffice.
void put_u64(std::ostream& os, std::uint64_t v) {
    os.write(reinterpret_cast<const char*>(&v), 8);
}

void put_f64(std::ostream& os, double v) {
    os.write(reinterpret_cast<const char*>(&v), 8);
}

std::uint64_t get_u64(std::istream& is) {
    std::uint64_t v;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}

double get_f64(std::istream& is) {
    double v;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}

void write_components(const std::string& path, const Grid& grid,
                      const std::vector<const Field*>& comps) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_field: cannot open " + path);
    put_u64(os, static_cast<std::uint64_t>(grid.dim()));
    put_u64(os, static_cast<std::uint64_t>(grid.resolution()));
    put_u64(os, static_cast<std::uint64_t>(comps.size()));
    put_f64(os, grid.period());
    for (const Field* f : comps)
        for (double x : f->physical()) put_f64(os, x);
    if (!os) throw std::runtime_error("write_field: write failed for " + path);
}

} // namespace

void write_field(const std::string& path, const Field& f) {
    write_components(path, f.grid(), {&f});
}

void write_field(const std::string& path, const VectorField& f) {
    std::vector<const Field*> comps;
    for (const auto& c : f.comp) comps.push_back(&c);
    write_components(path, f.grid(), comps);
}

LoadedField read_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_field: cannot open " + path);
    auto dim = get_u64(is);
    auto res = get_u64(is);
    auto rank = get_u64(is);
    double period = get_f64(is);
    if (!is) throw std::runtime_error("read_field: truncated header in " + path);
    LoadedField out{Grid(static_cast<int>(dim), static_cast<int>(res), period), {}};
    const std::size_t n = out.grid.size();
    for (std::uint64_t r = 0; r < rank; ++r) {
        std::vector<double> comp(n);
        is.read(reinterpret_cast<char*>(comp.data()),
                static_cast<std::streamsize>(n * sizeof(double)));
        if (!is) throw std::runtime_error("read_field: truncated payload in " + path);
        out.components.push_back(std::move(comp));
    }
    return out;
}

Field LoadedField::as_scalar() const {
    if (components.size() != 1)
        throw std::runtime_error("LoadedField: not a scalar field");
    return Field::from_physical(grid, components[0]);
}

VectorField LoadedField::as_vector() const {
    VectorField v;
    for (const auto& c : components) v.comp.push_back(Field::from_physical(grid, c));
    return v;
}

void write_field_csv(const std::string& path, const Field& f) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_field_csv: cannot open " + path);
    const Grid& g = f.grid();
    const int m = g.resolution();
    os << "i0";
    for (int d = 1; d < g.dim(); ++d) os << ",i" << d;
    os << ",value\n";
    os.precision(17);
    const auto& v = f.physical();
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t rest = i;
        std::size_t stride = v.size();
        for (int d = 0; d < g.dim(); ++d) {
            stride /= m;
            os << (d ? "," : "") << rest / stride;
            rest %= stride;
        }
        os << "," << v[i] << "\n";
    }
}

void write_norm_series_csv(const std::string& path, const NormSeries& series) {
    series.validate();
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_norm_series_csv: cannot open " + path);
    os << "t,k,block_norm\n";
    os.precision(17);
    for (std::size_t i = 0; i < series.times.size(); ++i)
        for (std::size_t k = 0; k < series.blocks[i].size(); ++k)
            os << series.times[i] << "," << (series.j_min + static_cast<int>(k)) << ","
               << series.blocks[i][k] << "\n";
}

} // namespace besovlab::io
