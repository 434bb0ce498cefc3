#pragma once

#include <string>
#include <vector>

#include "besovlab/field.hpp"
#include "besovlab/littlewood_paley.hpp"

namespace besovlab::io {

// Flat binary layout: header of little-endian 64-bit values
// (dim, resolution, rank as unsigned; period as float64), then row-major
// float64 physical samples, one component after another.
void write_field(const std::string& path, const Field& f);
void write_field(const std::string& path, const VectorField& f);

struct LoadedField {
    Grid grid;
    std::vector<std::vector<double>> components;

    Field as_scalar() const;
    VectorField as_vector() const;
};
LoadedField read_field(const std::string& path);

// CSV with one sample per row (index columns then value); meant for small grids.
void write_field_csv(const std::string& path, const Field& f);

// Columns: t, k, block_norm.
void write_norm_series_csv(const std::string& path, const NormSeries& series);

} // namespace besovlab::io
