#pragma once

#include <cstdint>

#include "besovlab/littlewood_paley.hpp"

namespace besovlab {

// Deterministic random-field construction: same grid + recipe + seed gives a
// bit-identical field. Spectra are Hermitian-symmetrized with random phases;
// Nyquist rows are left empty so derivatives stay exact.
struct FieldRecipe {
    enum class Spectrum { annulus, powerlaw, multimode, packet };
    Spectrum spectrum = Spectrum::powerlaw;
    std::uint64_t seed = 0;
    double amplitude = 1.0;
    // annulus / packet: dyadic shell index (support strictly inside the
    // annulus {3/4 <= 2^{-j} |k| <= 8/3}).
    int j = 3;
    // powerlaw: |f_hat(k)| ~ |k|^{-alpha} up to the cutoff shell j_cut.
    double alpha = 0.0; // 0 = use default N/2 + 1
    int j_cut = 0;      // 0 = resolved maximum
    // multimode: explicit (frequency, amplitude) list; frequencies as lattice
    // points, mirrored automatically.
    std::vector<std::pair<std::array<int, 3>, double>> modes;
};

Field generate(const FieldRecipe& recipe, const Grid& grid,
               const DyadicPartition& part);
// rank components with decorrelated seeds (seed, seed^0x9e37..., ...).
VectorField generate_vector(const FieldRecipe& recipe, int rank,
                            const Grid& grid, const DyadicPartition& part);

} // namespace besovlab
