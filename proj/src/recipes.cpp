#include "besovlab/recipes.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace besovlab {

namespace {

std::size_t index_of(const Grid& g, const std::array<int, 3>& f) {
    const int m = g.resolution();
    std::size_t idx = 0;
    for (int d = 0; d < g.dim(); ++d) {
        int v = f[static_cast<std::size_t>(d)];
        v = ((v % m) + m) % m;
        idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(v);
    }
    return idx;
}

bool touches_nyquist(const Grid& g, const std::array<int, 3>& f) {
    for (int d = 0; d < g.dim(); ++d)
        if (f[static_cast<std::size_t>(d)] == g.nyquist()) return true;
    return false;
}

// Canonical representative of the +/-k pair: first nonzero component > 0.
bool is_canonical(const Grid& g, const std::array<int, 3>& f) {
    for (int d = 0; d < g.dim(); ++d) {
        int v = f[static_cast<std::size_t>(d)];
        if (v > 0) return true;
        if (v < 0) return false;
    }
    return false; // zero mode handled separately
}

std::array<int, 3> negate(const std::array<int, 3>& f) {
    return {-f[0], -f[1], -f[2]};
}

} // namespace

Field generate(const FieldRecipe& recipe, const Grid& grid,
               const DyadicPartition& part) {
    require_same_grid(grid, part.grid(), "generate");
    std::vector<std::complex<double>> spec(grid.size(), {0.0, 0.0});
    std::mt19937_64 rng(recipe.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    const double amp = recipe.amplitude;
    using Spectrum = FieldRecipe::Spectrum;

    switch (recipe.spectrum) {
    case Spectrum::annulus: {
        // Support strictly inside the shell annulus: 0.8 <= 2^{-j}|k| <= 2.4.
        const double lo = 0.8 * std::ldexp(1.0, recipe.j);
        const double hi = 2.4 * std::ldexp(1.0, recipe.j);
        if (lo < 1.0 || hi > static_cast<double>(grid.nyquist()))
            throw std::invalid_argument(
                "generate(annulus): shell outside the resolved range");
        bool any = false;
        for (std::size_t lin = 0; lin < grid.size(); ++lin) {
            auto f = grid.freqs(lin);
            if (touches_nyquist(grid, f) || !is_canonical(grid, f)) continue;
            double r = grid.abs_wavenumber(lin) / grid.wavenumber_scale();
            if (r < lo || r > hi) continue;
            double phase = 2.0 * std::acos(-1.0) * unif(rng);
            double mag = 0.5 + 0.5 * unif(rng);
            std::complex<double> v = amp * mag * std::polar(1.0, phase);
            spec[lin] = v;
            spec[index_of(grid, negate(f))] = std::conj(v);
            any = true;
        }
        if (!any)
            throw std::invalid_argument(
                "generate(annulus): no lattice modes inside the shell");
        break;
    }
    case Spectrum::powerlaw: {
        const double alpha =
            recipe.alpha > 0.0 ? recipe.alpha : grid.dim() / 2.0 + 1.0;
        const double cut =
            recipe.j_cut > 0 ? std::ldexp(1.0, recipe.j_cut)
                             : static_cast<double>(grid.nyquist()) - 1.0;
        for (std::size_t lin = 0; lin < grid.size(); ++lin) {
            auto f = grid.freqs(lin);
            if (touches_nyquist(grid, f) || !is_canonical(grid, f)) continue;
            double r = grid.abs_wavenumber(lin) / grid.wavenumber_scale();
            if (r > cut) continue;
            double phase = 2.0 * std::acos(-1.0) * unif(rng);
            std::complex<double> v =
                amp * std::pow(r, -alpha) * std::polar(1.0, phase);
            spec[lin] = v;
            spec[index_of(grid, negate(f))] = std::conj(v);
        }
        break;
    }
    case Spectrum::multimode: {
        if (recipe.modes.empty())
            throw std::invalid_argument("generate(multimode): empty mode list");
        for (const auto& [k, a] : recipe.modes) {
            std::array<int, 3> f = k;
            for (int d = grid.dim(); d < 3; ++d)
                if (f[static_cast<std::size_t>(d)] != 0)
                    throw std::invalid_argument(
                        "generate(multimode): frequency uses unavailable axis");
            if (touches_nyquist(grid, f))
                throw std::invalid_argument(
                    "generate(multimode): Nyquist frequencies are excluded");
            bool in_range = true;
            for (int d = 0; d < grid.dim(); ++d)
                in_range = in_range &&
                           std::abs(f[static_cast<std::size_t>(d)]) < grid.nyquist();
            if (!in_range)
                throw std::invalid_argument(
                    "generate(multimode): frequency outside the resolved range");
            double phase = 2.0 * std::acos(-1.0) * unif(rng);
            std::complex<double> v = 0.5 * amp * a * std::polar(1.0, phase);
            bool zero = true;
            for (int vv : f) zero = zero && vv == 0;
            if (zero) {
                spec[0] += std::complex<double>(amp * a, 0.0);
            } else {
                spec[index_of(grid, f)] += v;
                spec[index_of(grid, negate(f))] += std::conj(v);
            }
        }
        break;
    }
    case Spectrum::packet: {
        // Coherent packet: f_hat(k) = amp * phi(2^{-j}|k|) e^{-i k . x0}; the
        // translation keeps the profile but randomizes the position, so
        // sup-norm ratios are reproducible across shells.
        if (recipe.j < part.j_min() || recipe.j > part.j_max())
            throw std::invalid_argument(
                "generate(packet): shell outside the partition range");
        std::array<double, 3> x0{0.0, 0.0, 0.0};
        for (int d = 0; d < grid.dim(); ++d)
            x0[static_cast<std::size_t>(d)] = grid.period() * unif(rng);
        const double scale = grid.wavenumber_scale();
        for (std::size_t lin = 0; lin < grid.size(); ++lin) {
            auto f = grid.freqs(lin);
            if (touches_nyquist(grid, f)) continue;
            double r = grid.abs_wavenumber(lin) / grid.wavenumber_scale();
            double w = part.phi(std::ldexp(r, -recipe.j));
            if (w == 0.0) continue;
            double dot = 0.0;
            for (int d = 0; d < grid.dim(); ++d)
                dot += scale * f[static_cast<std::size_t>(d)] *
                       x0[static_cast<std::size_t>(d)];
            spec[lin] = amp * w * std::polar(1.0, -dot);
        }
        break;
    }
    }

    return Field::from_spectral(grid, std::move(spec));
}

VectorField generate_vector(const FieldRecipe& recipe, int rank,
                            const Grid& grid, const DyadicPartition& part) {
    if (rank < 1) throw std::invalid_argument("generate_vector: rank must be >= 1");
    VectorField out;
    for (int i = 0; i < rank; ++i) {
        FieldRecipe r = recipe;
        r.seed = recipe.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1);
        out.comp.push_back(generate(r, grid, part));
    }
    return out;
}

} // namespace besovlab
