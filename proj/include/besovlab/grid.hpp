#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace besovlab {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Periodic N-dimensional grid, N in {1,2,3}, M points per axis (power of two),
// side length L. The frequency lattice is {k in Z^N : |k_i| <= M/2} scaled by
// 2*pi/L. The index M/2 along an axis carries the unpaired Nyquist mode.
class Grid {
public:
    // Smallest valid grid; placeholder for default-constructed aggregates.
    Grid() : Grid(1, 8) {}

    Grid(int dim, int resolution, double period = two_pi)
        : dim_(dim), m_(resolution), period_(period) {
        if (dim < 1 || dim > 3)
            throw std::invalid_argument("Grid: dim must be 1, 2 or 3");
        if (resolution < 8 || (resolution & (resolution - 1)) != 0)
            throw std::invalid_argument("Grid: resolution must be a power of two >= 8");
        if (!(period > 0.0))
            throw std::invalid_argument("Grid: period must be positive");
    }

    int dim() const { return dim_; }
    int resolution() const { return m_; }
    double period() const { return period_; }
    double spacing() const { return period_ / m_; }
    // Scaling from integer lattice indices to physical wave numbers.
    double wavenumber_scale() const { return two_pi / period_; }
    double nyquist() const { return wavenumber_scale() * (m_ / 2); }

    std::size_t size() const {
        std::size_t n = 1;
        for (int d = 0; d < dim_; ++d) n *= static_cast<std::size_t>(m_);
        return n;
    }

    // Signed integer frequency of an index along one axis: 0..M/2, then negative.
    int freq_of(int idx) const { return idx <= m_ / 2 ? idx : idx - m_; }

    // Decode a linear (row-major) index into signed integer frequencies.
    std::array<int, 3> freqs(std::size_t linear) const {
        std::array<int, 3> k{0, 0, 0};
        for (int d = dim_ - 1; d >= 0; --d) {
            int idx = static_cast<int>(linear % m_);
            linear /= m_;
            k[d] = freq_of(idx);
        }
        return k;
    }

    // |k| in physical units for a linear spectral index.
    double abs_wavenumber(std::size_t linear) const {
        auto k = freqs(linear);
        double s = 0.0;
        for (int d = 0; d < dim_; ++d) s += double(k[d]) * k[d];
        return wavenumber_scale() * std::sqrt(s);
    }

    bool operator==(const Grid& o) const {
        return dim_ == o.dim_ && m_ == o.m_ && period_ == o.period_;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }

private:
    int dim_;
    int m_;
    double period_;
};

} // namespace besovlab
