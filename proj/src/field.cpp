#include "besovlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "besovlab/fft.hpp"

namespace besovlab {

namespace {

void require_finite(const std::vector<double>& v, const char* where) {
    for (double x : v)
        if (!std::isfinite(x))
            throw std::invalid_argument(std::string(where) + ": non-finite input sample");
}

void require_finite(const std::vector<std::complex<double>>& v, const char* where) {
    for (const auto& c : v)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument(std::string(where) + ": non-finite spectral coefficient");
}

std::size_t pow_size(int m, int dim) {
    std::size_t n = 1;
    for (int d = 0; d < dim; ++d) n *= static_cast<std::size_t>(m);
    return n;
}

// Enumerate the padded-grid frequency tuples a base mode maps to. A Nyquist
// component M/2 is split evenly between +M/2 and -M/2 so the padded field
// stays real and products remain exact projections.
template <typename Fn>
void for_each_pad_target(const Grid& base, std::size_t linear, int pad_m, Fn&& fn) {
    const int m = base.resolution();
    auto k = base.freqs(linear);
    int nyq_axes[3];
    int n_nyq = 0;
    for (int d = 0; d < base.dim(); ++d)
        if (k[d] == m / 2) nyq_axes[n_nyq++] = d;
    const double w = 1.0 / double(1 << n_nyq);
    for (int mask = 0; mask < (1 << n_nyq); ++mask) {
        auto kk = k;
        for (int b = 0; b < n_nyq; ++b)
            if (mask & (1 << b)) kk[nyq_axes[b]] = -m / 2;
        std::size_t idx = 0;
        for (int d = 0; d < base.dim(); ++d) {
            int f = kk[d];
            int i = f >= 0 ? f : f + pad_m;
            idx = idx * pad_m + static_cast<std::size_t>(i);
        }
        fn(idx, w);
    }
}

} // namespace

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
    if (a != b)
        throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

Field Field::zeros(const Grid& grid) {
    return Field(grid, std::vector<double>(grid.size(), 0.0),
                 std::vector<std::complex<double>>(grid.size(), {0.0, 0.0}));
}

Field Field::constant(const Grid& grid, double value) {
    std::vector<std::complex<double>> spec(grid.size(), {0.0, 0.0});
    spec[0] = value;
    return Field(grid, std::vector<double>(grid.size(), value), std::move(spec));
}

Field Field::from_physical(const Grid& grid, std::vector<double> samples) {
    if (samples.size() != grid.size())
        throw std::invalid_argument("Field::from_physical: sample count mismatch");
    require_finite(samples, "Field::from_physical");
    auto spec = fft::forward(grid, samples);
    return Field(grid, std::move(samples), std::move(spec));
}

Field Field::from_spectral(const Grid& grid, std::vector<std::complex<double>> coeffs) {
    if (coeffs.size() != grid.size())
        throw std::invalid_argument("Field::from_spectral: coefficient count mismatch");
    require_finite(coeffs, "Field::from_spectral");
    auto phys = fft::inverse(grid, coeffs);
    return Field(grid, std::move(phys), std::move(coeffs));
}

double Field::hermitian_residual() const {
    const int m = grid_.resolution();
    const int dim = grid_.dim();
    double peak = 0.0;
    for (const auto& c : spec_) peak = std::max(peak, std::abs(c));
    if (peak == 0.0) return 0.0;
    double worst = 0.0;
    const std::size_t n = spec_.size();
    for (std::size_t i = 0; i < n; ++i) {
        // index of the mirrored mode (-k mod M per axis)
        std::size_t rest = i, mirror = 0;
        std::size_t stride = n;
        for (int d = 0; d < dim; ++d) {
            stride /= m;
            int idx = static_cast<int>(rest / stride);
            rest %= stride;
            int mi = idx == 0 ? 0 : m - idx;
            mirror = mirror * m + static_cast<std::size_t>(mi);
        }
        worst = std::max(worst, std::abs(spec_[i] - std::conj(spec_[mirror])));
    }
    return worst / peak;
}

double Field::plancherel_residual() const {
    double e_spec = 0.0;
    for (const auto& c : spec_) e_spec += std::norm(c);
    double n2 = lp_norm(*this, 2.0);
    return std::abs(n2 * n2 - e_spec);
}

Field Field::operator+(const Field& o) const {
    require_same_grid(grid_, o.grid_, "Field::operator+");
    auto phys = phys_;
    auto spec = spec_;
    for (std::size_t i = 0; i < phys.size(); ++i) phys[i] += o.phys_[i];
    for (std::size_t i = 0; i < spec.size(); ++i) spec[i] += o.spec_[i];
    return Field(grid_, std::move(phys), std::move(spec));
}

Field Field::operator-(const Field& o) const {
    require_same_grid(grid_, o.grid_, "Field::operator-");
    auto phys = phys_;
    auto spec = spec_;
    for (std::size_t i = 0; i < phys.size(); ++i) phys[i] -= o.phys_[i];
    for (std::size_t i = 0; i < spec.size(); ++i) spec[i] -= o.spec_[i];
    return Field(grid_, std::move(phys), std::move(spec));
}

Field Field::operator*(double a) const {
    auto phys = phys_;
    auto spec = spec_;
    for (auto& x : phys) x *= a;
    for (auto& c : spec) c *= a;
    return Field(grid_, std::move(phys), std::move(spec));
}

Field Field::apply_radial(const std::function<double(double)>& symbol) const {
    auto spec = spec_;
    for (std::size_t i = 0; i < spec.size(); ++i)
        spec[i] *= symbol(grid_.abs_wavenumber(i));
    return Field::from_spectral(grid_, std::move(spec));
}

Field Field::derivative(const std::array<int, 3>& gamma) const {
    const int m = grid_.resolution();
    const double ks = grid_.wavenumber_scale();
    auto spec = spec_;
    const std::size_t n = spec.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto k = grid_.freqs(i);
        std::complex<double> factor(1.0, 0.0);
        bool kill = false;
        for (int d = 0; d < grid_.dim(); ++d) {
            int g = gamma[d];
            if (g == 0) continue;
            if (k[d] == m / 2 && (g % 2) != 0) { kill = true; break; }
            std::complex<double> ik(0.0, ks * k[d]);
            for (int r = 0; r < g; ++r) factor *= ik;
        }
        spec[i] = kill ? std::complex<double>(0.0, 0.0) : spec[i] * factor;
    }
    return Field::from_spectral(grid_, std::move(spec));
}

VectorField VectorField::operator+(const VectorField& o) const {
    VectorField r;
    for (int d = 0; d < dim(); ++d) r.comp.push_back(comp[d] + o.comp.at(d));
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    VectorField r;
    for (int d = 0; d < dim(); ++d) r.comp.push_back(comp[d] - o.comp.at(d));
    return r;
}

VectorField VectorField::operator*(double a) const {
    VectorField r;
    for (const auto& f : comp) r.comp.push_back(f * a);
    return r;
}

namespace {
int upper_index(int dim, int i, int j) {
    // row-major order of strictly upper-triangular pairs
    int idx = 0;
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) {
            if (a == i && b == j) return idx;
            ++idx;
        }
    throw std::invalid_argument("AntisymField: bad index pair");
}
} // namespace

Field AntisymField::entry(int i, int j) const {
    if (i == j) return Field::zeros(upper.at(0).grid());
    if (i < j) return upper.at(upper_index(dim, i, j));
    return -upper.at(upper_index(dim, j, i));
}

const Field& SymField::entry(int i, int j) const {
    if (i > j) std::swap(i, j);
    int idx = 0;
    for (int a = 0; a < dim; ++a)
        for (int b = a; b < dim; ++b) {
            if (a == i && b == j) return entries.at(idx);
            ++idx;
        }
    throw std::invalid_argument("SymField: bad index pair");
}

double lp_norm(const Field& f, double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("lp_norm: p must be >= 1 (or infinity)");
    const auto& v = f.physical();
    if (std::isinf(p)) {
        double mx = 0.0;
        for (double x : v) mx = std::max(mx, std::abs(x));
        return mx;
    }
    double acc = 0.0;
    for (double x : v) acc += std::pow(std::abs(x), p);
    return std::pow(acc / double(v.size()), 1.0 / p);
}

double lp_norm(const VectorField& u, double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("lp_norm: p must be >= 1 (or infinity)");
    const std::size_t n = u.grid().size();
    double acc = 0.0, mx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (int d = 0; d < u.dim(); ++d) {
            double x = u.comp[d].physical()[i];
            s += x * x;
        }
        double mag = std::sqrt(s);
        if (std::isinf(p)) mx = std::max(mx, mag);
        else acc += std::pow(mag, p);
    }
    if (std::isinf(p)) return mx;
    return std::pow(acc / double(n), 1.0 / p);
}

VectorField gradient(const Field& f) {
    VectorField g;
    for (int d = 0; d < f.grid().dim(); ++d) {
        std::array<int, 3> gamma{0, 0, 0};
        gamma[d] = 1;
        g.comp.push_back(f.derivative(gamma));
    }
    return g;
}

Field divergence(const VectorField& u) {
    if (u.dim() != u.grid().dim())
        throw std::invalid_argument("divergence: needs a rank-vector field");
    Field acc = Field::zeros(u.grid());
    for (int d = 0; d < u.dim(); ++d) {
        std::array<int, 3> gamma{0, 0, 0};
        gamma[d] = 1;
        acc = acc + u.comp[d].derivative(gamma);
    }
    return acc;
}

AntisymField curl(const VectorField& u) {
    if (u.dim() != u.grid().dim())
        throw std::invalid_argument("curl: needs a rank-vector field");
    AntisymField w;
    w.dim = u.dim();
    for (int i = 0; i < u.dim(); ++i)
        for (int j = i + 1; j < u.dim(); ++j) {
            std::array<int, 3> dj{0, 0, 0}, di{0, 0, 0};
            dj[j] = 1;
            di[i] = 1;
            // w^{ij} = d_j u^i - d_i u^j
            w.upper.push_back(u.comp[i].derivative(dj) - u.comp[j].derivative(di));
        }
    return w;
}

SymField strain(const VectorField& u) {
    SymField s;
    s.dim = u.dim();
    for (int i = 0; i < u.dim(); ++i)
        for (int j = i; j < u.dim(); ++j) {
            std::array<int, 3> dj{0, 0, 0}, di{0, 0, 0};
            dj[j] = 1;
            di[i] = 1;
            s.entries.push_back((u.comp[i].derivative(dj) + u.comp[j].derivative(di)) * 0.5);
        }
    return s;
}

Field laplacian(const Field& f) {
    Field acc = Field::zeros(f.grid());
    for (int d = 0; d < f.grid().dim(); ++d) {
        std::array<int, 3> gamma{0, 0, 0};
        gamma[d] = 2;
        acc = acc + f.derivative(gamma);
    }
    return acc;
}

std::vector<double> to_padded_physical(const Field& f) {
    const Grid& g = f.grid();
    const int pad_m = 2 * g.resolution();
    std::vector<std::complex<double>> padded(pow_size(pad_m, g.dim()), {0.0, 0.0});
    const auto& spec = f.spectral();
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (spec[i] == std::complex<double>(0.0, 0.0)) continue;
        for_each_pad_target(g, i, pad_m, [&](std::size_t idx, double w) {
            padded[idx] += w * spec[i];
        });
    }
    fft::inverse_c2c(g.dim(), pad_m, padded);
    std::vector<double> out(padded.size());
    for (std::size_t i = 0; i < padded.size(); ++i) out[i] = padded[i].real();
    return out;
}

Field from_padded_physical(const Grid& grid, std::vector<double> padded) {
    const int pad_m = 2 * grid.resolution();
    const std::size_t pn = pow_size(pad_m, grid.dim());
    if (padded.size() != pn)
        throw std::invalid_argument("from_padded_physical: size mismatch");
    std::vector<std::complex<double>> spec_pad(padded.begin(), padded.end());
    fft::forward_c2c(grid.dim(), pad_m, spec_pad);
    const double scale = 1.0 / double(pn);
    std::vector<std::complex<double>> spec(grid.size(), {0.0, 0.0});
    for (std::size_t i = 0; i < spec.size(); ++i) {
        std::complex<double> acc(0.0, 0.0);
        for_each_pad_target(grid, i, pad_m, [&](std::size_t idx, double) {
            acc += spec_pad[idx];
        });
        spec[i] = acc * scale;
    }
    return Field::from_spectral(grid, std::move(spec));
}

Field dealiased_product(const Field& a, const Field& b) {
    require_same_grid(a.grid(), b.grid(), "dealiased_product");
    auto pa = to_padded_physical(a);
    auto pb = to_padded_physical(b);
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
    return from_padded_physical(a.grid(), std::move(pa));
}

Field dealiased_dot(const VectorField& a, const VectorField& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dealiased_dot: dimension mismatch");
    require_same_grid(a.grid(), b.grid(), "dealiased_dot");
    std::vector<double> acc;
    for (int d = 0; d < a.dim(); ++d) {
        auto pa = to_padded_physical(a.comp[d]);
        auto pb = to_padded_physical(b.comp[d]);
        if (acc.empty()) acc.assign(pa.size(), 0.0);
        for (std::size_t i = 0; i < pa.size(); ++i) acc[i] += pa[i] * pb[i];
    }
    return from_padded_physical(a.grid(), std::move(acc));
}

Field advect(const VectorField& v, const Field& f) {
    return dealiased_dot(v, gradient(f));
}

VectorField advect(const VectorField& v, const VectorField& u) {
    VectorField r;
    for (int d = 0; d < u.dim(); ++d) r.comp.push_back(advect(v, u.comp[d]));
    return r;
}

Field dealiased_map(const Field& f, const std::function<double(double)>& fn) {
    auto p = to_padded_physical(f);
    for (auto& x : p) x = fn(x);
    return from_padded_physical(f.grid(), std::move(p));
}

Field octave_shift(const Field& f) {
    const Grid& g = f.grid();
    const int m = g.resolution();
    const auto& spec = f.spectral();
    double peak = 0.0;
    for (const auto& c : spec) peak = std::max(peak, std::abs(c));
    std::vector<std::complex<double>> out(spec.size(), {0.0, 0.0});
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (std::abs(spec[i]) == 0.0) continue;
        auto k = g.freqs(i);
        bool fits = true;
        for (int d = 0; d < g.dim(); ++d)
            if (std::abs(k[d]) > m / 4) fits = false;
        if (!fits) {
            if (std::abs(spec[i]) > 1e-12 * peak)
                throw std::invalid_argument(
                    "octave_shift: field has content above half the Nyquist range");
            continue;
        }
        std::size_t idx = 0;
        for (int d = 0; d < g.dim(); ++d) {
            int kk = 2 * k[d];
            idx = idx * m + static_cast<std::size_t>(kk >= 0 ? kk : kk + m);
        }
        out[idx] = spec[i];
    }
    return Field::from_spectral(g, std::move(out));
}

VectorField octave_shift(const VectorField& u) {
    VectorField r;
    for (const auto& f : u.comp) r.comp.push_back(octave_shift(f));
    return r;
}

} // namespace besovlab
