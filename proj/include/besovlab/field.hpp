#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "besovlab/grid.hpp"

namespace besovlab {

// Real scalar field on a periodic grid, held in both physical samples and
// Fourier coefficients. Fields are immutable values: every operation returns
// a new field, so they are safe to share across threads.
class Field {
public:
    // Empty placeholder (no samples); any real field replaces it wholesale.
    Field() : grid_(1, 8) {}

    static Field zeros(const Grid& grid);
    static Field constant(const Grid& grid, double value);
    static Field from_physical(const Grid& grid, std::vector<double> samples);
    static Field from_spectral(const Grid& grid,
                               std::vector<std::complex<double>> coeffs);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& physical() const { return phys_; }
    const std::vector<std::complex<double>>& spectral() const { return spec_; }

    double mean() const { return spec_[0].real(); }
    // Largest deviation from Hermitian symmetry, relative to the peak modulus.
    double hermitian_residual() const;
    // |  ||f||_2^2 - sum |f_hat|^2 |, the Plancherel defect.
    double plancherel_residual() const;

    Field operator+(const Field& o) const;
    Field operator-(const Field& o) const;
    Field operator*(double a) const;
    Field operator-() const { return *this * -1.0; }

    // Spectral multiplication by a radial symbol m(|k|).
    Field apply_radial(const std::function<double(double)>& symbol) const;
    // Spectral differentiation by (i k)^gamma; Nyquist rows are zeroed on the
    // axes with odd order to keep the result real.
    Field derivative(const std::array<int, 3>& gamma) const;

private:
    Field(Grid grid, std::vector<double> phys,
          std::vector<std::complex<double>> spec)
        : grid_(grid), phys_(std::move(phys)), spec_(std::move(spec)) {}

    Grid grid_;
    std::vector<double> phys_;
    std::vector<std::complex<double>> spec_;
};

inline Field operator*(double a, const Field& f) { return f * a; }

// Vector-valued field as one scalar field per component.
struct VectorField {
    std::vector<Field> comp;

    int dim() const { return static_cast<int>(comp.size()); }
    const Grid& grid() const { return comp.at(0).grid(); }

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator*(double a) const;
};

// Antisymmetric matrix field w^{ij} = d_j u^i - d_i u^j; only the strictly
// upper-triangular entries (i < j, row-major pair order) are stored.
struct AntisymField {
    int dim = 0;
    std::vector<Field> upper; // (0,1), (0,2), (1,2)

    // Signed accessor for any (i, j).
    Field entry(int i, int j) const;
    // N = 2 convenience: the single scalar component w^{01}.
    const Field& scalar() const { return upper.at(0); }
};

// Symmetric matrix field; entries for i <= j in row-major pair order.
struct SymField {
    int dim = 0;
    std::vector<Field> entries; // (0,0), (0,1), ..., (1,1), ...
    const Field& entry(int i, int j) const;
};

double lp_norm(const Field& f, double p);
// Vector L^p uses the pointwise Euclidean magnitude.
double lp_norm(const VectorField& u, double p);

VectorField gradient(const Field& f);
Field divergence(const VectorField& u);
AntisymField curl(const VectorField& u);
SymField strain(const VectorField& u);
Field laplacian(const Field& f);

// Pointwise products and compositions, evaluated on a 2x zero-padded grid so
// that quadratic products are exact spectral projections (no aliasing).
Field dealiased_product(const Field& a, const Field& b);
// sum_i a_i * b_i with a single padded pass.
Field dealiased_dot(const VectorField& a, const VectorField& b);
// (v . grad) f
Field advect(const VectorField& v, const Field& f);
// component-wise (v . grad) u
VectorField advect(const VectorField& v, const VectorField& u);
// Pointwise map applied on the padded physical grid, then truncated back.
Field dealiased_map(const Field& f, const std::function<double(double)>& fn);

// Raw padded-grid plumbing (exposed for multi-factor assemblies).
std::vector<double> to_padded_physical(const Field& f);
Field from_padded_physical(const Grid& grid, std::vector<double> padded);

// Doubles every frequency: g(x) = f(2x) exactly, provided f is band-limited
// to half the Nyquist range. Used by the dyadic rescaling studies.
Field octave_shift(const Field& f);
VectorField octave_shift(const VectorField& u);

void require_same_grid(const Grid& a, const Grid& b, const char* where);

} // namespace besovlab
