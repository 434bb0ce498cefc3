#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "besovlab/field.hpp"

namespace besovlab {

inline constexpr double inf = std::numeric_limits<double>::infinity();

// Exponent bundle for Besov / Chemin-Lerner norms: s regularity, p spatial
// integrability, r block summation, q time integrability.
struct BesovParams {
    double s = 0.0;
    double p = 2.0;
    double r = 1.0;
    double q = inf;
    void validate() const;
};

// Smooth radial dyadic partition of unity. The profile is
// phi(r) = theta(r/2) - theta(r), where theta is a C^inf plateau equal to 1
// on [0, 3/4], vanishing beyond 4/3, built by integrating the bump
// exp(-1/(1-x^2)). Blocks j run over [j_min, j_max] with
// j_max = ceil(log2(k_Nyquist)) + 1 and j_min = -margin; S_j includes all
// content below the range plus the zero mode (low-frequency completion), so
// the decomposition is an exact identity on the torus.
class DyadicPartition {
public:
    static DyadicPartition build(const Grid& grid, int margin = 0);

    const Grid& grid() const { return grid_; }
    int j_min() const { return j_min_; }
    int j_max() const { return j_max_; }
    int blocks() const { return j_max_ - j_min_ + 1; }

    double theta(double r) const;
    double phi(double r) const { return theta(0.5 * r) - theta(r); }

    // Delta_j f (requires j in [j_min, j_max]).
    Field block(const Field& f, int j) const;
    // S_j f = theta(2^{-j} D) f; valid for j in [j_min - 2, j_max + 2].
    Field low_pass(const Field& f, int j) const;

    // ||Delta_j f||_p for all j in range.
    std::vector<double> block_norms(const Field& f, double p) const;
    std::vector<double> block_norms(const VectorField& f, double p) const;

private:
    DyadicPartition(Grid grid, int j_min, int j_max);
    const std::vector<double>& phi_table(int j) const;
    const std::vector<double>& theta_table(int j) const;

    Grid grid_;
    int j_min_, j_max_;
    // multiplier tables per mode; phi for j in [j_min, j_max], theta for
    // j in [j_min - 2, j_max + 2]
    std::shared_ptr<std::vector<std::vector<double>>> phi_tab_;
    std::shared_ptr<std::vector<std::vector<double>>> theta_tab_;
};

double besov_norm(const Field& f, const BesovParams& bp, const DyadicPartition& part);
double besov_norm(const VectorField& f, const BesovParams& bp, const DyadicPartition& part);
// Combine precomputed block norms with (s, r) weights.
double besov_from_blocks(const std::vector<double>& blocks, int j_min,
                         double s, double r);

// Time-indexed record of per-block norms ||Delta_k f(t)||_p.
struct NormSeries {
    std::vector<double> times;
    std::vector<std::vector<double>> blocks; // [time][k - j_min]
    int j_min = 0;
    int j_max = -1;
    BesovParams params; // exponents the series was recorded with

    void append(double t, std::vector<double> block_norms);
    std::size_t samples() const { return times.size(); }
    void validate() const;
    // Per-block L^q(0, t_i; dt) norms by trapezoidal quadrature (q = inf is a
    // running sup); returns the values at the final sample.
    std::vector<double> time_block_norms(double q) const;
    // Same but restricted to the prefix ending at sample index i.
    std::vector<double> time_block_norms(double q, std::size_t upto) const;
};

NormSeries record_series(const Field& f, const BesovParams& bp,
                         const DyadicPartition& part); // single-sample helper

// Chemin-Lerner norm using the series' own exponents (or an override).
double chemin_lerner_norm(const NormSeries& series);
double chemin_lerner_norm(const NormSeries& series, const BesovParams& bp);

// ||d^gamma f||_q / (2^{j|gamma| + j N (1/p - 1/q)} ||f||_p) for a field
// band-limited around scale 2^j.
double bernstein_ratio(const Field& f, const std::array<int, 3>& gamma,
                       double p, double q, int j);
// ||f||_p / (2^{-j k} sup_{|beta|=k} ||d^beta f||_p), the reverse inequality
// for annulus-supported fields (k = |gamma|).
double reverse_bernstein_ratio(const Field& f, int order, double p, int j);

} // namespace besovlab
