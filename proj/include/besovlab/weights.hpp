#pragma once

#include <functional>

#include "besovlab/littlewood_paley.hpp"

namespace besovlab {

// Time-dependent block weights: e_l(t) = (1 - e^{-c 2^{2l} t})^{1/2} (the
// parabolic default; any family with e in [0,1], nondecreasing in l and t,
// e(0) = 0 is accepted) and omega_k(t) = sum_{l >= k} 2^{k-l} e_l(t).
// The l-sum is truncated at j_max + tail_blocks and closed with the geometric
// tail 2^{k - l_stop} scaled by e_{l_stop+1}(t), so omega(0) = 0 exactly and
// the truncation error stays below 2^{-tail_blocks}.
class WeightSequence {
public:
    WeightSequence(double c, int j_min, int j_max, int tail_blocks = 16);
    // Custom (3.1)-style closure e(l, t).
    WeightSequence(std::function<double(int, double)> e_closure, int j_min,
                   int j_max, int tail_blocks = 16);

    double rate() const { return c_; }
    int j_min() const { return j_min_; }
    int j_max() const { return j_max_; }

    double e(int ell, double t) const;
    double omega(int k, double t) const;

private:
    double c_ = 1.0;
    int j_min_, j_max_, tail_blocks_;
    std::function<double(int, double)> e_;
};

struct WeightedBesovParams {
    BesovParams base;
    WeightSequence weights;
    double horizon = 0.0; // T; weights are evaluated at omega_k(T)
    void validate() const;
};

double weighted_besov_norm(const Field& f, const WeightedBesovParams& wp,
                           const DyadicPartition& part);
double weighted_besov_norm(const VectorField& f, const WeightedBesovParams& wp,
                           const DyadicPartition& part);
double weighted_from_blocks(const std::vector<double>& blocks, int j_min,
                            const WeightedBesovParams& wp);

// Chemin-Lerner norm with each block scaled by omega_k(T).
double weighted_cl_norm(const NormSeries& series, const WeightedBesovParams& wp);

struct SmallnessResult {
    double t_tilde = 0.0;  // largest sampled horizon achieving the bound
    double value = 0.0;    // weighted norm realized at t_tilde
    bool achieved = false; // false => value is the infimum over samples
};

// Largest sampled horizon T~ <= T with the weighted L~inf-in-time norm <= eps
// (bisection over the sample grid; the norm is nondecreasing in the horizon).
SmallnessResult smallness_time(const NormSeries& series,
                               const WeightedBesovParams& wp, double eps);

} // namespace besovlab
