#include "besovlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace besovlab {

WeightSequence::WeightSequence(double c, int j_min, int j_max, int tail_blocks)
    : c_(c), j_min_(j_min), j_max_(j_max), tail_blocks_(tail_blocks) {
    if (!(c > 0.0))
        throw std::invalid_argument("WeightSequence: rate c must be positive");
    if (j_max < j_min)
        throw std::invalid_argument("WeightSequence: empty block range");
    double rate = c_;
    e_ = [rate](int ell, double t) {
        return std::sqrt(1.0 - std::exp(-rate * std::ldexp(1.0, 2 * ell) * t));
    };
}

WeightSequence::WeightSequence(std::function<double(int, double)> e_closure,
                               int j_min, int j_max, int tail_blocks)
    : c_(0.0), j_min_(j_min), j_max_(j_max), tail_blocks_(tail_blocks),
      e_(std::move(e_closure)) {
    if (j_max < j_min)
        throw std::invalid_argument("WeightSequence: empty block range");
    if (!e_)
        throw std::invalid_argument("WeightSequence: empty e closure");
}

double WeightSequence::e(int ell, double t) const {
    if (t < 0.0)
        throw std::invalid_argument("WeightSequence::e: negative time");
    return e_(ell, t);
}

double WeightSequence::omega(int k, double t) const {
    if (k < j_min_ || k > j_max_)
        throw std::invalid_argument("WeightSequence::omega: k out of range");
    if (t < 0.0)
        throw std::invalid_argument("WeightSequence::omega: negative time");
    const int l_stop = j_max_ + tail_blocks_;
    double acc = 0.0;
    for (int ell = k; ell <= l_stop; ++ell)
        acc += std::ldexp(1.0, k - ell) * e_(ell, t);
    // geometric tail, scaled so omega(k, 0) = 0 exactly
    acc += std::ldexp(1.0, k - l_stop) * e_(l_stop + 1, t);
    return acc;
}

void WeightedBesovParams::validate() const {
    base.validate();
    if (horizon < 0.0)
        throw std::invalid_argument("WeightedBesovParams: negative horizon");
}

double weighted_from_blocks(const std::vector<double>& blocks, int j_min,
                            const WeightedBesovParams& wp) {
    wp.validate();
    const double s = wp.base.s, r = wp.base.r;
    if (std::isinf(r)) {
        double mx = 0.0;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            int k = j_min + static_cast<int>(i);
            mx = std::max(mx, std::pow(2.0, s * k) * wp.weights.omega(k, wp.horizon) * blocks[i]);
        }
        return mx;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        int k = j_min + static_cast<int>(i);
        acc += std::pow(std::pow(2.0, s * k) * wp.weights.omega(k, wp.horizon) * blocks[i], r);
    }
    return std::pow(acc, 1.0 / r);
}

double weighted_besov_norm(const Field& f, const WeightedBesovParams& wp,
                           const DyadicPartition& part) {
    return weighted_from_blocks(part.block_norms(f, wp.base.p), part.j_min(), wp);
}

double weighted_besov_norm(const VectorField& f, const WeightedBesovParams& wp,
                           const DyadicPartition& part) {
    return weighted_from_blocks(part.block_norms(f, wp.base.p), part.j_min(), wp);
}

double weighted_cl_norm(const NormSeries& series, const WeightedBesovParams& wp) {
    auto tb = series.time_block_norms(wp.base.q);
    return weighted_from_blocks(tb, series.j_min, wp);
}

SmallnessResult smallness_time(const NormSeries& series,
                               const WeightedBesovParams& wp, double eps) {
    series.validate();
    if (!(eps > 0.0))
        throw std::invalid_argument("smallness_time: eps must be positive");
    auto value_at = [&](std::size_t i) {
        WeightedBesovParams local = wp;
        local.horizon = series.times[i];
        auto running = series.time_block_norms(inf, i);
        return weighted_from_blocks(running, series.j_min, local);
    };
    const std::size_t n = series.samples();
    // The weighted running norm is nondecreasing in the horizon, so bisect
    // for the largest qualifying sample.
    if (value_at(0) > eps) {
        double best = value_at(0);
        return SmallnessResult{series.times[0], best, false};
    }
    std::size_t lo = 0, hi = n - 1;
    if (value_at(hi) <= eps)
        return SmallnessResult{series.times[hi], value_at(hi), true};
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (value_at(mid) <= eps) lo = mid;
        else hi = mid;
    }
    return SmallnessResult{series.times[lo], value_at(lo), true};
}

} // namespace besovlab
