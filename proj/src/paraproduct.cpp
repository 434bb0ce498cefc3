#include "besovlab/paraproduct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace besovlab {

namespace {

using Padded = std::vector<double>;

void axpy_product(Padded& acc, const Padded& a, const Padded& b) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a[i] * b[i];
}

void add_inplace(Padded& acc, const Padded& a) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a[i];
}

struct PaddedBlocks {
    std::vector<Padded> delta; // [j - j_min]
    Padded low;                // S_{j_min}
};

PaddedBlocks pad_blocks(const Field& f, const DyadicPartition& part) {
    PaddedBlocks out;
    out.delta.reserve(part.blocks());
    for (int j = part.j_min(); j <= part.j_max(); ++j)
        out.delta.push_back(to_padded_physical(part.block(f, j)));
    out.low = to_padded_physical(part.low_pass(f, part.j_min()));
    return out;
}

// sigma_j = S_{max(j-1, j_min)}, accumulated by telescoping so each low-pass
// is one vector addition.
class SigmaAccumulator {
public:
    SigmaAccumulator(const PaddedBlocks& b, int j_min)
        : b_(b), j_min_(j_min), cursor_(j_min), sigma_(b.low) {}

    // Must be called with j increasing from j_min.
    const Padded& at(int j) {
        while (cursor_ < j) {
            ++cursor_;
            if (cursor_ - 2 >= j_min_)
                add_inplace(sigma_, b_.delta[static_cast<std::size_t>(cursor_ - 2 - j_min_)]);
        }
        return sigma_;
    }

private:
    const PaddedBlocks& b_;
    int j_min_;
    int cursor_;
    Padded sigma_;
};

[[noreturn]] void reject(const std::string& what, const std::string& condition) {
    throw std::invalid_argument(what + ": hypothesis violated: " + condition);
}

double guarded_ratio(double num, double denom, const char* what) {
    if (!(denom > 0.0))
        throw std::invalid_argument(std::string(what) +
                                    ": degenerate right-hand side (zero norm)");
    return num / denom;
}

} // namespace

BonySplit bony_split(const Field& u, const Field& v, const DyadicPartition& part) {
    require_same_grid(u.grid(), v.grid(), "bony_split");
    require_same_grid(u.grid(), part.grid(), "bony_split");
    const int j0 = part.j_min(), j1 = part.j_max();

    PaddedBlocks pu = pad_blocks(u, part);
    PaddedBlocks pv = pad_blocks(v, part);
    const std::size_t n = pu.low.size();

    Padded t_uv(n, 0.0), t_vu(n, 0.0), rem(n, 0.0);
    SigmaAccumulator sig_u(pu, j0), sig_v(pv, j0);
    for (int j = j0; j <= j1; ++j) {
        const std::size_t jj = static_cast<std::size_t>(j - j0);
        axpy_product(t_uv, sig_u.at(j), pv.delta[jj]);
        axpy_product(t_vu, sig_v.at(j), pu.delta[jj]);
        for (int k = std::max(j0, j - 1); k <= std::min(j1, j + 1); ++k)
            axpy_product(rem, pu.delta[jj], pv.delta[static_cast<std::size_t>(k - j0)]);
    }
    axpy_product(rem, pu.low, pv.low);

    const Grid& g = u.grid();
    return BonySplit{from_padded_physical(g, std::move(t_uv)),
                     from_padded_physical(g, std::move(t_vu)),
                     from_padded_physical(g, std::move(rem))};
}

Field paraproduct(const Field& g, const Field& f, const DyadicPartition& part) {
    return bony_split(g, f, part).t_uv;
}

Field bony_remainder(const Field& f, const Field& g, const DyadicPartition& part) {
    return bony_split(f, g, part).remainder;
}

double product_estimate_ratio(const Field& f, const Field& g, double s1,
                              double s2, double p, const DyadicPartition& part,
                              ProductLaw law) {
    require_same_grid(f.grid(), g.grid(), "product_estimate_ratio");
    require_same_grid(f.grid(), part.grid(), "product_estimate_ratio");
    if (!(p >= 1.0))
        throw std::invalid_argument("product_estimate_ratio: requires p >= 1");
    const double N = part.grid().dim();
    const double lb = N * std::max(0.0, 2.0 / p - 1.0);
    Field fg = dealiased_product(f, g);

    switch (law) {
    case ProductLaw::two_factor: {
        if (!(s1 > 0.0))
            reject("product_estimate_ratio(two_factor)", "requires s > 0");
        BesovParams bp{s1, p, 1.0, inf};
        double denom = besov_norm(f, bp, part) * lp_norm(g, inf) +
                       lp_norm(f, inf) * besov_norm(g, bp, part);
        return guarded_ratio(besov_norm(fg, bp, part), denom,
                             "product_estimate_ratio(two_factor)");
    }
    case ProductLaw::sum_index: {
        if (!(s1 <= N / p))
            reject("product_estimate_ratio(sum_index)", "requires s1 <= N/p");
        if (!(s2 <= N / p))
            reject("product_estimate_ratio(sum_index)", "requires s2 <= N/p");
        if (!(s1 + s2 > lb))
            reject("product_estimate_ratio(sum_index)",
                   "requires s1 + s2 > N*max(0, 2/p - 1)");
        BesovParams lhs{s1 + s2 - N / p, p, 1.0, inf};
        return guarded_ratio(besov_norm(fg, lhs, part),
                             besov_norm(f, {s1, p, 1.0, inf}, part) *
                                 besov_norm(g, {s2, p, 1.0, inf}, part),
                             "product_estimate_ratio(sum_index)");
    }
    case ProductLaw::endpoint: {
        if (!(s1 <= N / p))
            reject("product_estimate_ratio(endpoint)", "requires s1 <= N/p");
        if (!(s2 < N / p))
            reject("product_estimate_ratio(endpoint)", "requires s2 < N/p");
        if (!(s1 + s2 >= lb))
            reject("product_estimate_ratio(endpoint)",
                   "requires s1 + s2 >= N*max(0, 2/p - 1)");
        BesovParams lhs{s1 + s2 - N / p, p, inf, inf};
        return guarded_ratio(besov_norm(fg, lhs, part),
                             besov_norm(f, {s1, p, 1.0, inf}, part) *
                                 besov_norm(g, {s2, p, inf, inf}, part),
                             "product_estimate_ratio(endpoint)");
    }
    }
    throw std::logic_error("product_estimate_ratio: unknown law");
}

double weighted_paraproduct_ratio(const Field& f, const Field& g, double s1,
                                  double s2, const WeightedBesovParams& wp,
                                  const DyadicPartition& part, ParaPiece piece) {
    require_same_grid(f.grid(), g.grid(), "weighted_paraproduct_ratio");
    require_same_grid(f.grid(), part.grid(), "weighted_paraproduct_ratio");
    wp.validate();
    const double p = wp.base.p;
    const double N = part.grid().dim();

    BonySplit split = bony_split(f, g, part);
    const Field* lhs_field = nullptr;
    switch (piece) {
    case ParaPiece::Tgf:
        if (!(s2 <= N / p))
            reject("weighted_paraproduct_ratio(Tgf)", "requires s2 <= N/p");
        lhs_field = &split.t_vu; // sum_j S_{j-1} g Delta_j f
        break;
    case ParaPiece::Tfg:
        if (!(s1 <= N / p - 1.0))
            reject("weighted_paraproduct_ratio(Tfg)", "requires s1 <= N/p - 1");
        lhs_field = &split.t_uv; // sum_j S_{j-1} f Delta_j g
        break;
    case ParaPiece::R:
        if (!(s1 + s2 > N * std::max(0.0, 2.0 / p - 1.0)))
            reject("weighted_paraproduct_ratio(R)",
                   "requires s1 + s2 > N*max(0, 2/p - 1)");
        lhs_field = &split.remainder;
        break;
    }

    WeightedBesovParams lhs = wp;
    lhs.base = BesovParams{s1 + s2 - N / p, p, 1.0, inf};
    WeightedBesovParams rhs_f = wp;
    rhs_f.base = BesovParams{s1, p, 1.0, inf};
    double denom = weighted_besov_norm(f, rhs_f, part) *
                   besov_norm(g, {s2, p, 1.0, inf}, part);
    return guarded_ratio(weighted_besov_norm(*lhs_field, lhs, part), denom,
                         "weighted_paraproduct_ratio");
}

double weighted_product_ratio(const Field& f, const Field& g, double s1,
                              double s2, const WeightedBesovParams& wp,
                              const DyadicPartition& part, bool endpoint) {
    require_same_grid(f.grid(), g.grid(), "weighted_product_ratio");
    wp.validate();
    const double p = wp.base.p;
    const double N = part.grid().dim();
    const double lb = N * std::max(0.0, 2.0 / p - 1.0);
    const char* what =
        endpoint ? "weighted_product_ratio(endpoint)" : "weighted_product_ratio";
    if (!(s1 <= N / p - 1.0)) reject(what, "requires s1 <= N/p - 1");
    if (endpoint) {
        if (!(s2 < N / p)) reject(what, "requires s2 < N/p");
        if (!(s1 + s2 >= lb)) reject(what, "requires s1 + s2 >= N*max(0, 2/p - 1)");
    } else {
        if (!(s2 <= N / p)) reject(what, "requires s2 <= N/p");
        if (!(s1 + s2 > lb)) reject(what, "requires s1 + s2 > N*max(0, 2/p - 1)");
    }
    const double r_lhs = endpoint ? inf : 1.0;
    Field fg = dealiased_product(f, g);
    WeightedBesovParams lhs = wp;
    lhs.base = BesovParams{s1 + s2 - N / p, p, r_lhs, inf};
    WeightedBesovParams rhs_f = wp;
    rhs_f.base = BesovParams{s1, p, 1.0, inf};
    double denom =
        weighted_besov_norm(f, rhs_f, part) *
        besov_norm(g, {s2, p, endpoint ? inf : 1.0, inf}, part);
    return guarded_ratio(weighted_besov_norm(fg, lhs, part), denom, what);
}

VectorField commutator(int j, const Field& f, const Field& g,
                       const DyadicPartition& part) {
    require_same_grid(f.grid(), g.grid(), "commutator");
    VectorField grad_g = gradient(g);
    VectorField out;
    for (const Field& dg : grad_g.comp)
        out.comp.push_back(part.block(dealiased_product(f, dg), j) -
                           dealiased_product(f, part.block(dg, j)));
    return out;
}

Field div_commutator(int j, const Field& f, const Field& g,
                     const DyadicPartition& part) {
    return divergence(commutator(j, f, g, part));
}

Field advective_commutator(int j, const VectorField& v, const Field& f,
                           const DyadicPartition& part) {
    require_same_grid(v.grid(), f.grid(), "advective_commutator");
    return dealiased_dot(v, gradient(part.block(f, j))) -
           part.block(advect(v, f), j);
}

Field compose(const SmoothMap& map, const Field& f, const DyadicPartition& part) {
    require_same_grid(f.grid(), part.grid(), "compose");
    if (!map.F) throw std::invalid_argument("compose: empty map");
    if (std::abs(map.F(0.0)) > 1e-12)
        throw std::invalid_argument("compose: requires F(0) = 0");
    return dealiased_map(f, map.F);
}

double compose_ratio(const SmoothMap& map, const Field& f, double s, double p,
                     const DyadicPartition& part, const WeightedBesovParams* wp) {
    if (!(s > 0.0))
        throw std::invalid_argument("compose_ratio: requires s > 0");
    Field Ff = compose(map, f, part);
    double amp = std::pow(1.0 + lp_norm(f, inf),
                          std::floor(s) + 2.0);
    if (wp) {
        WeightedBesovParams local = *wp;
        local.base = BesovParams{s, p, 1.0, inf};
        return weighted_besov_norm(Ff, local, part) /
               (amp * weighted_besov_norm(f, local, part));
    }
    BesovParams bp{s, p, 1.0, inf};
    return besov_norm(Ff, bp, part) / (amp * besov_norm(f, bp, part));
}

double compose_telescope_residual(const SmoothMap& map, const Field& f,
                                  const DyadicPartition& part) {
    if (!map.dF)
        throw std::invalid_argument("compose_telescope_residual: map.dF is empty");
    // 8-point Gauss-Legendre nodes/weights on [0, 1].
    static const double xs[8] = {0.5 - 0.48014492824876812, 0.5 - 0.39833323870681336,
                                 0.5 - 0.26276620495816450, 0.5 - 0.09171732124782490,
                                 0.5 + 0.09171732124782490, 0.5 + 0.26276620495816450,
                                 0.5 + 0.39833323870681336, 0.5 + 0.48014492824876812};
    static const double ws[8] = {0.05061426814518813, 0.11119051722668723,
                                 0.15685332293894364, 0.18134189168918099,
                                 0.18134189168918099, 0.15685332293894364,
                                 0.11119051722668723, 0.05061426814518813};

    Field Ff = compose(map, f, part);
    const int j0 = part.j_min(), j1 = part.j_max();

    Padded low = to_padded_physical(part.low_pass(f, j0));
    Padded acc(low.size());
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = map.F(low[i]);

    Padded sj = low; // S_j f, advanced by adding Delta_j f after each term
    for (int j = j0; j <= j1; ++j) {
        Padded dj = to_padded_physical(part.block(f, j));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            double m = 0.0;
            for (int q = 0; q < 8; ++q)
                m += ws[q] * map.dF(sj[i] + xs[q] * dj[i]);
            acc[i] += dj[i] * m;
        }
        add_inplace(sj, dj);
    }

    Field rebuilt = from_padded_physical(f.grid(), std::move(acc));
    double denom = lp_norm(Ff, 2.0);
    if (denom == 0.0) denom = 1.0;
    return lp_norm(rebuilt - Ff, 2.0) / denom;
}

} // namespace besovlab
