#include "besovlab/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace besovlab {

namespace {

double phi1(double z) {
    if (std::abs(z) < 1e-4)
        return 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
    return std::expm1(z) / z;
}

double phi2(double z) {
    if (std::abs(z) < 1e-4)
        return 0.5 + z / 6.0 + z * z / 24.0 + z * z * z / 120.0;
    return (std::expm1(z) - z) / (z * z);
}

void check_ellipticity(const Field& mu, const Field& lambda, double t) {
    double mu_min = inf, sum_min = inf;
    const auto& m = mu.physical();
    const auto& l = lambda.physical();
    for (std::size_t i = 0; i < m.size(); ++i) {
        mu_min = std::min(mu_min, m[i]);
        sum_min = std::min(sum_min, l[i] + 2.0 * m[i]);
    }
    if (!(mu_min > 0.0))
        throw std::runtime_error(
            "solve_momentum: ellipticity condition mu_bar >= c1 > 0 violated at t=" +
            std::to_string(t) + " (min mu_bar = " + std::to_string(mu_min) + ")");
    if (!(sum_min > 0.0))
        throw std::runtime_error(
            "solve_momentum: ellipticity condition lambda_bar + 2 mu_bar >= c1 > 0 "
            "violated at t=" + std::to_string(t) +
            " (min = " + std::to_string(sum_min) + ")");
}

// div(mu' grad u) + grad((lambda' + mu') div u) + G with the primed
// coefficients (deviation from the frozen means), all products dealiased.
VectorField remainder_rhs(const MomentumProblem& problem, double t,
                          const VectorField& u, double mu0, double lambda0) {
    Field mu = problem.mu_bar(t);
    Field lambda = problem.lambda_bar(t);
    check_ellipticity(mu, lambda, t);
    Field mu_p = mu - Field::constant(mu.grid(), mu0);
    Field sum_p = lambda + mu - Field::constant(mu.grid(), lambda0 + mu0);

    const int dim = u.dim();
    VectorField out;
    Field divu = divergence(u);
    for (int i = 0; i < dim; ++i) {
        // div(mu' grad u^i)
        VectorField gi = gradient(u.comp[i]);
        VectorField flux;
        for (int d = 0; d < dim; ++d)
            flux.comp.push_back(dealiased_product(mu_p, gi.comp[d]));
        Field term = divergence(flux);
        // d_i((lambda' + mu') div u)
        std::array<int, 3> e{0, 0, 0};
        e[static_cast<std::size_t>(i)] = 1;
        term = term + dealiased_product(sum_p, divu).derivative(e);
        out.comp.push_back(std::move(term));
    }
    if (problem.force_state) out = out + problem.force_state(t, u);
    else if (problem.force) out = out + problem.force(t);
    return out;
}

struct SpectralVec {
    std::vector<std::vector<std::complex<double>>> c;
};

SpectralVec to_spec(const VectorField& u) {
    SpectralVec s;
    for (const Field& f : u.comp) s.c.push_back(f.spectral());
    return s;
}

VectorField from_spec(const Grid& g, SpectralVec s) {
    VectorField u;
    for (auto& c : s.c) u.comp.push_back(Field::from_spectral(g, std::move(c)));
    return u;
}

} // namespace

MomentumResult solve_momentum(const MomentumProblem& problem,
                              const VectorField& u0, double T, double dt,
                              const BesovParams& record,
                              const DyadicPartition& part, int record_every) {
    const Grid& g = problem.grid;
    require_same_grid(g, u0.grid(), "solve_momentum");
    require_same_grid(g, part.grid(), "solve_momentum");
    record.validate();
    if (!(T > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("solve_momentum: T and dt must be positive");
    if (record_every < 1)
        throw std::invalid_argument("solve_momentum: record_every must be >= 1");
    if (!problem.mu_bar || !problem.lambda_bar)
        throw std::invalid_argument("solve_momentum: viscosity closures required");
    if (u0.dim() != g.dim())
        throw std::invalid_argument("solve_momentum: u0 rank must equal dim");

    const long n = std::max<long>(1, std::lround(std::ceil(T / dt - 1e-12)));
    dt = T / static_cast<double>(n);
    const int dim = g.dim();
    const double scale = g.wavenumber_scale();

    MomentumResult res;
    res.mu0 = problem.mu_bar(0.0).mean();
    res.lambda0 = problem.lambda_bar(0.0).mean();
    const double nu0 = res.lambda0 + 2.0 * res.mu0;
    if (!(res.mu0 > 0.0) || !(nu0 > 0.0))
        throw std::runtime_error(
            "solve_momentum: frozen means violate ellipticity (mu0 = " +
            std::to_string(res.mu0) + ", lambda0 + 2 mu0 = " + std::to_string(nu0) + ")");

    for (NormSeries* s : {&res.u_series, &res.g_series, &res.rho_series}) {
        s->j_min = part.j_min();
        s->j_max = part.j_max();
        s->params = record;
    }

    auto record_sample = [&](double t, const VectorField& u) {
        res.u_series.append(t, part.block_norms(u, record.p));
        std::vector<double> zero(static_cast<std::size_t>(part.blocks()), 0.0);
        if (problem.force)
            res.g_series.append(t, part.block_norms(problem.force(t), record.p));
        else
            res.g_series.append(t, zero);
        double sup_dev = 0.0;
        if (problem.rho_dev) {
            Field dev = problem.rho_dev(t);
            res.rho_series.append(t, part.block_norms(dev, record.p));
            sup_dev = lp_norm(dev, inf);
        } else {
            res.rho_series.append(t, zero);
        }
        res.rho_sup.push_back(problem.rho_ref + sup_dev);
        double e = lp_norm(u, 2.0);
        res.energy.push_back(e * e);
    };

    VectorField u = u0;
    record_sample(0.0, u);

    // Per-mode decay rates of the frozen constant-coefficient operator.
    const std::size_t nmodes = g.size();
    std::vector<double> k2(nmodes, 0.0);
    for (std::size_t lin = 0; lin < nmodes; ++lin) {
        auto f = g.freqs(lin);
        double acc = 0.0;
        for (int d = 0; d < dim; ++d) acc += double(f[d]) * f[d];
        k2[lin] = acc * scale * scale;
    }

    auto etd_step = [&](const SpectralVec& uc, const SpectralVec& nc,
                        SpectralVec& out, bool stage2, const SpectralVec* na) {
        out.c.assign(static_cast<std::size_t>(dim),
                     std::vector<std::complex<double>>(nmodes));
        for (std::size_t lin = 0; lin < nmodes; ++lin) {
            auto f = g.freqs(lin);
            // parallel projection coefficients
            std::complex<double> kdotu{0.0, 0.0}, kdotn{0.0, 0.0}, kdotna{0.0, 0.0};
            double kk = 0.0;
            for (int d = 0; d < dim; ++d) {
                kdotu += double(f[d]) * uc.c[static_cast<std::size_t>(d)][lin];
                kdotn += double(f[d]) * nc.c[static_cast<std::size_t>(d)][lin];
                if (na) kdotna += double(f[d]) * na->c[static_cast<std::size_t>(d)][lin];
                kk += double(f[d]) * f[d];
            }
            const double zpar = -nu0 * k2[lin] * dt;
            const double zperp = -res.mu0 * k2[lin] * dt;
            for (int d = 0; d < dim; ++d) {
                const std::size_t dd = static_cast<std::size_t>(d);
                std::complex<double> upar{0.0, 0.0}, npar{0.0, 0.0}, napar{0.0, 0.0};
                if (kk > 0.0) {
                    upar = kdotu * (double(f[d]) / kk);
                    npar = kdotn * (double(f[d]) / kk);
                    if (na) napar = kdotna * (double(f[d]) / kk);
                }
                std::complex<double> uperp = uc.c[dd][lin] - upar;
                std::complex<double> nperp = nc.c[dd][lin] - npar;
                std::complex<double> naperp =
                    na ? (na->c[dd][lin] - napar) : std::complex<double>{0.0, 0.0};
                std::complex<double> val;
                if (!stage2) {
                    val = std::exp(zpar) * upar + dt * phi1(zpar) * npar +
                          std::exp(zperp) * uperp + dt * phi1(zperp) * nperp;
                } else {
                    val = upar + dt * phi2(zpar) * (napar - npar) +
                          uperp + dt * phi2(zperp) * (naperp - nperp);
                }
                out.c[dd][lin] = val;
            }
        }
    };

    for (long step = 0; step < n; ++step) {
        const double t = dt * static_cast<double>(step);
        VectorField nn = remainder_rhs(problem, t, u, res.mu0, res.lambda0);
        SpectralVec uc = to_spec(u), nc = to_spec(nn), ac;
        etd_step(uc, nc, ac, false, nullptr);
        VectorField a = from_spec(g, std::move(ac));
        VectorField na = remainder_rhs(problem, t + dt, a, res.mu0, res.lambda0);
        SpectralVec asc = to_spec(a), nac = to_spec(na), outc;
        etd_step(asc, nc, outc, true, &nac);
        u = from_spec(g, std::move(outc));

        if ((step + 1) % record_every == 0 || step + 1 == n)
            record_sample(dt * static_cast<double>(step + 1), u);
    }

    res.final_state = u;
    return res;
}

std::vector<std::pair<int, double>> mode_decay_fit(const NormSeries& series,
                                                   double floor_norm) {
    series.validate();
    if (series.samples() < 2)
        throw std::invalid_argument("mode_decay_fit: needs at least two samples");
    std::vector<std::pair<int, double>> out;
    const std::size_t last = series.samples() - 1;
    const double span = series.times[last] - series.times[0];
    for (int j = series.j_min; j <= series.j_max; ++j) {
        const std::size_t idx = static_cast<std::size_t>(j - series.j_min);
        double b0 = series.blocks[0][idx], b1 = series.blocks[last][idx];
        if (b0 < floor_norm || b1 < floor_norm) continue;
        double rate = std::log(b0 / b1) / span;
        out.emplace_back(j, rate / std::pow(4.0, j));
    }
    return out;
}

MomentumCheck momentum_estimate_check(const MomentumProblem& problem,
                                      const VectorField& u0, double T,
                                      double dt, double s, double p, double q,
                                      MomentumLaw law,
                                      const DyadicPartition& part,
                                      double weight_rate, int a_offset) {
    const double N = part.grid().dim();
    const double conj = (p > 1.0) ? p / (p - 1.0) : inf;
    const double lower = -N * std::min(1.0 / p, 1.0 / conj) + 1.0;

    switch (law) {
    case MomentumLaw::parabolic_gain:
        if (!(p > 1.0 && p <= N))
            throw std::invalid_argument(
                "momentum_estimate_check(parabolic_gain): requires p in (1, N]");
        if (!(s > lower && s <= N / p))
            throw std::invalid_argument(
                "momentum_estimate_check(parabolic_gain): requires s in "
                "(-N*min(1/p,1/p') + 1, N/p]");
        break;
    case MomentumLaw::parabolic_gain_smooth:
        if (!(p > 1.0))
            throw std::invalid_argument(
                "momentum_estimate_check(parabolic_gain_smooth): requires p > 1");
        if (!(s > lower && s <= N / p + 1.0))
            throw std::invalid_argument(
                "momentum_estimate_check(parabolic_gain_smooth): requires s in "
                "(-N*min(1/p,1/p') + 1, N/p + 1]");
        break;
    case MomentumLaw::coercive:
        if (!(p > 1.0 && p <= N))
            throw std::invalid_argument(
                "momentum_estimate_check(coercive): requires p in (1, N]");
        if (!(s > lower && s <= N / p))
            throw std::invalid_argument(
                "momentum_estimate_check(coercive): requires s in "
                "(-N*min(1/p,1/p') + 1, N/p]");
        break;
    case MomentumLaw::endpoint:
        if (!(p >= 2.0 && p <= N))
            throw std::invalid_argument(
                "momentum_estimate_check(endpoint): requires p in [2, N]");
        s = -N / p; // base index is pinned for the endpoint law
        break;
    }
    if (!(q >= 1.0))
        throw std::invalid_argument("momentum_estimate_check: requires q >= 1");

    MomentumCheck out;
    BesovParams record{s, p, 1.0, inf};
    out.run = solve_momentum(problem, u0, T, dt, record, part, 1);
    const MomentumResult& run = out.run;

    WeightSequence ws(weight_rate, part.j_min(), part.j_max());
    auto wparams = [&](double si, double ri) {
        return WeightedBesovParams{BesovParams{si, p, ri, inf}, ws, T};
    };

    double rho_lsup = 0.0;
    for (double v : run.rho_sup) rho_lsup = std::max(rho_lsup, v);
    out.a_factor = std::pow(1.0 + rho_lsup,
                            std::floor(N / p) + static_cast<double>(a_offset));

    auto cl_u = [&](double si, double ri, double qi) {
        return chemin_lerner_norm(run.u_series, {si, p, ri, qi});
    };
    auto cl_g = [&](double si, double ri, double qi) {
        return chemin_lerner_norm(run.g_series, {si, p, ri, qi});
    };
    auto cl_g_w = [&](double si, double ri) {
        WeightedBesovParams wpp = wparams(si, ri);
        wpp.base.q = 1.0;
        return weighted_cl_norm(run.g_series, wpp);
    };
    auto cl_rho_w = [&](double si) {
        WeightedBesovParams wpp = wparams(si, 1.0);
        wpp.base.q = inf;
        return weighted_cl_norm(run.rho_series, wpp);
    };

    switch (law) {
    case MomentumLaw::parabolic_gain:
    case MomentumLaw::parabolic_gain_smooth: {
        out.lhs = cl_u(s - 1.0 + 2.0 / q, 1.0, q);
        out.data_term = besov_norm(u0, {s - 1.0, p, 1.0, inf}, part);
        out.source_term = cl_g(s - 1.0, 1.0, 1.0);
        double rho_idx = (law == MomentumLaw::parabolic_gain) ? N / p : N / p + 1.0;
        double u_idx = (law == MomentumLaw::parabolic_gain) ? s + 1.0 : s;
        out.coupling_term = out.a_factor *
                            chemin_lerner_norm(run.rho_series, {rho_idx, p, 1.0, inf}) *
                            cl_u(u_idx, 1.0, 1.0);
        break;
    }
    case MomentumLaw::coercive: {
        out.lhs = cl_u(s + 1.0, 1.0, 1.0) + cl_u(s, 1.0, 2.0);
        out.data_term = weighted_besov_norm(u0, wparams(s - 1.0, 1.0), part);
        out.source_term = cl_g_w(s - 1.0, 1.0);
        out.coupling_term = out.a_factor * cl_rho_w(N / p) * cl_u(s + 1.0, 1.0, 1.0);
        break;
    }
    case MomentumLaw::endpoint: {
        out.lhs = cl_u(-N / p + 2.0, inf, 1.0) + cl_u(-N / p + 1.0, inf, 2.0);
        out.data_term = besov_norm(u0, {-N / p, p, inf, inf}, part);
        out.source_term = cl_g_w(-N / p, inf);
        out.coupling_term = out.a_factor * cl_rho_w(N / p) * cl_u(-N / p + 2.0, inf, 1.0);
        break;
    }
    }

    double denom = out.data_term + out.source_term + out.coupling_term;
    out.fitted_c = out.lhs / denom;
    return out;
}

} // namespace besovlab
