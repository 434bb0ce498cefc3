#include "besovlab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace besovlab {

namespace {

VectorField grad_matrix(const VectorField& v) {
    VectorField m;
    for (const Field& c : v.comp) {
        VectorField g = gradient(c);
        for (Field& e : g.comp) m.comp.push_back(std::move(e));
    }
    return m;
}

double velocity_gradient_norm(const VectorField& v, const BesovParams& bp,
                              const DyadicPartition& part, bool with_linf) {
    VectorField gm = grad_matrix(v);
    const double N = part.grid().dim();
    double besov = besov_norm(gm, {N / bp.p, bp.p, bp.r, inf}, part);
    if (!with_linf) return besov;
    return std::max(besov, lp_norm(gm, inf));
}

Field transport_rhs(const TransportProblem& problem, double t, const Field& f,
                    const VectorField& v) {
    Field out = Field::zeros(f.grid());
    if (problem.conservative) {
        VectorField flux;
        for (const Field& vc : v.comp)
            flux.comp.push_back(dealiased_product(vc, f));
        out = -divergence(flux);
    } else {
        out = -advect(v, f);
    }
    if (problem.source) out = out + problem.source(t);
    return out;
}

} // namespace

TransportResult solve_transport(const TransportProblem& problem, const Field& f0,
                                double T, double dt, const BesovParams& record,
                                const DyadicPartition& part,
                                int record_every, bool v_with_linf) {
    require_same_grid(problem.grid, f0.grid(), "solve_transport");
    require_same_grid(problem.grid, part.grid(), "solve_transport");
    record.validate();
    if (!(T > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("solve_transport: T and dt must be positive");
    if (record_every < 1)
        throw std::invalid_argument("solve_transport: record_every must be >= 1");
    if (!problem.velocity)
        throw std::invalid_argument("solve_transport: empty velocity closure");

    const long n = std::max<long>(1, std::lround(std::ceil(T / dt - 1e-12)));
    const double h = problem.grid.spacing();
    dt = T / static_cast<double>(n);

    TransportResult res;
    res.series.j_min = part.j_min();
    res.series.j_max = part.j_max();
    res.series.params = record;

    Field f = f0;
    double v_integral = 0.0, prev_w = 0.0, prev_t = 0.0;
    bool have_prev_w = false;

    auto record_sample = [&](double t, const VectorField& v) {
        res.series.append(t, part.block_norms(f, record.p));
        double w = velocity_gradient_norm(v, record, part, v_with_linf);
        if (have_prev_w) v_integral += 0.5 * (t - prev_t) * (prev_w + w);
        prev_w = w;
        prev_t = t;
        have_prev_w = true;
        res.v_times.push_back(t);
        res.v_values.push_back(v_integral);
    };

    {
        VectorField v0 = problem.velocity(0.0);
        require_same_grid(v0.grid(), problem.grid, "solve_transport velocity");
        record_sample(0.0, v0);
    }

    for (long step = 0; step < n; ++step) {
        const double t = dt * static_cast<double>(step);
        VectorField v1 = problem.velocity(t);

        double vmax = lp_norm(v1, inf);
        if (vmax > 0.0 && dt > 0.5 * h / vmax)
            throw std::runtime_error(
                "solve_transport: CFL violation at t=" + std::to_string(t) +
                " (dt=" + std::to_string(dt) + ", suggested dt <= " +
                std::to_string(0.5 * h / vmax) + ")");

        // SSP-RK3 (Shu-Osher form).
        Field k1 = f + dt * 1.0 * transport_rhs(problem, t, f, v1);
        VectorField v2 = problem.velocity(t + dt);
        Field k2 = f * 0.75 + (k1 + transport_rhs(problem, t + dt, k1, v2) * dt) * 0.25;
        VectorField v3 = problem.velocity(t + 0.5 * dt);
        Field k3 = f * (1.0 / 3.0) +
                   (k2 + transport_rhs(problem, t + 0.5 * dt, k2, v3) * dt) * (2.0 / 3.0);
        f = std::move(k3);

        if ((step + 1) % record_every == 0 || step + 1 == n) {
            VectorField vend = problem.velocity(dt * static_cast<double>(step + 1));
            record_sample(dt * static_cast<double>(step + 1), vend);
        }
    }

    res.final_state = f;
    res.v_total = v_integral;
    return res;
}

TransportCheck transport_estimate_check(const TransportProblem& problem,
                                        const Field& f0, double T, double dt,
                                        const BesovParams& bp,
                                        const DyadicPartition& part,
                                        const WeightedBesovParams* wp) {
    bp.validate();
    const double N = part.grid().dim();
    const double p = bp.p;
    const double s = bp.s;
    const double conj = (p > 1.0) ? p / (p - 1.0) : inf;
    const double lower = -N * std::min(1.0 / p, 1.0 / conj);
    if (!(s > lower))
        throw std::invalid_argument(
            "transport_estimate_check: requires s > -N*min(1/p, 1/p')");
    if (wp) {
        if (bp.r != 1.0)
            throw std::invalid_argument(
                "transport_estimate_check: weighted variant requires r = 1");
        if (!(s <= N / p))
            throw std::invalid_argument(
                "transport_estimate_check: weighted variant requires s <= N/p");
    } else {
        if (!(s < 1.0 + N / p || (s == 1.0 + N / p && bp.r == 1.0)))
            throw std::invalid_argument(
                "transport_estimate_check: requires s < N/p + 1 "
                "(equality only with r = 1)");
    }

    TransportCheck out;
    out.run = solve_transport(problem, f0, T, dt, bp, part,
                              /*record_every=*/1, /*v_with_linf=*/wp == nullptr);
    const NormSeries& series = out.run.series;
    out.v_total = out.run.v_total;

    WeightedBesovParams local = wp ? *wp : WeightedBesovParams{bp, WeightSequence(1.0, part.j_min(), part.j_max()), T};
    if (wp) {
        local.base = bp;
        local.horizon = T;
    }

    auto space_norm = [&](const Field& field) {
        return wp ? weighted_besov_norm(field, local, part)
                  : besov_norm(field, bp, part);
    };

    out.lhs = wp ? weighted_cl_norm(series, local) : chemin_lerner_norm(series, bp);
    out.data_norm = space_norm(f0);

    std::vector<double> g_norms(series.samples(), 0.0);
    if (problem.source)
        for (std::size_t i = 0; i < series.samples(); ++i)
            g_norms[i] = space_norm(problem.source(series.times[i]));

    auto rhs_at = [&](double c) {
        double integral = 0.0;
        for (std::size_t i = 0; i + 1 < series.samples(); ++i) {
            double a = std::exp(-c * out.run.v_values[i]) * g_norms[i];
            double b = std::exp(-c * out.run.v_values[i + 1]) * g_norms[i + 1];
            integral += 0.5 * (series.times[i + 1] - series.times[i]) * (a + b);
        }
        return std::exp(c * out.v_total) * (out.data_norm + integral);
    };

    const double target = out.lhs;
    if (rhs_at(0.0) >= target * (1.0 - 1e-12)) {
        out.fitted_c = 0.0;
        return out;
    }
    double hi = 1.0;
    while (rhs_at(hi) < target && hi < 1e8) hi *= 2.0;
    if (rhs_at(hi) < target)
        throw std::runtime_error(
            "transport_estimate_check: no admissible constant below 1e8 "
            "(V(T) may be zero while the norm grew)");
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (rhs_at(mid) >= target) hi = mid;
        else lo = mid;
    }
    out.fitted_c = hi;
    return out;
}

} // namespace besovlab
