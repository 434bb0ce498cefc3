#include "besovlab/cns.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace besovlab {

namespace {

double min_phys(const Field& f) {
    double m = inf;
    for (double v : f.physical()) m = std::min(m, v);
    return m;
}

double max_phys(const Field& f) {
    double m = -inf;
    for (double v : f.physical()) m = std::max(m, v);
    return m;
}

Field coefficient_field(const Field& a, const MaterialLaws& laws,
                        const std::function<double(double)>& of_rho) {
    const double r0 = laws.rho_bar0;
    return dealiased_map(a, [&](double av) { return of_rho(r0 * (1.0 + av)); });
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        acc += 0.5 * (t[i + 1] - t[i]) * (y[i] + y[i + 1]);
    return acc;
}

// ||grad u||_{B^{N/p}_{p,1}} and its sup norm.
std::pair<double, double> grad_norms(const VectorField& u, double p,
                                     const DyadicPartition& part) {
    VectorField gm;
    for (const Field& c : u.comp) {
        VectorField g = gradient(c);
        for (Field& e : g.comp) gm.comp.push_back(std::move(e));
    }
    const double N = part.grid().dim();
    return {besov_norm(gm, {N / p, p, 1.0, inf}, part), lp_norm(gm, inf)};
}

// Prefix Chemin-Lerner norm of a recorded series.
double prefix_cl(const NormSeries& series, std::size_t upto, double s,
                 double r, double q) {
    return besov_from_blocks(series.time_block_norms(q, upto), series.j_min, s, r);
}

double prefix_cl_weighted(const NormSeries& series, std::size_t upto, double s,
                          const WeightSequence& ws, double horizon, double q) {
    WeightedBesovParams wp{BesovParams{s, series.params.p, 1.0, q}, ws, horizon};
    return weighted_from_blocks(series.time_block_norms(q, upto), series.j_min, wp);
}

} // namespace

MaterialLaws shallow_water_preset(double rho_bar0, double c0) {
    MaterialLaws laws;
    laws.mu = [](double rho) { return rho; };
    laws.lam = [](double) { return 0.0; };
    laws.P = [](double rho) { return rho * rho; };
    laws.dP = [](double rho) { return 2.0 * rho; };
    laws.rho_bar0 = rho_bar0;
    laws.c0 = c0;
    return laws;
}

std::pair<Field, VectorField> reformulate(const Field& rho0,
                                          const VectorField& u0,
                                          const MaterialLaws& laws) {
    require_same_grid(rho0.grid(), u0.grid(), "reformulate");
    double mn = min_phys(rho0);
    if (mn < laws.c0)
        throw std::invalid_argument(
            "reformulate: density below the floor c0 (min rho0 = " +
            std::to_string(mn) + ", c0 = " + std::to_string(laws.c0) + ")");
    Field a = rho0 * (1.0 / laws.rho_bar0) - Field::constant(rho0.grid(), 1.0);
    return {a, u0};
}

Field cns_F(const Field& a, const VectorField& u) {
    Field divu = divergence(u);
    return -divu - dealiased_product(a, divu);
}

VectorField cns_G(const Field& a, const VectorField& u,
                  const MaterialLaws& laws) {
    const double r0 = laws.rho_bar0;
    Field cP = coefficient_field(a, laws,
                                 [&](double r) { return r0 * laws.dP(r) / r; });
    Field cA = coefficient_field(a, laws,
                                 [&](double r) { return laws.mu(r) / (r * r); });
    Field cB = coefficient_field(a, laws, [&](double r) {
        return (laws.mu(r) + laws.lam(r)) / (r * r);
    });
    VectorField grad_a = gradient(a);
    VectorField grad_rho = grad_a * r0;
    Field divu = divergence(u);
    VectorField conv = advect(u, u);

    VectorField g;
    for (int i = 0; i < u.dim(); ++i) {
        Field gi = -conv.comp[static_cast<std::size_t>(i)] -
                   dealiased_product(cP, grad_a.comp[static_cast<std::size_t>(i)]);
        gi = gi + dealiased_product(
                      cA, dealiased_dot(grad_rho,
                                        gradient(u.comp[static_cast<std::size_t>(i)])));
        gi = gi + dealiased_product(
                      cB, dealiased_product(grad_rho.comp[static_cast<std::size_t>(i)], divu));
        g.comp.push_back(std::move(gi));
    }
    return g;
}

MollifiedData mollify_data(const Field& a0, const VectorField& u0, int n,
                           const DyadicPartition& part,
                           const MaterialLaws& laws) {
    require_same_grid(a0.grid(), part.grid(), "mollify_data");
    if (n < part.j_min() - 2)
        throw std::invalid_argument("mollify_data: level n below resolved range");
    auto low = [&](const Field& f, int j) {
        if (j > part.j_max() + 1) return f; // multiplier is identically 1
        return part.low_pass(f, std::min(j, part.j_max() + 2));
    };
    const double floor = 0.75 * laws.c0;
    for (int shift = 0; n + shift <= part.j_max() + 2; ++shift) {
        Field an = low(a0, n + shift);
        if (laws.rho_bar0 * (1.0 + min_phys(an)) >= floor) {
            MollifiedData out{an, {}, shift};
            for (const Field& c : u0.comp) out.u.comp.push_back(low(c, n));
            return out;
        }
    }
    throw std::runtime_error(
        "mollify_data: no shift in the resolved range keeps rho0(1+a) >= (3/4) c0 "
        "(data too rough at this resolution)");
}

namespace {

// Half-step of d_t a = -div((1 + a) u) with u frozen, one SSP-RK3 step.
Field transport_half_step(const Field& a, const VectorField& u, double h) {
    const double grid_h = a.grid().spacing();
    const double vmax = lp_norm(u, inf);
    if (vmax > 0.0 && h > 0.5 * grid_h / vmax)
        throw std::runtime_error(
            "cns_step: CFL violation in the transport half-step (dt/2 = " +
            std::to_string(h) + ", suggested dt <= " +
            std::to_string(grid_h / vmax) + ")");
    auto rhs = [&](const Field& q) {
        VectorField flux;
        for (const Field& c : u.comp)
            flux.comp.push_back(c + dealiased_product(q, c));
        return -divergence(flux);
    };
    Field k1 = a + rhs(a) * h;
    Field k2 = a * 0.75 + (k1 + rhs(k1) * h) * 0.25;
    return a * (1.0 / 3.0) + (k2 + rhs(k2) * h) * (2.0 / 3.0);
}

} // namespace

SolverState cns_step(const SolverState& state, const MaterialLaws& laws,
                     double dt, const DyadicPartition& part) {
    if (!(dt > 0.0)) throw std::invalid_argument("cns_step: dt must be positive");
    SolverState next = state;

    Field a_half = transport_half_step(state.a, state.u, 0.5 * dt);

    MomentumProblem mp;
    mp.grid = state.a.grid();
    Field mu_bar =
        coefficient_field(a_half, laws, [&](double r) { return laws.mu(r) / r; });
    Field lam_bar =
        coefficient_field(a_half, laws, [&](double r) { return laws.lam(r) / r; });
    mp.mu_bar = [mu_bar](double) { return mu_bar; };
    mp.lambda_bar = [lam_bar](double) { return lam_bar; };
    mp.force_state = [&a_half, &laws](double, const VectorField& uu) {
        return cns_G(a_half, uu, laws);
    };
    mp.rho_ref = laws.rho_bar0;
    BesovParams rec{0.0, 2.0, 1.0, inf};
    MomentumResult mres = solve_momentum(mp, state.u, dt, dt, rec, part, 1);
    next.u = mres.final_state;

    next.a = transport_half_step(a_half, next.u, 0.5 * dt);
    next.t = state.t + dt;

    // H1 / H2 snapshot; a breach marks the state unhealthy but the step
    // result is kept for post-mortem inspection.
    const double rho_min = laws.rho_bar0 * (1.0 + min_phys(next.a));
    const double rho_max = laws.rho_bar0 * (1.0 + max_phys(next.a));
    next.monitor.min_density = rho_min;
    next.monitor.h1 = rho_min >= 0.5 * laws.c0;
    double mu_min = inf, l2m_min = inf;
    for (int i = 0; i <= 64; ++i) {
        double r = rho_min + (rho_max - rho_min) * (i / 64.0);
        if (r <= 0.0) { mu_min = -inf; l2m_min = -inf; break; }
        double mb = laws.mu(r) / r, lb = laws.lam(r) / r;
        mu_min = std::min(mu_min, mb);
        l2m_min = std::min(l2m_min, lb + 2.0 * mb);
    }
    next.monitor.min_mu_bar = mu_min;
    next.monitor.min_lam_2mu = l2m_min;
    next.monitor.h2 =
        mu_min >= next.monitor.c1 && l2m_min >= next.monitor.c1 && mu_min > 0.0;
    return next;
}

bool BudgetConstants::all_hold() const {
    for (const auto& p : predicates)
        if (!p.holds) return false;
    return true;
}

CnsRun run_scheme(const Field& a0_in, const VectorField& u0_in,
                  const MaterialLaws& laws, const SolverConfig& cfg,
                  const DyadicPartition& part) {
    require_same_grid(a0_in.grid(), part.grid(), "run_scheme");
    if (!(cfg.T > 0.0) || !(cfg.dt > 0.0) || !(cfg.eta > 0.0))
        throw std::invalid_argument("run_scheme: T, dt, eta must be positive");

    Field a0 = a0_in;
    VectorField u0 = u0_in;
    CnsRun run;
    run.config = cfg;
    run.laws = laws;
    if (cfg.mollify_n >= 0) {
        MollifiedData md = mollify_data(a0, u0, cfg.mollify_n, part, laws);
        a0 = md.a;
        u0 = md.u;
        run.mollify_shift = md.shift;
    }

    const double N = part.grid().dim();
    const double p = cfg.p;
    BesovParams rec{0.0, p, 1.0, inf};
    for (NormSeries* s : {&run.a_series, &run.u_series, &run.f_series}) {
        s->j_min = part.j_min();
        s->j_max = part.j_max();
        s->params = rec;
    }

    const long nsteps =
        std::max<long>(1, std::lround(std::ceil(cfg.T / cfg.dt - 1e-12)));
    const double dt = cfg.T / static_cast<double>(nsteps);

    SolverState state{a0, u0, 0.0, {}};
    std::vector<double> max_density;

    auto record = [&](const SolverState& st) {
        run.times.push_back(st.t);
        run.a_series.append(st.t, part.block_norms(st.a, p));
        run.u_series.append(st.t, part.block_norms(st.u, p));
        Field F = cns_F(st.a, st.u);
        run.f_series.append(st.t, part.block_norms(F, p));
        run.f_sup.push_back(lp_norm(F, inf));
        run.mass.push_back(laws.rho_bar0 * (1.0 + st.a.mean()));
        run.min_density.push_back(laws.rho_bar0 * (1.0 + min_phys(st.a)));
        max_density.push_back(laws.rho_bar0 * (1.0 + max_phys(st.a)));
        run.a_sup.push_back(lp_norm(st.a, inf));
        auto [gb, gs] = grad_norms(st.u, p, part);
        run.grad_u_besov.push_back(gb);
        run.grad_u_sup.push_back(gs);
        if (cfg.store_snapshots) {
            run.a_snapshots.push_back(st.a);
            run.u_snapshots.push_back(st.u);
        }
    };

    record(state);
    for (long step = 0; step < nsteps; ++step) {
        state = cns_step(state, laws, dt, part);
        if ((step + 1) % cfg.record_every == 0 || step + 1 == nsteps)
            record(state);
    }
    run.a_final = state.a;
    run.u_final = state.u;

    // ---- constant fitting from the run's own linear-estimate residuals ----
    BudgetConstants& B = run.budget;
    B.eta = cfg.eta;
    B.E0 = besov_norm(a0, {N / p, p, 1.0, inf}, part) +
           besov_norm(u0, {N / p - 1.0, p, 1.0, inf}, part);
    const double E0 = B.E0, eta = cfg.eta, T = cfg.T;
    const double m_exp = std::floor(N / p) + static_cast<double>(cfg.a_offset);

    const std::size_t last = run.times.size() - 1;
    const double Vt = trapezoid(run.times, run.grad_u_besov);
    const double lhs_a_inf = prefix_cl(run.a_series, last, N / p, 1.0, inf);
    const double lhs_u_inf = prefix_cl(run.u_series, last, N / p - 1.0, 1.0, inf);
    const double h3_value = lhs_a_inf + lhs_u_inf;
    const double a_amp = std::pow(1.0 + lhs_a_inf, m_exp);

    WeightSequence ws(cfg.weight_rate, part.j_min(), part.j_max());
    auto w_norm = [&](const auto& field, double s, double horizon) {
        return weighted_besov_norm(
            field, WeightedBesovParams{BesovParams{s, p, 1.0, inf}, ws, horizon},
            part);
    };
    const double wa0 = w_norm(a0, N / p, T);
    const double wu0 = w_norm(u0, N / p - 1.0, T);
    const double lhs_a_w = prefix_cl_weighted(run.a_series, last, N / p, ws, T, inf);
    const double lhs_u12 = prefix_cl(run.u_series, last, N / p + 1.0, 1.0, 1.0) +
                           prefix_cl(run.u_series, last, N / p, 1.0, 2.0);

    const bool zero_data = E0 < 1e-14;
    if (zero_data) {
        B.C1 = B.C2 = B.C3 = B.C4 = 0.0;
        B.C0 = B.A0 = 0.0;
    } else {
        // C1: smallest C reproducing the unweighted closure bound.
        auto closure = [&](double c) {
            return c * std::exp(c * Vt) * (E0 + (4.0 * c * E0 + 1.0) * eta) +
                   c * a_amp * 4.0 * c * E0 * (T + eta);
        };
        double hi = 1.0;
        while (closure(hi) < h3_value && hi < 1e8) hi *= 2.0;
        double lo = 0.0;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            if (closure(mid) >= h3_value) hi = mid;
            else lo = mid;
        }
        B.C1 = hi;
        B.C0 = 4.0 * B.C1;
        // C2: smallest C with C e^{C V}(||a0||_w + int ||F||_w) >= weighted LHS
        // (the shape of the weighted transport estimate applied to the mass
        // equation, with the constant multiplying the whole right-hand side).
        const double wf_int =
            prefix_cl_weighted(run.f_series, last, N / p, ws, T, 1.0);
        const double w_data = wa0 + wf_int;
        if (w_data > 0.0 && lhs_a_w > 0.0) {
            auto w_closure = [&](double c) {
                return c * std::exp(c * Vt) * w_data;
            };
            double whi = 1.0;
            while (w_closure(whi) < lhs_a_w && whi < 1e8) whi *= 2.0;
            double wlo = 0.0;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (wlo + whi);
                if (w_closure(mid) >= lhs_a_w) whi = mid;
                else wlo = mid;
            }
            B.C2 = whi;
        } else {
            B.C2 = 0.0;
        }
        B.A0 = 2.0 * B.C2 * (1.0 + B.C0 * E0);
        double c3_den = wu0 + eta * eta + B.A0 * a_amp * eta * (T + eta);
        B.C3 = (c3_den > 0.0) ? lhs_u12 / c3_den : 0.0;
        double f_l1_sup = trapezoid(run.times, run.f_sup);
        double gu_l1_sup = trapezoid(run.times, run.grad_u_sup);
        double a_sup_max = *std::max_element(run.a_sup.begin(), run.a_sup.end());
        B.C4 = (gu_l1_sup > 0.0)
                   ? f_l1_sup / ((1.0 + a_sup_max) * gu_l1_sup)
                   : 0.0;
    }

    // c1 threshold from the realized density range.
    {
        double rmin = *std::min_element(run.min_density.begin(), run.min_density.end());
        double rmax = *std::max_element(max_density.begin(), max_density.end());
        double mu_min = inf, l2m_min = inf;
        for (int i = 0; i <= 128; ++i) {
            double r = rmin + (rmax - rmin) * (i / 128.0);
            if (r <= 0.0) { mu_min = 0.0; l2m_min = 0.0; break; }
            double mb = laws.mu(r) / r, lb = laws.lam(r) / r;
            mu_min = std::min(mu_min, mb);
            l2m_min = std::min(l2m_min, lb + 2.0 * mb);
        }
        B.c1 = 0.5 * std::min(mu_min, l2m_min);
    }

    auto pred = [&](const std::string& name, double lhs, double rhs, bool strict) {
        BudgetConstants::Predicate q;
        q.name = name;
        q.lhs = lhs;
        q.rhs = rhs;
        q.holds = zero_data || (strict ? lhs < rhs : lhs <= rhs);
        B.predicates.push_back(q);
    };
    const double pow_term = std::pow(B.C0 * E0 + 1.0, m_exp);
    pred("exp(C1*eta) < 3/2", std::exp(B.C1 * eta), 1.5, true);
    pred("(C0*E0 + 1)*eta <= E0", (B.C0 * E0 + 1.0) * eta, E0, false);
    pred("C1*(C0*E0 + 1)^m*eta <= 1/16", B.C1 * pow_term * eta, 1.0 / 16.0, false);
    pred("C3*eta <= 1/6", B.C3 * eta, 1.0 / 6.0, false);
    pred("C3*A0*(1 + C0*E0)^m*eta <= 1/6", B.C3 * B.A0 * pow_term * eta,
         1.0 / 6.0, false);
    pred("C4*(1 + C0*E0)*eta < c0/8", B.C4 * (1.0 + B.C0 * E0) * eta,
         laws.c0 / 8.0, true);
    pred("C1*(C0*E0 + 1)^m*T <= 1/16", B.C1 * pow_term * T, 1.0 / 16.0, false);
    pred("C3*A0*(1 + C0*E0)^m*T <= 1/6", B.C3 * B.A0 * pow_term * T,
         1.0 / 6.0, false);
    pred("weighted ||a0|| <= A0*eta/12", wa0, B.A0 * eta / 12.0, false);
    pred("weighted ||u0|| <= eta/(6*C3)", wu0,
         (B.C3 > 0.0) ? eta / (6.0 * B.C3) : inf, false);
    B.T_star = B.all_hold() ? T : 0.0;

    // ---- retroactive hypothesis trace with the fitted budget ----
    run.monitor_trace.clear();
    run.first_breach_time = inf;
    for (std::size_t i = 0; i < run.times.size(); ++i) {
        HypothesisStatus h;
        h.c1 = B.c1;
        h.min_density = run.min_density[i];
        h.h1 = h.min_density >= 0.5 * laws.c0;
        {
            double rmin = run.min_density[i], rmax = max_density[i];
            double mu_min = inf, l2m_min = inf;
            for (int k = 0; k <= 64; ++k) {
                double r = rmin + (rmax - rmin) * (k / 64.0);
                if (r <= 0.0) { mu_min = -inf; l2m_min = -inf; break; }
                double mb = laws.mu(r) / r, lb = laws.lam(r) / r;
                mu_min = std::min(mu_min, mb);
                l2m_min = std::min(l2m_min, lb + 2.0 * mb);
            }
            h.min_mu_bar = mu_min;
            h.min_lam_2mu = l2m_min;
            h.h2 = mu_min >= B.c1 && l2m_min >= B.c1;
        }
        h.h3_value = prefix_cl(run.a_series, i, N / p, 1.0, inf) +
                     prefix_cl(run.u_series, i, N / p - 1.0, 1.0, inf);
        h.h3_budget = B.C0 * E0;
        h.h3 = zero_data || h.h3_value <= h.h3_budget;
        h.h4_a_value =
            prefix_cl_weighted(run.a_series, i, N / p, ws, run.times[i], inf);
        h.h4_a_budget = B.A0 * eta;
        h.h4_u_value = prefix_cl(run.u_series, i, N / p + 1.0, 1.0, 1.0) +
                       prefix_cl(run.u_series, i, N / p, 1.0, 2.0);
        h.h4_u_budget = eta;
        h.h4 = zero_data ||
               (h.h4_a_value <= h.h4_a_budget && h.h4_u_value <= h.h4_u_budget);
        if (!h.healthy() && run.first_breach_time == inf)
            run.first_breach_time = run.times[i];
        run.monitor_trace.push_back(h);
    }
    run.healthy_to_end = run.first_breach_time == inf;

    run.h3_realized = h3_value;
    run.h3_target = 7.0 / 8.0 * B.C0 * E0;
    run.h4_a_realized = lhs_a_w;
    run.h4_a_target = 7.0 / 8.0 * B.A0 * eta;
    run.h4_u_realized = lhs_u12;
    run.h4_u_target = 2.0 / 3.0 * eta;
    run.h1_realized =
        *std::min_element(run.min_density.begin(), run.min_density.end());
    run.h1_target = 5.0 / 8.0 * laws.c0;
    return run;
}

double log_interpolation_ratio(const Field& f, double s, double p, double eps,
                               const DyadicPartition& part) {
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::invalid_argument("log_interpolation_ratio: requires 0 < eps <= 1");
    double lhs = besov_norm(f, {s, p, 1.0, inf}, part);
    double mid = besov_norm(f, {s, p, inf, inf}, part);
    if (mid == 0.0) return 0.0;
    double lo = besov_norm(f, {s - eps, p, inf, inf}, part);
    double hi = besov_norm(f, {s + eps, p, inf, inf}, part);
    double rhs = mid / eps * std::log(std::exp(1.0) + (lo + hi) / mid);
    return lhs / rhs;
}

double log_interpolation_ratio(const VectorField& f, double s, double p,
                               double eps, const DyadicPartition& part) {
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::invalid_argument("log_interpolation_ratio: requires 0 < eps <= 1");
    double lhs = besov_norm(f, {s, p, 1.0, inf}, part);
    double mid = besov_norm(f, {s, p, inf, inf}, part);
    if (mid == 0.0) return 0.0;
    double lo = besov_norm(f, {s - eps, p, inf, inf}, part);
    double hi = besov_norm(f, {s + eps, p, inf, inf}, part);
    double rhs = mid / eps * std::log(std::exp(1.0) + (lo + hi) / mid);
    return lhs / rhs;
}

double log_interpolation_ratio(const NormSeries& series, double s,
                               double rho_exp, double eps) {
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::invalid_argument("log_interpolation_ratio: requires 0 < eps <= 1");
    auto tb = series.time_block_norms(rho_exp);
    double lhs = besov_from_blocks(tb, series.j_min, s, 1.0);
    double mid = besov_from_blocks(tb, series.j_min, s, inf);
    if (mid == 0.0) return 0.0;
    double lo = besov_from_blocks(tb, series.j_min, s - eps, inf);
    double hi = besov_from_blocks(tb, series.j_min, s + eps, inf);
    double rhs = mid / eps * std::log(std::exp(1.0) + (lo + hi) / mid);
    return lhs / rhs;
}

double osgood_integral(double c_t, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("osgood_integral: requires 0 < eps < 1");
    if (c_t < 0.0)
        throw std::invalid_argument("osgood_integral: requires c_t >= 0");
    // r = e^{-x}: integral becomes int_0^{log(1/eps)} dx / log(e + c_t e^x).
    const double X = std::log(1.0 / eps);
    const int n = 20000; // even
    auto g = [&](double x) {
        // log(e + c_t e^x) evaluated stably for large x
        double ex = c_t * std::exp(x);
        if (ex > 1e280) return 1.0 / (std::log(c_t) + x);
        return 1.0 / std::log(std::exp(1.0) + ex);
    };
    double acc = g(0.0) + g(X);
    for (int i = 1; i < n; ++i)
        acc += (i % 2 ? 4.0 : 2.0) * g(X * i / n);
    return acc * X / (3.0 * n);
}

UniquenessReport uniqueness_distance(const CnsRun& r1, const CnsRun& r2,
                                     const DyadicPartition& part,
                                     double eps_osgood) {
    if (r1.a_snapshots.empty() || r2.a_snapshots.empty())
        throw std::invalid_argument(
            "uniqueness_distance: runs must be recorded with store_snapshots");
    if (r1.times.size() != r2.times.size())
        throw std::invalid_argument("uniqueness_distance: sample grids differ");
    require_same_grid(r1.a_final.grid(), r2.a_final.grid(), "uniqueness_distance");
    for (std::size_t i = 0; i < r1.times.size(); ++i)
        if (std::abs(r1.times[i] - r2.times[i]) > 1e-12)
            throw std::invalid_argument("uniqueness_distance: sample times differ");

    const double pN = part.grid().dim(); // diagnostics at p = N
    UniquenessReport rep;
    rep.times = r1.times;

    NormSeries du_series;
    du_series.j_min = part.j_min();
    du_series.j_max = part.j_max();
    du_series.params = BesovParams{1.0, pN, inf, 1.0};

    double da_max = 0.0;
    VectorField du_final;
    for (std::size_t i = 0; i < rep.times.size(); ++i) {
        Field da = r1.a_snapshots[i] - r2.a_snapshots[i];
        VectorField du = r1.u_snapshots[i] - r2.u_snapshots[i];
        rep.da_norm.push_back(besov_norm(da, {0.0, pN, inf, inf}, part));
        da_max = std::max(da_max, rep.da_norm.back());
        du_series.append(rep.times[i], part.block_norms(du, pN));
        rep.du_norm.push_back(
            besov_from_blocks(du_series.time_block_norms(1.0, i),
                              du_series.j_min, 1.0, inf));
        if (i + 1 == rep.times.size()) du_final = du;
    }

    rep.identically_zero = da_max == 0.0 && rep.du_norm.back() == 0.0;
    rep.growth_factor =
        (rep.da_norm.front() > 0.0) ? da_max / rep.da_norm.front() : 0.0;
    rep.log_interp_ratio = log_interpolation_ratio(du_series, 1.0, 1.0, 0.5);
    rep.c_t = da_max + rep.du_norm.back();
    rep.osgood_eps = eps_osgood;
    rep.osgood_value = osgood_integral(rep.c_t, eps_osgood);
    return rep;
}

} // namespace besovlab
