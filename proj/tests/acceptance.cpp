// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and reports its wall time.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <besovlab/campaign.hpp>
#include <besovlab/cns.hpp>
#include <besovlab/divcurl.hpp>
#include <besovlab/momentum.hpp>
#include <besovlab/recipes.hpp>
#include <besovlab/transport.hpp>

using namespace besovlab;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string&)> body;
};

Field random_field(const Grid& g, const DyadicPartition& part,
                   std::uint64_t seed, int j_cut = 0) {
    FieldRecipe r;
    r.seed = seed;
    r.j_cut = j_cut;
    return generate(r, g, part);
}

double rel_l2(const Field& a, const Field& b) {
    return lp_norm(a - b, 2.0) / std::max(lp_norm(b, 2.0), 1e-300);
}

// Spectral restriction of a fine-grid field onto a coarser grid (shared modes).
Field restrict_to(const Field& f, const Grid& coarse) {
    const Grid& fine = f.grid();
    std::vector<std::complex<double>> spec(coarse.size(), {0.0, 0.0});
    const int mc = coarse.resolution(), mf = fine.resolution();
    for (std::size_t lin = 0; lin < coarse.size(); ++lin) {
        auto k = coarse.freqs(lin);
        bool ok = true;
        for (int d = 0; d < coarse.dim(); ++d)
            ok = ok && std::abs(k[d]) < mc / 2; // skip the coarse Nyquist rows
        if (!ok) continue;
        std::size_t fl = 0;
        for (int d = 0; d < fine.dim(); ++d) {
            int v = ((k[d] % mf) + mf) % mf;
            fl = fl * static_cast<std::size_t>(mf) + static_cast<std::size_t>(v);
        }
        spec[lin] = f.spectral()[fl];
    }
    return Field::from_spectral(coarse, std::move(spec));
}

// Grid-independent small initial data from fixed low modes.
std::pair<Field, VectorField> convergence_data(const Grid& g,
                                               const DyadicPartition& part,
                                               const MaterialLaws& laws) {
    FieldRecipe ra;
    ra.spectrum = FieldRecipe::Spectrum::multimode;
    ra.seed = 5;
    ra.amplitude = 0.01;
    ra.modes = {{{1, 0, 0}, 0.5}, {{0, 2, 0}, 0.3}, {{2, 1, 0}, 0.2}};
    Field rho0 = Field::constant(g, laws.rho_bar0) +
                 generate(ra, g, part) * laws.rho_bar0;

    FieldRecipe ru = ra;
    ru.seed = 6;
    ru.modes = {{{0, 1, 0}, 0.5}, {{2, 0, 0}, 0.3}, {{1, 2, 0}, 0.2}};
    VectorField u0 = generate_vector(ru, g.dim(), g, part);
    return reformulate(rho0, u0, laws);
}

bool criterion1(std::string& detail) {
    Grid g(2, 128);
    DyadicPartition part = DyadicPartition::build(g, 2);

    double worst_sum = 0.0;
    std::set<double> radii;
    for (std::size_t lin = 1; lin < g.size(); ++lin)
        radii.insert(g.abs_wavenumber(lin));
    for (double r : radii) {
        double sum = part.theta(std::ldexp(r, -part.j_min()));
        for (int j = part.j_min(); j <= part.j_max(); ++j)
            sum += part.phi(std::ldexp(r, -j));
        worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    }

    double worst_rec = 0.0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Field f = random_field(g, part, seed);
        Field sum = Field::constant(g, f.mean());
        for (int j = part.j_min(); j <= part.j_max(); ++j)
            sum = sum + part.block(f, j);
        worst_rec = std::max(worst_rec, rel_l2(sum, f));
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "partition defect %.2e, reconstruction defect %.2e (50 fields)",
                  worst_sum, worst_rec);
    detail = buf;
    return worst_sum <= 1e-10 && worst_rec <= 1e-10;
}

bool criterion2(std::string& detail) {
    Grid g(2, 64);
    DyadicPartition part = DyadicPartition::build(g, 2);

    double worst_bony = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Field u = random_field(g, part, seed);
        Field v = random_field(g, part, seed + 50);
        BonySplit s = bony_split(u, v, part);
        Field uv = dealiased_product(u, v);
        worst_bony = std::max(
            worst_bony, lp_norm(s.t_uv + s.t_vu + s.remainder - uv, 2.0) /
                            std::max(lp_norm(uv, 2.0), 1e-300));
    }

    Field f = random_field(g, part, 99);
    const double scale = std::max(lp_norm(f, 2.0), 1e-300);
    double worst_ortho = 0.0;
    for (int j = part.j_min(); j <= part.j_max(); ++j)
        for (int k = part.j_min(); k <= part.j_max(); ++k) {
            if (std::abs(j - k) < 2) continue;
            worst_ortho = std::max(
                worst_ortho, lp_norm(part.block(part.block(f, j), k), 2.0) / scale);
        }

    double worst_local = 0.0;
    for (int k = part.j_min() + 1; k <= part.j_max(); ++k) {
        Field term =
            dealiased_product(part.low_pass(f, k - 1), part.block(f, k));
        for (int j = part.j_min(); j <= part.j_max(); ++j) {
            if (std::abs(j - k) < 5) continue;
            worst_local = std::max(
                worst_local, lp_norm(part.block(term, j), 2.0) / scale);
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "bony %.2e, block orthogonality %.2e, localization %.2e",
                  worst_bony, worst_ortho, worst_local);
    detail = buf;
    return worst_bony <= 1e-10 && worst_ortho <= 1e-13 && worst_local <= 1e-13;
}

bool criterion3(std::string& detail) {
    // Shells far enough from the lattice floor that discretization bias is
    // negligible; the ensemble mixes full-shell random-phase fields with
    // localized wave packets (the profiles that saturate the p < q cases).
    // Both recipes produce fields spectrally supported on the annulus.
    Grid g(2, 512);
    DyadicPartition part = DyadicPartition::build(g, 2);
    const int j_lo = 3, j_hi = 6;
    const double N = 2.0;
    const std::vector<std::pair<double, double>> pqs{{2, 2}, {2, inf}, {1, 2}};
    const std::vector<std::array<int, 3>> gammas{
        {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {2, 0, 0}, {1, 1, 0}, {0, 2, 0}};

    std::vector<double> max_lo(pqs.size() * gammas.size(), 0.0);
    std::vector<double> max_hi(pqs.size() * gammas.size(), 0.0);
    bool all_finite = true;
    for (int trial = 0; trial < 200; ++trial) {
        for (int which = 0; which < 2; ++which) {
            const int j = which == 0 ? j_lo : j_hi;
            FieldRecipe r;
            r.spectrum = trial % 2 == 0 ? FieldRecipe::Spectrum::annulus
                                        : FieldRecipe::Spectrum::packet;
            r.j = j;
            r.seed = 1000 + trial;
            Field f = generate(r, g, part);
            const double n1 = lp_norm(f, 1.0), n2 = lp_norm(f, 2.0);
            for (std::size_t b = 0; b < gammas.size(); ++b) {
                const int order = gammas[b][0] + gammas[b][1];
                Field d = f.derivative(gammas[b]);
                const double d2 = lp_norm(d, 2.0), dinf = lp_norm(d, inf);
                for (std::size_t a = 0; a < pqs.size(); ++a) {
                    const auto [p, q] = pqs[a];
                    const double num = q == 2.0 ? d2 : dinf;
                    const double den = p == 2.0 ? n2 : n1;
                    const double gauge =
                        std::pow(2.0, j * (order + N * (1.0 / p - 1.0 / q)));
                    const double ratio = num / (gauge * den);
                    all_finite = all_finite && std::isfinite(ratio);
                    auto& slot = (which == 0 ? max_lo : max_hi)[a * gammas.size() + b];
                    slot = std::max(slot, ratio);
                }
            }
        }
    }
    double worst_rel = 0.0;
    for (std::size_t i = 0; i < max_lo.size(); ++i)
        worst_rel = std::max(worst_rel, std::abs(max_lo[i] - max_hi[i]) /
                                            std::max(max_lo[i], max_hi[i]));
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "max cross-scale disagreement %.3f (bound 0.10), shells %d and %d",
                  worst_rel, j_lo, j_hi);
    detail = buf;
    return all_finite && worst_rel <= 0.10;
}

bool criterion4(std::string& detail) {
    const int lo = -2, hi = 37; // 40 block indices
    std::vector<double> ts{0.0};
    for (int i = 0; i < 39; ++i)
        ts.push_back(1e-4 * std::pow(10.0 / 1e-4, i / 38.0));
    const double slack = 1e-12;

    bool ok = true;
    double sup_omega = 0.0;
    for (double c : {0.5, 1.0, 2.0}) {
        WeightSequence ws(c, lo, hi);
        for (int k = lo; k <= hi; ++k) {
            ok = ok && ws.omega(k, 0.0) == 0.0;
            for (double t : ts) {
                double wk = ws.omega(k, t);
                sup_omega = std::max(sup_omega, wk);
                ok = ok && wk <= 2.0 + std::ldexp(1.0, -16);
                ok = ok && ws.e(k, t) <= wk + slack;
                for (int kp : {lo, (lo + hi) / 2, k, hi}) {
                    double wkp = ws.omega(kp, t);
                    if (k >= kp) ok = ok && wk <= std::ldexp(1.0, k - kp) * wkp + slack;
                    else ok = ok && wk <= 3.0 * wkp + slack;
                }
            }
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf),
                  "40x40 lattice, c in {0.5,1,2}; sup omega = %.6f", sup_omega);
    detail = buf;
    return ok;
}

bool criterion5(std::string& detail) {
    Grid g(2, 32);
    DyadicPartition part = DyadicPartition::build(g, 2);
    const double mu = 0.5, lam = 0.0, nu = lam + 2.0 * mu;
    MomentumProblem prob;
    prob.grid = g;
    prob.mu_bar = [&](double) { return Field::constant(g, mu); };
    prob.lambda_bar = [&](double) { return Field::constant(g, lam); };

    // Single curl-free mode k = (2, 0): amplitude follows e^{-nu |k|^2 t}.
    FieldRecipe r;
    r.spectrum = FieldRecipe::Spectrum::multimode;
    r.modes = {{{2, 0, 0}, 1.0}};
    r.seed = 3;
    VectorField u0 = gradient(generate(r, g, part));
    const double T = 0.5;
    MomentumResult res =
        solve_momentum(prob, u0, T, 1e-3, {0.0, 2.0, 1.0, inf}, part, 100);
    double measured = lp_norm(res.final_state, 2.0) / lp_norm(u0, 2.0);
    double exact = std::exp(-nu * 4.0 * T);
    double decay_err = std::abs(measured - exact) / exact;

    // Fitted normalized rate c = rate / 4^j over four consecutive shells.
    std::vector<double> cs;
    for (int j = 0; j < 4; ++j) {
        FieldRecipe rj = r;
        rj.modes = {{{1 << j, 0, 0}, 1.0}};
        VectorField uj = gradient(generate(rj, g, part));
        double Tj = 0.5 / std::pow(4.0, j); // same decayed fraction per shell
        MomentumResult rr = solve_momentum(prob, uj, Tj, 1e-3 / std::pow(4.0, j),
                                           {0.0, 2.0, 1.0, inf}, part, 25);
        for (auto [jj, c] : mode_decay_fit(rr.u_series))
            if (jj == j) cs.push_back(c);
    }
    bool uniform = cs.size() == 4;
    double cmin = 1e300, cmax = 0.0;
    for (double c : cs) {
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
    }
    if (uniform) uniform = (cmax - cmin) / cmax <= 0.10;

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "decay error %.2e (bound 5e-3); fitted c over 4 shells in "
                  "[%.4f, %.4f]",
                  decay_err, cmin, cmax);
    detail = buf;
    return decay_err <= 5e-3 && uniform;
}

bool criterion6(std::string& detail) {
    Grid g(2, 128);
    DyadicPartition part = DyadicPartition::build(g, 2);
    Field f0 = random_field(g, part, 2, /*j_cut=*/3);

    // Steady divergence-free velocity from a stream function.
    Field psi = random_field(g, part, 3, /*j_cut=*/3);
    VectorField v{{psi.derivative({0, 1, 0}), -psi.derivative({1, 0, 0})}};
    v = v * (1.0 / lp_norm(v, inf));
    TransportProblem prob;
    prob.grid = g;
    prob.velocity = [&](double) { return v; };
    TransportResult res =
        solve_transport(prob, f0, 1.0, 1e-3, {0.0, 2.0, 1.0, inf}, part, 250);
    double d2 = std::abs(lp_norm(res.final_state, 2.0) - lp_norm(f0, 2.0));
    double d4 = std::abs(lp_norm(res.final_state, 4.0) - lp_norm(f0, 4.0));

    // Constant velocity: exact translation.
    const std::array<double, 2> c{0.6, -0.35};
    TransportProblem tp;
    tp.grid = g;
    tp.velocity = [&](double) {
        return VectorField{{Field::constant(g, c[0]), Field::constant(g, c[1])}};
    };
    TransportResult tr =
        solve_transport(tp, f0, 1.0, 1e-3, {0.0, 2.0, 1.0, inf}, part, 250);
    std::vector<std::complex<double>> spec = f0.spectral();
    for (std::size_t lin = 0; lin < g.size(); ++lin) {
        auto k = g.freqs(lin);
        spec[lin] *= std::polar(1.0, -(k[0] * c[0] + k[1] * c[1]));
    }
    Field exact = Field::from_spectral(g, std::move(spec));
    double terr = lp_norm(tr.final_state - exact, inf);

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "L2 drift %.2e, L4 drift %.2e, translation error %.2e",
                  d2, d4, terr);
    detail = buf;
    return d2 <= 1e-6 && d4 <= 1e-6 && terr <= 1e-6;
}

bool criterion7(std::string& detail) {
    struct Job {
        const char* id;
        int grid;
    };
    const std::vector<Job> jobs{
        {"product-two-factor", 64},    {"product-sum-index", 64},
        {"product-endpoint", 64},      {"commutator-div", 64},
        {"compose", 64},               {"paraproduct-weighted", 64},
        {"product-weighted", 64},      {"product-weighted-endpoint", 64},
        {"compose-weighted", 64},      {"transport", 32},
        {"transport-weighted", 32},    {"momentum-gain", 32},
        {"momentum-gain-smooth", 32},  {"momentum-coercive", 32},
        {"momentum-endpoint", 32},     {"log-interpolation", 32}};

    bool ok = true;
    double worst_drift = 0.0;
    std::string failures;
    for (const Job& job : jobs) {
        CampaignConfig cfg;
        cfg.grid = job.grid;
        cfg.trials = 100;
        cfg.seed = 1;
        RatioReport rep = run_campaign(job.id, cfg);
        worst_drift = std::max(worst_drift, rep.scale_drift);
        bool pass = rep.verdict && std::isfinite(rep.max_ratio) &&
                    rep.scale_drift <= 0.15;
        if (!pass) {
            ok = false;
            failures += std::string(" ") + job.id;
        }
    }

    // Hypothesis-violating configurations are rejected naming the condition.
    bool rejected = false;
    try {
        CampaignConfig bad;
        bad.grid = 32;
        bad.trials = 1;
        bad.s1 = 5.0;
        run_campaign("product-sum-index", bad);
    } catch (const std::invalid_argument& e) {
        rejected = std::string(e.what()).find("requires s1 <= N/p") !=
                   std::string::npos;
    }
    ok = ok && rejected;

    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "16 campaigns x 100 trials, worst drift %.3f (bound 0.15), "
                  "violation rejected=%s%s%s",
                  worst_drift, rejected ? "yes" : "no",
                  failures.empty() ? "" : "; failing:", failures.c_str());
    detail = buf;
    return ok;
}

bool criterion8(std::string& detail) {
    MaterialLaws laws = shallow_water_preset(1.0, 0.5);

    // Equilibrium fixed point.
    Grid g32(2, 32);
    DyadicPartition p32 = DyadicPartition::build(g32, 2);
    SolverConfig eq;
    eq.T = 0.05;
    eq.dt = 1e-3;
    eq.record_every = 10;
    CnsRun req = run_scheme(Field::zeros(g32),
                            VectorField{{Field::zeros(g32), Field::zeros(g32)}},
                            laws, eq, p32);
    bool fixed = lp_norm(req.a_final, inf) <= 1e-14 &&
                 lp_norm(req.u_final, inf) <= 1e-14;

    // Mass conservation and H1 margin at amplitude 0.01 over T = 0.1.
    Grid g64(2, 64);
    DyadicPartition p64 = DyadicPartition::build(g64, 2);
    auto [a64, u64] = convergence_data(g64, p64, laws);
    SolverConfig run_cfg;
    run_cfg.T = 0.1;
    run_cfg.dt = 1e-3;
    run_cfg.record_every = 5;
    run_cfg.eta = 0.01; // smallness parameter commensurate with the data size
    CnsRun r64 = run_scheme(a64, u64, laws, run_cfg, p64);
    double mass0 = r64.mass.front(), mass_drift = 0.0;
    for (double m : r64.mass)
        mass_drift = std::max(mass_drift, std::abs(m - mass0) / std::abs(mass0));
    double min_rho = 1e300;
    for (double v : r64.min_density) min_rho = std::min(min_rho, v);
    bool floor_ok = min_rho >= 5.0 / 8.0 * laws.c0;

    // Self-convergence between (64^2, dt) and (128^2, dt/2) against a
    // (128^2, dt/4) reference.
    Grid g128(2, 128);
    DyadicPartition p128 = DyadicPartition::build(g128, 2);
    auto [a128, u128] = convergence_data(g128, p128, laws);

    SolverConfig c128 = run_cfg;
    c128.dt = 5e-4;
    c128.record_every = 50;
    CnsRun r128 = run_scheme(a128, u128, laws, c128, p128);

    SolverConfig cref = run_cfg;
    cref.dt = 2.5e-4;
    cref.record_every = 100;
    CnsRun rref = run_scheme(a128, u128, laws, cref, p128);

    auto err_vs_ref = [&](const CnsRun& run, const Grid& grid) {
        Field aref = restrict_to(rref.a_final, grid);
        double e = lp_norm(run.a_final - aref, 2.0);
        for (int d = 0; d < 2; ++d)
            e += lp_norm(run.u_final.comp[d] -
                             restrict_to(rref.u_final.comp[d], grid),
                         2.0);
        return e;
    };
    double e64 = err_vs_ref(r64, g64);
    double e128 = err_vs_ref(r128, g128);
    double order = std::log2(e64 / e128);

    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "fixed point %s; mass drift %.2e; min rho %.4f (floor %.4f); "
                  "self-convergence order %.2f",
                  fixed ? "exact" : "BROKEN", mass_drift, min_rho,
                  5.0 / 8.0 * laws.c0, order);
    detail = buf;
    return fixed && mass_drift <= 1e-8 && floor_ok && order >= 1.5 &&
           r64.healthy_to_end && r128.healthy_to_end;
}

bool criterion9(std::string& detail) {
    Grid g(2, 32);
    DyadicPartition part = DyadicPartition::build(g, 2);
    MaterialLaws laws = shallow_water_preset();
    auto [a0, u0] = convergence_data(g, part, laws);

    SolverConfig cfg;
    cfg.T = 0.1;
    cfg.dt = 1e-3;
    cfg.record_every = 5;
    cfg.store_snapshots = true;

    CnsRun r1 = run_scheme(a0, u0, laws, cfg, part);
    CnsRun r2 = run_scheme(a0, u0, laws, cfg, part);
    UniquenessReport same = uniqueness_distance(r1, r2, part);
    bool zero = same.identically_zero;
    for (double v : same.da_norm) zero = zero && v == 0.0;
    for (double v : same.du_norm) zero = zero && v == 0.0;

    FieldRecipe rn;
    rn.seed = 321;
    rn.j_cut = 3;
    Field noise = generate(rn, g, part);
    noise = noise * (1e-6 / lp_norm(noise, inf));
    CnsRun r3 = run_scheme(a0 + noise, u0, laws, cfg, part);
    UniquenessReport pert = uniqueness_distance(r1, r3, part, 1e-20);

    bool bounded = std::isfinite(pert.growth_factor) &&
                   pert.growth_factor > 0.0 && pert.growth_factor <= 100.0;
    bool osgood = pert.osgood_value > 10.0;

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "identical runs zero=%s; perturbed growth factor %.3f; "
                  "Osgood integral %.2f at eps=1e-20",
                  zero ? "yes" : "no", pert.growth_factor, pert.osgood_value);
    detail = buf;
    return zero && bounded && osgood;
}

bool criterion10(std::string& detail) {
    Grid g(2, 64);
    DyadicPartition part = DyadicPartition::build(g, 2);
    Field f = random_field(g, part, 77, /*j_cut=*/4);
    WeightSequence ws(1.0, part.j_min(), part.j_max());
    BesovParams bp{0.5, 2.0, 1.0, inf};

    // Fixed data observed on a uniform sample grid over [0, 1].
    NormSeries series;
    series.j_min = part.j_min();
    series.j_max = part.j_max();
    series.params = bp;
    auto blocks = part.block_norms(f, 2.0);
    const int n = 400;
    for (int i = 0; i <= n; ++i) series.append(1.0 * i / n, blocks);

    // Monotone-in-T behavior of the weighted running norm.
    bool monotone = true;
    double prev = -1.0;
    for (int i = 0; i <= n; i += 8) {
        WeightedBesovParams wp{bp, ws, series.times[i]};
        auto running = series.time_block_norms(inf, i);
        double v = weighted_from_blocks(running, series.j_min, wp);
        monotone = monotone && v >= prev - 1e-13;
        prev = v;
    }

    WeightedBesovParams wp{bp, ws, 1.0};
    auto value_at = [&](std::size_t i) {
        WeightedBesovParams local = wp;
        local.horizon = series.times[i];
        return weighted_from_blocks(series.time_block_norms(inf, i),
                                    series.j_min, local);
    };
    const double eps = 0.5 * (value_at(5) + value_at(6));
    SmallnessResult r = smallness_time(series, wp, eps);
    bool ok = r.achieved && r.value <= eps;
    // If the returned horizon is interior, the next sample must overshoot.
    std::size_t idx = static_cast<std::size_t>(std::lround(r.t_tilde * n));
    if (idx + 1 <= static_cast<std::size_t>(n))
        ok = ok && value_at(idx + 1) > eps;

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "T~ = %.4f with value %.3e <= eps %.3e; monotone=%s",
                  r.t_tilde, r.value, eps, monotone ? "yes" : "no");
    detail = buf;
    return ok && monotone;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "dyadic partition sums to 1 and reconstructs 50 random fields", criterion1},
        {2, "exact decomposition identities (reconstruction, orthogonality, localization)", criterion2},
        {3, "derivative/integrability ratios stable across shells (200 fields each)", criterion3},
        {4, "weight-family inequalities exact on a 40x40 (k,t) lattice", criterion4},
        {5, "constant-coefficient momentum decay oracle and uniform block rates", criterion5},
        {6, "transport conservation and exact translation at M=128", criterion6},
        {7, "100-trial estimate-ratio campaigns with scale drift <= 15%", criterion7},
        {8, "nonlinear solver sanity: fixed point, mass, density floor, convergence", criterion8},
        {9, "uniqueness diagnostics: zero distance, bounded growth, Osgood divergence", criterion9},
        {10, "weighted smallness time achieves the requested threshold", criterion10},
    };

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        std::printf("%s criterion %d: %s — %s [%.1f s]\n",
                    ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
                    detail.c_str(), secs);
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
