// besovlab: command-line front end for the harmonic-analysis toolbox.
//
// Subcommands: partition-check, bernstein, bony, weights, product, compose,
// transport, momentum, solve, uniqueness, campaign.
// Exit codes: 0 = pass, 1 = verdict failure, 2 = usage / configuration error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>

#include <besovlab/campaign.hpp>
#include <besovlab/io.hpp>

using namespace besovlab;
using Json = nlohmann::json;

namespace {

struct CommonOpts {
    int grid = 64;
    int dim = 2;
    std::uint64_t seed = 1;
    std::string out;
    std::string config;
    bool json = false;
};

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--grid", c.grid, "points per axis (power of two)");
    sub->add_option("--dim", c.dim, "spatial dimension (1-3)");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--out", c.out, "output directory for artifacts");
    sub->add_option("--config", c.config, "JSON configuration file");
    sub->add_flag("--json", c.json, "print the full JSON report to stdout");
}

struct CampaignOpts {
    int trials = 20;
    double drift_bound = 0.15;
    double s = CampaignConfig::nan_value();
    double s1 = CampaignConfig::nan_value();
    double s2 = CampaignConfig::nan_value();
    double p = CampaignConfig::nan_value();
    double q = CampaignConfig::nan_value();
    double eps = CampaignConfig::nan_value();
    double horizon = CampaignConfig::nan_value();
    double dt = CampaignConfig::nan_value();
    double weight_rate = 1.0;
};

void add_campaign_opts(CLI::App* sub, CampaignOpts& o) {
    sub->add_option("--trials", o.trials, "number of trials");
    sub->add_option("--drift-bound", o.drift_bound,
                    "maximum allowed cross-scale drift (default 0.15)");
    sub->add_option("--s", o.s, "regularity exponent");
    sub->add_option("--s1", o.s1, "first regularity exponent");
    sub->add_option("--s2", o.s2, "second regularity exponent");
    sub->add_option("--p", o.p, "integrability exponent");
    sub->add_option("--q", o.q, "secondary integrability / time exponent");
    sub->add_option("--eps", o.eps, "interpolation width");
    sub->add_option("--horizon", o.horizon, "time horizon");
    sub->add_option("--dt", o.dt, "time step");
    sub->add_option("--weight-rate", o.weight_rate,
                    "rate constant of the parabolic weights");
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    Json j;
    in >> j;
    return j;
}

template <typename T>
T get_or(const Json& j, const char* key, T dflt) {
    if (j.contains(key)) return j.at(key).get<T>();
    return dflt;
}

CampaignConfig make_campaign_config(const CommonOpts& c, const CampaignOpts& o) {
    CampaignConfig cfg;
    cfg.grid = c.grid;
    cfg.dim = c.dim;
    cfg.seed = c.seed;
    cfg.trials = o.trials;
    cfg.drift_bound = o.drift_bound;
    cfg.s = o.s;
    cfg.s1 = o.s1;
    cfg.s2 = o.s2;
    cfg.p = o.p;
    cfg.q = o.q;
    cfg.eps = o.eps;
    cfg.horizon = o.horizon;
    cfg.dt = o.dt;
    cfg.weight_rate = o.weight_rate;
    if (!c.config.empty()) {
        Json j = load_json(c.config);
        cfg.grid = get_or(j, "grid", cfg.grid);
        cfg.dim = get_or(j, "dim", cfg.dim);
        cfg.seed = get_or<std::uint64_t>(j, "seed", cfg.seed);
        cfg.trials = get_or(j, "trials", cfg.trials);
        cfg.drift_bound = get_or(j, "drift_bound", cfg.drift_bound);
        cfg.weight_rate = get_or(j, "weight_rate", cfg.weight_rate);
    }
    return cfg;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << text;
}

int emit_report(const RatioReport& rep, const CommonOpts& c) {
    Json j = rep.to_json();
    if (!c.out.empty())
        write_text(c.out + "/campaign_" + rep.lemma + ".json", j.dump(2) + "\n");
    if (c.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("campaign %-28s trials=%d max_ratio=%.6g scale_drift=%.6g "
                    "verdict=%s\n",
                    rep.lemma.c_str(), rep.trials, rep.max_ratio,
                    rep.scale_drift, rep.verdict ? "pass" : "fail");
    }
    return rep.verdict ? 0 : 1;
}

int run_named_campaign(const std::string& id, const CommonOpts& c,
                       const CampaignOpts& o) {
    return emit_report(run_campaign(id, make_campaign_config(c, o)), c);
}

// --------------------------------------------------------------------------
// partition-check
// --------------------------------------------------------------------------

int cmd_partition_check(const CommonOpts& c) {
    Grid grid(c.dim, c.grid);
    DyadicPartition part = DyadicPartition::build(grid, 2);
    FieldRecipe recipe;
    recipe.seed = c.seed;
    Field f = generate(recipe, grid, part);

    Field sum = part.low_pass(f, part.j_min());
    for (int j = part.j_min(); j <= part.j_max(); ++j) sum = sum + part.block(f, j);
    double residual = lp_norm(sum - f, 2.0) / std::max(lp_norm(f, 2.0), 1e-300);

    double ortho = 0.0;
    for (int j = part.j_min(); j <= part.j_max(); ++j)
        for (int k = j + 2; k <= part.j_max(); ++k)
            ortho = std::max(
                ortho, lp_norm(part.block(part.block(f, j), k), 2.0));
    ortho /= std::max(lp_norm(f, 2.0), 1e-300);

    bool verdict = residual <= 1e-10 && ortho <= 1e-12;
    Json j{{"subcommand", "partition-check"},
           {"grid", c.grid},
           {"dim", c.dim},
           {"seed", c.seed},
           {"j_min", part.j_min()},
           {"j_max", part.j_max()},
           {"reconstruction_residual", residual},
           {"block_orthogonality", ortho},
           {"verdict", verdict ? "pass" : "fail"}};
    if (!c.out.empty())
        write_text(c.out + "/partition_check.json", j.dump(2) + "\n");
    if (c.json)
        std::cout << j.dump(2) << "\n";
    else
        std::printf("partition-check grid=%d dim=%d residual=%.3e "
                    "orthogonality=%.3e verdict=%s\n",
                    c.grid, c.dim, residual, ortho, verdict ? "pass" : "fail");
    return verdict ? 0 : 1;
}

// --------------------------------------------------------------------------
// weights
// --------------------------------------------------------------------------

int cmd_weights(const CommonOpts& c, double rate, int kmax, double tmax,
                int steps) {
    if (kmax < 0 || steps < 1) {
        std::cerr << "weights: kmax must be >= 0 and steps >= 1\n";
        return 2;
    }
    WeightSequence ws(rate, 0, kmax);
    std::string csv = "k,t,e,omega\n";
    Json rows = Json::array();
    char buf[128];
    for (int k = 0; k <= kmax; ++k) {
        for (int i = 0; i <= steps; ++i) {
            double t = tmax * static_cast<double>(i) / steps;
            double e = ws.e(k, t), om = ws.omega(k, t);
            std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g\n", k, t, e, om);
            csv += buf;
            rows.push_back(Json{{"k", k}, {"t", t}, {"e", e}, {"omega", om}});
        }
    }
    if (!c.out.empty()) write_text(c.out + "/weights.csv", csv);
    if (c.json)
        std::cout << Json{{"subcommand", "weights"}, {"c", rate},
                          {"kmax", kmax}, {"rows", rows}}
                         .dump(2)
                  << "\n";
    else
        std::cout << csv;
    return 0;
}

// --------------------------------------------------------------------------
// solve / uniqueness
// --------------------------------------------------------------------------

struct SolveSetup {
    Grid grid{2, 64};
    SolverConfig scfg;
    MaterialLaws laws;
    Field a0;
    VectorField u0;
    Json echo;
};

SolveSetup build_solve_setup(const CommonOpts& c, const DyadicPartition** part_out) {
    Json j = c.config.empty() ? Json::object() : load_json(c.config);
    int m = get_or(j, "grid", c.grid);
    int dim = get_or(j, "dim", c.dim);
    std::uint64_t seed = get_or<std::uint64_t>(j, "seed", c.seed);

    SolveSetup s;
    s.grid = Grid(dim, m);
    s.scfg.T = get_or(j, "T", 0.1);
    s.scfg.dt = get_or(j, "dt", 1e-3);
    s.scfg.p = get_or(j, "p", 2.0);
    s.scfg.record_every = get_or(j, "record_every", 1);
    s.scfg.mollify_n = get_or(j, "mollify_n", -1);
    s.scfg.eta = get_or(j, "eta", 0.05);
    s.scfg.weight_rate = get_or(j, "weight_rate", 1.0);
    s.scfg.a_offset = get_or(j, "a_offset", 3);
    s.scfg.store_snapshots = get_or(j, "store_snapshots", false);

    Json lj = j.contains("laws") ? j.at("laws") : Json::object();
    std::string preset = get_or<std::string>(lj, "preset", "shallow-water");
    if (preset != "shallow-water")
        throw std::runtime_error("solve: unknown laws preset '" + preset + "'");
    s.laws = shallow_water_preset(get_or(lj, "rho_bar0", 1.0),
                                  get_or(lj, "c0", 0.5));

    Json dj = j.contains("data") ? j.at("data") : Json::object();
    double a_amp = get_or(dj, "a_amplitude", 0.01);
    double u_amp = get_or(dj, "u_amplitude", 0.01);
    int j_cut = get_or(dj, "j_cut", 0);

    static thread_local std::unique_ptr<DyadicPartition> part_holder;
    part_holder = std::make_unique<DyadicPartition>(
        DyadicPartition::build(s.grid, 2));
    *part_out = part_holder.get();

    FieldRecipe ra;
    ra.seed = seed;
    ra.j_cut = j_cut;
    Field raw_a = generate(ra, s.grid, *part_holder);
    double ma = lp_norm(raw_a, inf);
    if (ma > 0.0) raw_a = raw_a * (a_amp / ma);
    Field rho0 = Field::constant(s.grid, s.laws.rho_bar0) + s.laws.rho_bar0 * raw_a;

    FieldRecipe ru;
    ru.seed = seed + 0x51ed2701ULL;
    ru.j_cut = j_cut;
    VectorField raw_u = generate_vector(ru, dim, s.grid, *part_holder);
    double mu = lp_norm(raw_u, inf);
    if (mu > 0.0) raw_u = raw_u * (u_amp / mu);

    auto [a0, u0] = reformulate(rho0, raw_u, s.laws);
    s.a0 = a0;
    s.u0 = u0;

    s.echo = Json{{"grid", m},
                  {"dim", dim},
                  {"seed", seed},
                  {"T", s.scfg.T},
                  {"dt", s.scfg.dt},
                  {"p", s.scfg.p},
                  {"record_every", s.scfg.record_every},
                  {"mollify_n", s.scfg.mollify_n},
                  {"eta", s.scfg.eta},
                  {"weight_rate", s.scfg.weight_rate},
                  {"a_offset", s.scfg.a_offset},
                  {"store_snapshots", s.scfg.store_snapshots},
                  {"laws", Json{{"preset", preset},
                                {"rho_bar0", s.laws.rho_bar0},
                                {"c0", s.laws.c0}}},
                  {"data", Json{{"a_amplitude", a_amp},
                                {"u_amplitude", u_amp},
                                {"j_cut", j_cut}}}};
    return s;
}

Json manifest_of(const CnsRun& run, const Json& echo) {
    Json preds = Json::array();
    for (const auto& pr : run.budget.predicates)
        preds.push_back(Json{{"name", pr.name},
                             {"lhs", pr.lhs},
                             {"rhs", pr.rhs},
                             {"holds", pr.holds}});
    double mass0 = run.mass.empty() ? 0.0 : run.mass.front();
    double mass_drift = 0.0;
    for (double v : run.mass) mass_drift = std::max(mass_drift, std::abs(v - mass0));
    return Json{
        {"config", echo},
        {"budget", Json{{"E0", run.budget.E0},
                        {"C0", run.budget.C0},
                        {"C1", run.budget.C1},
                        {"C2", run.budget.C2},
                        {"C3", run.budget.C3},
                        {"C4", run.budget.C4},
                        {"A0", run.budget.A0},
                        {"eta", run.budget.eta},
                        {"c1", run.budget.c1},
                        {"T_star", run.budget.T_star},
                        {"predicates", preds},
                        {"all_hold", run.budget.all_hold()}}},
        {"margins", Json{{"h3_realized", run.h3_realized},
                         {"h3_target", run.h3_target},
                         {"h4_a_realized", run.h4_a_realized},
                         {"h4_a_target", run.h4_a_target},
                         {"h4_u_realized", run.h4_u_realized},
                         {"h4_u_target", run.h4_u_target},
                         {"h1_realized", run.h1_realized},
                         {"h1_target", run.h1_target}}},
        {"healthy_to_end", run.healthy_to_end},
        {"first_breach_time", std::isfinite(run.first_breach_time)
                                  ? Json(run.first_breach_time)
                                  : Json()},
        {"mollify_shift", run.mollify_shift},
        {"mass_drift", mass_drift},
        {"samples", run.times.size()}};
}

std::string trace_csv(const CnsRun& run) {
    std::string csv =
        "t,h1,h2,h3,h4,min_density,c1,h3_value,h3_budget,h4_a_value,"
        "h4_a_budget,h4_u_value,h4_u_budget,mass\n";
    char buf[512];
    for (std::size_t i = 0; i < run.times.size(); ++i) {
        const HypothesisStatus& h = run.monitor_trace[i];
        std::snprintf(buf, sizeof(buf),
                      "%.17g,%d,%d,%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                      "%.17g,%.17g,%.17g\n",
                      run.times[i], h.h1 ? 1 : 0, h.h2 ? 1 : 0, h.h3 ? 1 : 0,
                      h.h4 ? 1 : 0, h.min_density, h.c1, h.h3_value,
                      h.h3_budget, h.h4_a_value, h.h4_a_budget, h.h4_u_value,
                      h.h4_u_budget, run.mass[i]);
        csv += buf;
    }
    return csv;
}

std::string timestamp_now() {
    std::time_t t = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

int cmd_solve(const CommonOpts& c) {
    const DyadicPartition* part = nullptr;
    SolveSetup s = build_solve_setup(c, &part);
    CnsRun run = run_scheme(s.a0, s.u0, s.laws, s.scfg, *part);

    Json manifest = manifest_of(run, s.echo);
    Json with_ts = manifest;
    with_ts["timestamp"] = timestamp_now(); // isolated: only volatile field

    if (!c.out.empty()) {
        write_text(c.out + "/manifest.json", with_ts.dump(2) + "\n");
        io::write_norm_series_csv(c.out + "/a_series.csv", run.a_series);
        io::write_norm_series_csv(c.out + "/u_series.csv", run.u_series);
        io::write_norm_series_csv(c.out + "/f_series.csv", run.f_series);
        write_text(c.out + "/trace.csv", trace_csv(run));
        io::write_field(c.out + "/a_final.bin", run.a_final);
        io::write_field(c.out + "/u_final.bin", run.u_final);
    }
    if (c.json) {
        std::cout << manifest.dump(2) << "\n";
    } else {
        std::printf("solve grid=%d T=%g dt=%g healthy=%s all_predicates=%s "
                    "T_star=%g mass_drift=%.3e\n",
                    s.grid.resolution(), s.scfg.T, s.scfg.dt,
                    run.healthy_to_end ? "yes" : "no",
                    run.budget.all_hold() ? "yes" : "no", run.budget.T_star,
                    manifest["mass_drift"].get<double>());
    }
    return run.healthy_to_end ? 0 : 1;
}

int cmd_uniqueness(const CommonOpts& c, double perturb, double growth_bound,
                   double osgood_eps) {
    const DyadicPartition* part = nullptr;
    SolveSetup s = build_solve_setup(c, &part);
    s.scfg.store_snapshots = true;

    CnsRun r1 = run_scheme(s.a0, s.u0, s.laws, s.scfg, *part);

    Field a0b = s.a0;
    if (perturb != 0.0) {
        FieldRecipe rp;
        rp.seed = c.seed + 0xabcdefULL;
        Field noise = generate(rp, s.grid, *part);
        double m = lp_norm(noise, inf);
        if (m > 0.0) noise = noise * (perturb / m);
        a0b = a0b + noise;
    }
    CnsRun r2 = run_scheme(a0b, s.u0, s.laws, s.scfg, *part);

    UniquenessReport rep = uniqueness_distance(r1, r2, *part, osgood_eps);

    bool verdict;
    if (perturb == 0.0)
        verdict = rep.identically_zero;
    else
        verdict = std::isfinite(rep.growth_factor) &&
                  rep.growth_factor <= growth_bound;

    Json j{{"subcommand", "uniqueness"},
           {"perturb", perturb},
           {"identically_zero", rep.identically_zero},
           {"growth_factor", rep.growth_factor},
           {"growth_bound", growth_bound},
           {"log_interp_ratio", rep.log_interp_ratio},
           {"c_t", rep.c_t},
           {"osgood_eps", rep.osgood_eps},
           {"osgood_value", rep.osgood_value},
           {"verdict", verdict ? "pass" : "fail"}};
    if (!c.out.empty()) {
        write_text(c.out + "/uniqueness.json", j.dump(2) + "\n");
        std::string csv = "t,da_norm,du_norm\n";
        char buf[160];
        for (std::size_t i = 0; i < rep.times.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", rep.times[i],
                          rep.da_norm[i], rep.du_norm[i]);
            csv += buf;
        }
        write_text(c.out + "/uniqueness.csv", csv);
    }
    if (c.json)
        std::cout << j.dump(2) << "\n";
    else
        std::printf("uniqueness perturb=%g zero=%s growth=%.6g osgood=%.6g "
                    "verdict=%s\n",
                    perturb, rep.identically_zero ? "yes" : "no",
                    rep.growth_factor, rep.osgood_value,
                    verdict ? "pass" : "fail");
    return verdict ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"besovlab: dyadic analysis toolbox and compressible-flow "
                 "estimate laboratory"};
    app.require_subcommand(1);

    // partition-check
    CommonOpts c_part;
    auto* sc_part = app.add_subcommand("partition-check",
                                       "verify the dyadic decomposition "
                                       "reconstructs fields exactly");
    add_common(sc_part, c_part);

    // weights
    CommonOpts c_w;
    double w_rate = 1.0, w_tmax = 1.0;
    int w_kmax = 20, w_steps = 8;
    auto* sc_w = app.add_subcommand(
        "weights", "tabulate the time-dependent block weights (CSV: k,t,e,omega)");
    add_common(sc_w, c_w);
    sc_w->add_option("--c", w_rate, "rate constant of the weight family");
    sc_w->add_option("--kmax", w_kmax, "largest block index");
    sc_w->add_option("--tmax", w_tmax, "largest tabulated time");
    sc_w->add_option("--steps", w_steps, "time samples per block");

    // campaign-backed subcommands
    CommonOpts c_bern, c_bony, c_prod, c_comp, c_tr, c_mom, c_camp;
    CampaignOpts o_bern, o_bony, o_prod, o_comp, o_tr, o_mom, o_camp;
    std::string prod_law = "sum-index", mom_law = "gain", camp_id;
    bool comp_weighted = false, tr_weighted = false, camp_list = false;

    auto* sc_bern = app.add_subcommand(
        "bernstein", "derivative/integrability ratio study on dyadic shells");
    add_common(sc_bern, c_bern);
    add_campaign_opts(sc_bern, o_bern);

    auto* sc_bony = app.add_subcommand(
        "bony", "exactness of the paraproduct decomposition");
    add_common(sc_bony, c_bony);
    add_campaign_opts(sc_bony, o_bony);

    auto* sc_prod = app.add_subcommand("product", "product estimate ratios");
    add_common(sc_prod, c_prod);
    add_campaign_opts(sc_prod, o_prod);
    sc_prod->add_option("--law", prod_law,
                        "two-factor | sum-index | endpoint | weighted | "
                        "weighted-endpoint");

    auto* sc_comp = app.add_subcommand("compose",
                                       "composition estimate ratios");
    add_common(sc_comp, c_comp);
    add_campaign_opts(sc_comp, o_comp);
    sc_comp->add_flag("--weighted", comp_weighted, "use time-dependent weights");

    auto* sc_tr = app.add_subcommand(
        "transport", "a priori estimate study for the transport equation");
    add_common(sc_tr, c_tr);
    add_campaign_opts(sc_tr, o_tr);
    sc_tr->add_flag("--weighted", tr_weighted, "use time-dependent weights");

    auto* sc_mom = app.add_subcommand(
        "momentum", "a priori estimate study for the linearized momentum "
                    "equation");
    add_common(sc_mom, c_mom);
    add_campaign_opts(sc_mom, o_mom);
    sc_mom->add_option("--law", mom_law,
                       "gain | gain-smooth | coercive | endpoint");

    auto* sc_camp = app.add_subcommand("campaign",
                                       "run a registered ratio campaign");
    add_common(sc_camp, c_camp);
    add_campaign_opts(sc_camp, o_camp);
    sc_camp->add_option("lemma", camp_id, "registered campaign identifier");
    sc_camp->add_flag("--list", camp_list, "list registered identifiers");

    // solve
    CommonOpts c_solve;
    auto* sc_solve = app.add_subcommand(
        "solve", "integrate the compressible system from a configuration file");
    add_common(sc_solve, c_solve);

    // uniqueness
    CommonOpts c_uni;
    double uni_perturb = 1e-6, uni_growth = 100.0, uni_eps = 1e-20;
    auto* sc_uni = app.add_subcommand(
        "uniqueness", "distance between two runs with perturbed data");
    add_common(sc_uni, c_uni);
    sc_uni->add_option("--perturb", uni_perturb,
                       "sup-norm size of the data perturbation (0 = identical)");
    sc_uni->add_option("--growth-bound", uni_growth,
                       "allowed distance amplification factor");
    sc_uni->add_option("--osgood-eps", uni_eps,
                       "lower endpoint of the modulus-of-continuity integral");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sc_part->parsed()) return cmd_partition_check(c_part);
        if (sc_w->parsed()) return cmd_weights(c_w, w_rate, w_kmax, w_tmax, w_steps);
        if (sc_bern->parsed()) return run_named_campaign("bernstein", c_bern, o_bern);
        if (sc_bony->parsed()) return run_named_campaign("bony", c_bony, o_bony);
        if (sc_prod->parsed()) {
            std::string id;
            if (prod_law == "two-factor") id = "product-two-factor";
            else if (prod_law == "sum-index") id = "product-sum-index";
            else if (prod_law == "endpoint") id = "product-endpoint";
            else if (prod_law == "weighted") id = "product-weighted";
            else if (prod_law == "weighted-endpoint") id = "product-weighted-endpoint";
            else {
                std::cerr << "product: unknown law '" << prod_law << "'\n";
                return 2;
            }
            return run_named_campaign(id, c_prod, o_prod);
        }
        if (sc_comp->parsed())
            return run_named_campaign(
                comp_weighted ? "compose-weighted" : "compose", c_comp, o_comp);
        if (sc_tr->parsed())
            return run_named_campaign(
                tr_weighted ? "transport-weighted" : "transport", c_tr, o_tr);
        if (sc_mom->parsed()) {
            std::string id;
            if (mom_law == "gain") id = "momentum-gain";
            else if (mom_law == "gain-smooth") id = "momentum-gain-smooth";
            else if (mom_law == "coercive") id = "momentum-coercive";
            else if (mom_law == "endpoint") id = "momentum-endpoint";
            else {
                std::cerr << "momentum: unknown law '" << mom_law << "'\n";
                return 2;
            }
            return run_named_campaign(id, c_mom, o_mom);
        }
        if (sc_camp->parsed()) {
            if (camp_list) {
                for (const std::string& id : campaign_list())
                    std::cout << id << "\n";
                return 0;
            }
            if (camp_id.empty()) {
                std::cerr << "campaign: missing lemma identifier "
                             "(use --list to enumerate)\n";
                return 2;
            }
            return run_named_campaign(camp_id, c_camp, o_camp);
        }
        if (sc_solve->parsed()) return cmd_solve(c_solve);
        if (sc_uni->parsed())
            return cmd_uniqueness(c_uni, uni_perturb, uni_growth, uni_eps);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << app.help();
    return 2;
}
