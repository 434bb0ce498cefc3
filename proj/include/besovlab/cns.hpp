#pragma once

#include <string>

#include "besovlab/momentum.hpp"
#include "besovlab/transport.hpp"

namespace besovlab {

// Compressible Navier-Stokes with density-dependent viscosities, in the
// (a, u) variables with a = (rho - rho0)/rho0:
//   d_t a + u . grad a = F(a, u),            F = -(1 + a) div u,
//   d_t u - div(mu_bar grad u) - grad((lambda_bar + mu_bar) div u) = G(a, u),
// mu_bar = mu(rho)/rho, lambda_bar = lambda(rho)/rho, and
//   G = -(u.grad)u - (rho0 P'(rho)/rho) grad a
//       + (mu(rho)/rho^2) (grad rho . grad) u
//       + ((mu(rho)+lambda(rho))/rho^2) grad rho div u.
struct MaterialLaws {
    std::function<double(double)> mu;   // mu(rho)
    std::function<double(double)> lam;  // lambda(rho)
    std::function<double(double)> P;    // pressure law
    std::function<double(double)> dP;   // P'(rho)
    double rho_bar0 = 1.0;              // reference density
    double c0 = 0.5;                    // density floor
};

// Viscous shallow water: mu(rho) = rho, lambda = 0, P(rho) = rho^2, so
// mu_bar = 1, lambda_bar = 0.
MaterialLaws shallow_water_preset(double rho_bar0 = 1.0, double c0 = 0.5);

// (rho0, u0) -> (a0, u0); rejects data below the density floor c0.
std::pair<Field, VectorField> reformulate(const Field& rho0,
                                          const VectorField& u0,
                                          const MaterialLaws& laws);

// Right-hand sides, assembled with dealiased products.
Field cns_F(const Field& a, const VectorField& u);
VectorField cns_G(const Field& a, const VectorField& u,
                  const MaterialLaws& laws);

// Low-pass data smoothing a0n = S_{n + shift} a0, u0n = S_n u0; the shift is
// the smallest nonnegative integer keeping rho0 (1 + a0n) >= (3/4) c0
// pointwise. Throws if no shift in the resolved range achieves the floor.
struct MollifiedData {
    Field a;
    VectorField u;
    int shift = 0;
};
MollifiedData mollify_data(const Field& a0, const VectorField& u0, int n,
                           const DyadicPartition& part,
                           const MaterialLaws& laws);

struct HypothesisStatus {
    bool h1 = true, h2 = true, h3 = true, h4 = true;
    double min_density = 0.0;       // H1: >= c0 / 2
    double min_mu_bar = 0.0;        // H2: >= c1
    double min_lam_2mu = 0.0;       // H2: lambda_bar + 2 mu_bar >= c1
    double c1 = 0.0;
    double h3_value = 0.0, h3_budget = 0.0;
    double h4_a_value = 0.0, h4_a_budget = 0.0;
    double h4_u_value = 0.0, h4_u_budget = 0.0;
    bool healthy() const { return h1 && h2 && h3 && h4; }
};

struct BudgetConstants {
    double E0 = 0.0;
    double C1 = 0.0, C2 = 0.0, C3 = 0.0, C4 = 0.0;
    double C0 = 0.0, A0 = 0.0;
    double eta = 0.0, c1 = 0.0;
    double T_star = 0.0; // largest checked horizon with all predicates true
    struct Predicate {
        std::string name;
        double lhs = 0.0, rhs = 0.0;
        bool holds = false;
    };
    std::vector<Predicate> predicates;
    bool all_hold() const;
};

struct SolverState {
    Field a;
    VectorField u;
    double t = 0.0;
    HypothesisStatus monitor;
};

// One Strang-split step: half transport of a (u frozen, conservative form,
// SSP-RK3), full momentum step of u (a frozen, ETDRK2 with G at each stage),
// half transport again. A density-floor or ellipticity breach marks the
// state unhealthy but the step result is still returned (post-mortem mode).
SolverState cns_step(const SolverState& state, const MaterialLaws& laws,
                     double dt, const DyadicPartition& part);

struct SolverConfig {
    double T = 0.1;
    double dt = 1e-3;
    double p = 2.0;            // diagnostic exponent
    int record_every = 1;
    int mollify_n = -1;        // >= 0: smooth data at level n before running
    double eta = 0.05;         // smallness budget
    double weight_rate = 1.0;  // c in the parabolic weights
    int a_offset = 3;          // A(T) exponent [N/p] + a_offset
    bool store_snapshots = false;
};

struct CnsRun {
    std::vector<double> times;
    NormSeries a_series, u_series, f_series; // block norms at cfg.p
    std::vector<double> mass;                // mean of rho over time
    std::vector<double> min_density, a_sup, f_sup, grad_u_sup;
    std::vector<double> grad_u_besov;        // ||grad u||_{B^{N/p}_{p,1}}
    std::vector<HypothesisStatus> monitor_trace;
    std::vector<Field> a_snapshots;          // only if store_snapshots
    std::vector<VectorField> u_snapshots;
    Field a_final;
    VectorField u_final;
    BudgetConstants budget;
    SolverConfig config;
    MaterialLaws laws;
    double first_breach_time = inf;          // empirical lifespan proxy
    bool healthy_to_end = true;
    int mollify_shift = 0;
    // Margin targets recorded next to the realized values.
    double h3_realized = 0.0, h3_target = 0.0; // 7/8 C0 E0
    double h4_a_realized = 0.0, h4_a_target = 0.0; // 7/8 A0 eta
    double h4_u_realized = 0.0, h4_u_target = 0.0; // 2/3 eta
    double h1_realized = 0.0, h1_target = 0.0; // 5/8 c0
};

// Runs the split scheme, fits the constants C1..C4 from the run's own
// linear-estimate residuals, forms C0 = 4 C1 and A0 = 2 C2 (1 + C0 E0), and
// evaluates the named smallness predicates and hypothesis trace.
CnsRun run_scheme(const Field& a0, const VectorField& u0,
                  const MaterialLaws& laws, const SolverConfig& cfg,
                  const DyadicPartition& part);

// Log-interpolation check:
//   ||f||_{B^s_{p,1}} <= C/eps ||f||_{B^s_{p,inf}}
//       log(e + (||f||_{B^{s-eps}_{p,inf}} + ||f||_{B^{s+eps}_{p,inf}})
//               / ||f||_{B^s_{p,inf}}),
// returned as the LHS/RHS ratio (C = 1). Requires 0 < eps <= 1.
double log_interpolation_ratio(const Field& f, double s, double p, double eps,
                               const DyadicPartition& part);
double log_interpolation_ratio(const VectorField& f, double s, double p,
                               double eps, const DyadicPartition& part);
// Time-integrated variant on a recorded series (exponent rho_exp in time).
double log_interpolation_ratio(const NormSeries& series, double s,
                               double rho_exp, double eps);

// int_eps^1 dr / (r log(e + c_t / r)), by substitution r = e^{-x} and
// composite Simpson; diverges as eps -> 0 for any c_t >= 0.
double osgood_integral(double c_t, double eps);

struct UniquenessReport {
    std::vector<double> times;
    std::vector<double> da_norm;  // ||delta a(t)||_{B^0_{N,inf}}
    std::vector<double> du_norm;  // running L~1_t(B^1_{N,inf}) of delta u
    bool identically_zero = false;
    double growth_factor = 0.0;   // max_t da(t) / da(0) when da(0) > 0
    double log_interp_ratio = 0.0;
    double c_t = 0.0;             // measured size constant
    double osgood_value = 0.0;    // integral at eps
    double osgood_eps = 0.0;
};

// Requires both runs to share grid, horizon, and snapshot recording;
// diagnostics use p = N.
UniquenessReport uniqueness_distance(const CnsRun& r1, const CnsRun& r2,
                                     const DyadicPartition& part,
                                     double eps_osgood = 1e-20);

} // namespace besovlab
