#pragma once

#include "besovlab/weights.hpp"

namespace besovlab {

// Linearized momentum equation
//   d_t u - div(mu_bar grad u) - grad((lambda_bar + mu_bar) div u) = G,
// integrated with the ETDRK2 exponential scheme: the constant-coefficient
// part (spatial means of the viscosities frozen at t = 0) is handled exactly
// per mode, split into the components parallel (rate nu0 |k|^2 with
// nu0 = lambda0 + 2 mu0) and perpendicular (rate mu0 |k|^2) to k; the
// variable-coefficient remainder and G enter through the phi1/phi2 weights.
struct MomentumProblem {
    Grid grid;
    std::function<Field(double)> mu_bar;       // viscosity field at time t
    std::function<Field(double)> lambda_bar;   // second viscosity field
    std::function<VectorField(double)> force;  // G(t); empty = zero
    // State-dependent force G(t, u), evaluated at every integrator stage;
    // takes precedence over `force` when set (used by the nonlinear solver).
    std::function<VectorField(double, const VectorField&)> force_state;
    std::function<Field(double)> rho_dev;      // rho - rho_ref; empty = zero
    double rho_ref = 1.0;
};

struct MomentumResult {
    VectorField final_state;
    NormSeries u_series;            // vector block norms of u
    NormSeries g_series;            // block norms of G (zeros if no force)
    NormSeries rho_series;          // block norms of rho_dev (zeros if absent)
    std::vector<double> energy;     // ||u(t)||_2^2 at sample times
    std::vector<double> rho_sup;    // ||rho(t)||_inf at sample times
    double mu0 = 0.0, lambda0 = 0.0;
};

// Throws if min(mu_bar) <= 0 or min(lambda_bar + 2 mu_bar) <= 0 at any
// sampled time (the uniform ellipticity conditions, named in the message).
MomentumResult solve_momentum(const MomentumProblem& problem,
                              const VectorField& u0, double T, double dt,
                              const BesovParams& record,
                              const DyadicPartition& part,
                              int record_every = 1);

// Per-block exponential decay rates: for each block with usable data returns
// (j, rate / 4^j) where rate = log(b_first / b_last) / (t_last - t_first).
// For constant coefficients and data concentrated near |k| ~ 2^j the value
// estimates the effective diffusivity on that shell.
std::vector<std::pair<int, double>> mode_decay_fit(const NormSeries& series,
                                                   double floor_norm = 1e-280);

// A priori estimates for the linearized equation. All variants fit the
// smallest C with LHS <= C * (data + source + coupling), where coupling =
// A(T) * ||rho - rho_ref|| * ||u|| in the indicated norms and
// A(T) = (1 + sup_t ||rho||_inf)^{[N/p] + a_offset}.
enum class MomentumLaw {
    parabolic_gain,        // LHS L~q(B^{s-1+2/q}); rho at N/p; u at L~1(B^{s+1})
    parabolic_gain_smooth, // rho at N/p+1; u at L~1(B^s)
    coercive,              // LHS L~1(B^{s+1}) + L~2(B^s); data/G/rho weighted
    endpoint               // p in [2,N], r = inf scale, s pinned at -N/p
};

struct MomentumCheck {
    double lhs = 0.0;
    double data_term = 0.0;
    double source_term = 0.0;
    double coupling_term = 0.0;
    double a_factor = 0.0;
    double fitted_c = 0.0; // lhs / (data + source + coupling)
    MomentumResult run;
};

MomentumCheck momentum_estimate_check(const MomentumProblem& problem,
                                      const VectorField& u0, double T,
                                      double dt, double s, double p, double q,
                                      MomentumLaw law,
                                      const DyadicPartition& part,
                                      double weight_rate = 1.0,
                                      int a_offset = 2);

} // namespace besovlab
