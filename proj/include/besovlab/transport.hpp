#pragma once

#include "besovlab/weights.hpp"

namespace besovlab {

// Linear transport equation d_t f + v . grad f = g (advective form) or
// d_t f + div(v f) = g (conservative form), integrated with SSP-RK3 and
// spectrally dealiased products.
struct TransportProblem {
    Grid grid;
    std::function<VectorField(double)> velocity;    // v(t)
    std::function<Field(double)> source;            // g(t); empty = zero
    bool conservative = false;
};

struct TransportResult {
    Field final_state;
    NormSeries series;            // block norms of f along the run
    std::vector<double> v_times;  // sample times of V
    std::vector<double> v_values; // V(t) = int_0^t ||grad v|| (cumulative)
    double v_total = 0.0;         // V(T)
};

// Throws if dt violates the CFL bound 0.5 h / ||v||_inf (the message carries
// a suggested dt). `v_with_linf` switches V between the intersection norm
// max(B^{N/p}_{p,r}, L^inf) and the plain B^{N/p}_{p,1} norm.
TransportResult solve_transport(const TransportProblem& problem, const Field& f0,
                                double T, double dt, const BesovParams& record,
                                const DyadicPartition& part,
                                int record_every = 1, bool v_with_linf = true);

// A priori estimate check: finds the smallest constant C >= 0 with
//   ||f||_{L~inf_T(B^s_{p,r})} <= e^{C V(T)} (||f0|| + int_0^T e^{-C V} ||g||).
// The weighted variant (wp != nullptr) uses omega-weighted norms throughout,
// requires r = 1, restricts s to (-N min(1/p,1/p'), N/p], and measures V in
// B^{N/p}_{p,1} alone; the unweighted variant allows s up to N/p + 1 (the
// endpoint only for r = 1) and measures V in the intersection with L^inf.
struct TransportCheck {
    double lhs = 0.0;       // Chemin-Lerner norm of the solution
    double data_norm = 0.0; // ||f0||
    double v_total = 0.0;   // V(T)
    double fitted_c = 0.0;  // minimal admissible constant
    TransportResult run;
};

TransportCheck transport_estimate_check(const TransportProblem& problem,
                                        const Field& f0, double T, double dt,
                                        const BesovParams& bp,
                                        const DyadicPartition& part,
                                        const WeightedBesovParams* wp = nullptr);

} // namespace besovlab
