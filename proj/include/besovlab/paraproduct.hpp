#pragma once

#include "besovlab/weights.hpp"

namespace besovlab {

// Bony decomposition of a product: uv = T_u v + T_v u + R(u, v) with
// T_u v = sum_j S_{j-1} u Delta_j v and the remainder pairing blocks of
// comparable frequency (fattened width 1). On the torus the remainder also
// carries the product of the two low-frequency completions, which keeps the
// identity exact.
struct BonySplit {
    Field t_uv;
    Field t_vu;
    Field remainder;
};

BonySplit bony_split(const Field& u, const Field& v, const DyadicPartition& part);

// T_g f alone (low frequencies of g times blocks of f).
Field paraproduct(const Field& g, const Field& f, const DyadicPartition& part);
// R(f, g) alone, including the low-block completion term.
Field bony_remainder(const Field& f, const Field& g, const DyadicPartition& part);

// Product estimate families. two_factor: ||fg||_{B^s_{p,1}} against
// ||f|| ||g||_inf + ||f||_inf ||g|| (s = s1 > 0). sum_index:
// ||fg||_{B^{s1+s2-N/p}_{p,1}} against ||f||_{B^{s1}_{p,1}} ||g||_{B^{s2}_{p,1}}.
// endpoint: same index arithmetic with r = inf on the left and on g.
enum class ProductLaw { two_factor, sum_index, endpoint };

double product_estimate_ratio(const Field& f, const Field& g, double s1,
                              double s2, double p, const DyadicPartition& part,
                              ProductLaw law);

// Weighted paraproduct / remainder ratios: LHS in B^{s1+s2-N/p}_{p,1}(omega),
// RHS = (weighted f-norm at s1) * (unweighted g-norm at s2).
enum class ParaPiece { Tgf, Tfg, R };

double weighted_paraproduct_ratio(const Field& f, const Field& g, double s1,
                                  double s2, const WeightedBesovParams& wp,
                                  const DyadicPartition& part, ParaPiece piece);

// Weighted full-product ratios. Standard form: requires s1 <= N/p - 1,
// s2 <= N/p, s1 + s2 > N*max(0, 2/p - 1); LHS and f weighted with r = 1.
// Endpoint form: s2 < N/p strictly, s1 + s2 >= the threshold, and r = inf on
// the LHS and on g.
double weighted_product_ratio(const Field& f, const Field& g, double s1,
                              double s2, const WeightedBesovParams& wp,
                              const DyadicPartition& part, bool endpoint);

// [Delta_j, f] grad g = Delta_j(f grad g) - f Delta_j grad g.
VectorField commutator(int j, const Field& f, const Field& g,
                       const DyadicPartition& part);
// div [Delta_j, f] grad g.
Field div_commutator(int j, const Field& f, const Field& g,
                     const DyadicPartition& part);
// [v, Delta_j] . grad f = v . Delta_j grad f - Delta_j (v . grad f).
Field advective_commutator(int j, const VectorField& v, const Field& f,
                           const DyadicPartition& part);

// Scalar composition map with F(0) = 0; dF is needed only by the telescoping
// diagnostic. `order` records how many derivatives are trusted.
struct SmoothMap {
    std::function<double(double)> F;
    std::function<double(double)> dF;
    int order = 3;
};

// F(f) evaluated pointwise on the padded grid, then truncated.
Field compose(const SmoothMap& map, const Field& f, const DyadicPartition& part);

// ||F(f)||_X / ((1 + ||f||_inf)^{[s]+2} ||f||_X) with X = B^s_{p,1} or its
// weighted counterpart when wp is supplied.
double compose_ratio(const SmoothMap& map, const Field& f, double s, double p,
                     const DyadicPartition& part,
                     const WeightedBesovParams* wp = nullptr);

// Relative L^2 residual of the block-telescoping representation
// F(f) = F(S_low f) + sum_j Delta_j f * m_j(f),
// m_j(f) = int_0^1 F'(S_j f + tau Delta_j f) dtau (8-point Gauss-Legendre).
double compose_telescope_residual(const SmoothMap& map, const Field& f,
                                  const DyadicPartition& part);

} // namespace besovlab
