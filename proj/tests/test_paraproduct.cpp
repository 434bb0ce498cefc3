// Paraproducts, remainders, commutators, and composition operators.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include <besovlab/paraproduct.hpp>
#include <besovlab/recipes.hpp>

using namespace besovlab;

namespace {

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

bool throws_mentioning(const std::function<void()>& fn, const std::string& needle) {
    try {
        fn();
    } catch (const std::invalid_argument& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

} // namespace

TEST_CASE("Bony decomposition reconstructs the dealiased product exactly") {
    Grid g(2, 64);
    DyadicPartition part = DyadicPartition::build(g, 2);
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        Field u = random_field(g, part, seed);
        Field v = random_field(g, part, seed + 100);
        BonySplit s = bony_split(u, v, part);
        Field uv = dealiased_product(u, v);
        CHECK(lp_norm(s.t_uv + s.t_vu + s.remainder - uv, 2.0) <=
              1e-10 * std::max(lp_norm(uv, 2.0), 1e-300));
    }
}

TEST_CASE("Bony decomposition degenerate inputs") {
    Grid g(2, 64);
    DyadicPartition part = DyadicPartition::build(g, 2);
    Field v = random_field(g, part, 7);

    // u = 1: the three pieces sum back to v.
    BonySplit s = bony_split(Field::constant(g, 1.0), v, part);
    CHECK(rel_l2(s.t_uv + s.t_vu + s.remainder, v) < 1e-10);

    // v = 0: everything vanishes.
    BonySplit z = bony_split(v, Field::zeros(g), part);
    CHECK(lp_norm(z.t_uv, 2.0) == 0.0);
    CHECK(lp_norm(z.t_vu, 2.0) == 0.0);
    CHECK(lp_norm(z.remainder, 2.0) == 0.0);

    Grid other(2, 32);
    CHECK_THROWS_AS(bony_split(v, Field::zeros(other), part), std::invalid_argument);
}

TEST_CASE("frequency separation: the paraproduct carries a well-split product") {
    Grid g(2, 128);
    DyadicPartition part = DyadicPartition::build(g, 2);
    FieldRecipe lo;
    lo.spectrum = FieldRecipe::Spectrum::multimode;
    lo.modes = {{{1, 0, 0}, 1.0}};
    lo.seed = 2;
    FieldRecipe hi = lo;
    hi.modes = {{{0, 40, 0}, 1.0}};
    hi.seed = 3;
    Field u = generate(lo, g, part);
    Field v = generate(hi, g, part);
    BonySplit s = bony_split(u, v, part);
    Field uv = dealiased_product(u, v);
    // With six octaves of separation T_u v is essentially the whole product.
    CHECK(rel_l2(s.t_uv, uv) < 1e-10);
    CHECK(lp_norm(s.t_vu, 2.0) < 1e-12);
    CHECK(lp_norm(s.remainder, 2.0) < 1e-12);
}

TEST_CASE("spectral localization of paraproduct terms is exact") {
    Grid g(2, 64);
    DyadicPartition part = DyadicPartition::build(g, 2);
    Field f = random_field(g, part, 11);
    double norm = lp_norm(f, 2.0);
    for (int k = part.j_min() + 1; k <= part.j_max(); ++k) {
        Field term = dealiased_product(part.low_pass(f, k - 1), part.block(f, k));
        for (int j = part.j_min(); j <= part.j_max(); ++j) {
            if (std::abs(j - k) < 5) continue;
            CHECK(lp_norm(part.block(term, j), 2.0) <= 1e-13 * norm);
        }
    }
}

TEST_CASE("product estimate ratios: hypotheses are enforced by name") {
    Grid g(2, 32);
    DyadicPartition part = DyadicPartition::build(g, 2);
    Field f = random_field(g, part, 5);
    Field gfield = random_field(g, part, 6);

    CHECK(throws_mentioning(
        [&] { product_estimate_ratio(f, gfield, -0.5, -0.5, 2.0, part,
                                     ProductLaw::two_factor); },
        "requires s > 0"));
    CHECK(throws_mentioning(
        [&] { product_estimate_ratio(f, gfield, 2.5, 0.5, 2.0, part,
                                     ProductLaw::sum_index); },
        "requires s1 <= N/p"));
    CHECK(throws_mentioning(
        [&] { product_estimate_ratio(f, gfield, 0.5, 2.5, 2.0, part,
                                     ProductLaw::sum_index); },
        "requires s2 <= N/p"));
    // p = 1 makes the lower threshold N * (2/p - 1) = 2 binding.
    CHECK(throws_mentioning(
        [&] { product_estimate_ratio(f, gfield, 0.5, 0.5, 1.0, part,
                                     ProductLaw::sum_index); },
        "requires s1 + s2 > N*max(0, 2/p - 1)"));
    CHECK(throws_mentioning(
        [&] { product_estimate_ratio(f, gfield, 0.5, 1.0, 2.0, part,
                                     ProductLaw::endpoint); },
        "requires s2 < N/p"));

    // Valid parameters give finite positive ratios.
    CHECK(product_estimate_ratio(f, gfield, 1.2, 1.2, 2.0, part,
                                 ProductLaw::two_factor) > 0.0);
    CHECK(product_estimate_ratio(f, gfield, 0.7, 0.6, 2.0, part,
                                 ProductLaw::sum_index) > 0.0);
    CHECK(product_estimate_ratio(f, gfield, 1.0, 0.5, 2.0, part,
                                 ProductLaw::endpoint) > 0.0);

    // Degenerate right-hand side is rejected, not divided by.
    CHECK_THROWS_AS(product_estimate_ratio(f, Field::zeros(g), 0.7, 0.6, 2.0,
                                           part, ProductLaw::sum_index),
                    std::invalid_argument);
}

TEST_CASE("weighted paraproduct and product ratios enforce their hypotheses") {
    Grid g(2, 32);
    DyadicPartition part = DyadicPartition::build(g, 2);
    Field f = random_field(g, part, 8);
    Field gfield = random_field(g, part, 9);
    WeightSequence ws(1.0, part.j_min(), part.j_max());
    WeightedBesovParams wp{{0.0, 2.0, 1.0, inf}, ws, 0.05};

    CHECK(throws_mentioning(
        [&] { weighted_paraproduct_ratio(f, gfield, 0.5, 2.5, wp, part,
                                         ParaPiece::Tgf); },
        "requires s2 <= N/p"));
    CHECK(throws_mentioning(
        [&] { weighted_paraproduct_ratio(f, gfield, 0.5, 0.5, wp, part,
                                         ParaPiece::Tfg); },
        "requires s1 <= N/p - 1"));
    CHECK(throws_mentioning(
        [&] { weighted_paraproduct_ratio(f, gfield, -1.0, 0.5, wp, part,
                                         ParaPiece::R); },
        "requires s1 + s2 > N*max(0, 2/p - 1)"));
    CHECK(weighted_paraproduct_ratio(f, gfield, -0.3, 0.9, wp, part,
                                     ParaPiece::Tgf) > 0.0);
    CHECK(weighted_paraproduct_ratio(f, gfield, -0.3, 0.9, wp, part,
                                     ParaPiece::Tfg) > 0.0);
    CHECK(weighted_paraproduct_ratio(f, gfield, 0.5, 0.5, wp, part,
                                     ParaPiece::R) > 0.0);

    CHECK(throws_mentioning(
        [&] { weighted_product_ratio(f, gfield, 0.5, 0.5, wp, part, false); },
        "requires s1 <= N/p - 1"));
    CHECK(throws_mentioning(
        [&] { weighted_product_ratio(f, gfield, -0.3, 1.0, wp, part, true); },
        "requires s2 < N/p"));
    CHECK(weighted_product_ratio(f, gfield, -0.3, 0.9, wp, part, false) > 0.0);
    CHECK(weighted_product_ratio(f, gfield, -0.3, 0.5, wp, part, true) > 0.0);
}

TEST_CASE("commutators vanish on constants and are bilinear") {
    Grid g(2, 64);
    DyadicPartition part = DyadicPartition::build(g, 2);
    Field f = random_field(g, part, 12, /*j_cut=*/3);
    Field h = random_field(g, part, 13, /*j_cut=*/3);
    const int j = 2;

    // f constant: multipliers commute with constants.
    VectorField c1 = commutator(j, Field::constant(g, 4.0), h, part);
    for (const Field& comp : c1.comp) CHECK(lp_norm(comp, 2.0) <= 1e-12);
    // g constant: gradient vanishes.
    VectorField c2 = commutator(j, f, Field::constant(g, 4.0), part);
    for (const Field& comp : c2.comp) CHECK(lp_norm(comp, 2.0) <= 1e-12);

    // Bilinearity in f.
    VectorField lhs = commutator(j, f + h, h, part);
    VectorField rhs = commutator(j, f, h, part) + commutator(j, h, h, part);
    for (int d = 0; d < 2; ++d)
        CHECK(lp_norm(lhs.comp[d] - rhs.comp[d], 2.0) <=
              1e-10 * std::max(1.0, lp_norm(rhs.comp[d], 2.0)));

    // div-form matches divergence of the vector commutator.
    Field dv = div_commutator(j, f, h, part);
    CHECK(rel_l2(dv, divergence(commutator(j, f, h, part))) < 1e-10);
}

TEST_CASE("advective commutator vanishes for constant velocities") {
    Grid g(2, 64);
    DyadicPartition part = DyadicPartition::build(g, 2);
    Field f = random_field(g, part, 14, /*j_cut=*/3);
    VectorField v{{Field::constant(g, 0.8), Field::constant(g, -1.3)}};
    Field ac = advective_commutator(2, v, f, part);
    CHECK(lp_norm(ac, 2.0) <= 1e-12 * std::max(1.0, lp_norm(f, 2.0)));
}

TEST_CASE("composition operator: identity, square, and guards") {
    Grid g(2, 64);
    DyadicPartition part = DyadicPartition::build(g, 2);
    Field f = random_field(g, part, 15, /*j_cut=*/3) * 0.5;

    SmoothMap ident{[](double x) { return x; }, [](double) { return 1.0; }, 3};
    CHECK(rel_l2(compose(ident, f, part), f) < 1e-12);

    SmoothMap square{[](double x) { return x * x; },
                     [](double x) { return 2.0 * x; }, 3};
    Field sq = compose(square, f, part);
    CHECK(rel_l2(sq, dealiased_product(f, f)) < 1e-10);
    BonySplit s = bony_split(f, f, part);
    CHECK(rel_l2(sq, s.t_uv + s.t_vu + s.remainder) < 1e-10);

    SmoothMap bad{[](double) { return 1.0; }, [](double) { return 0.0; }, 3};
    CHECK_THROWS_AS(compose(bad, f, part), std::invalid_argument);
    CHECK_THROWS_AS(compose_ratio(ident, f, -1.0, 2.0, part),
                    std::invalid_argument);

    // Ratio of the identity map: both sides share ||f||, so the value is the
    // amplitude factor inverse times <= 1; just require finite and positive.
    double r = compose_ratio(ident, f, 1.0, 2.0, part);
    CHECK(r > 0.0);
    CHECK(r <= 1.0 + 1e-12);
}

TEST_CASE("composition ratio stays bounded over an amplitude sweep") {
    Grid g(2, 64);
    DyadicPartition part = DyadicPartition::build(g, 2);
    SmoothMap frac{[](double x) { return x / (1.0 + x); },
                   [](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); }, 3};
    Field base = random_field(g, part, 16, /*j_cut=*/3);
    double m = lp_norm(base, inf);
    double worst = 0.0;
    for (double amp : {0.1, 0.2, 0.4}) {
        Field f = base * (amp / m);
        worst = std::max(worst, compose_ratio(frac, f, 1.1, 2.0, part));
    }
    CHECK(worst > 0.0);
    CHECK(worst < 10.0);
}

TEST_CASE("telescoped composition residual is small for smooth maps") {
    Grid g(2, 64);
    DyadicPartition part = DyadicPartition::build(g, 2);
    SmoothMap sine{[](double x) { return std::sin(x); },
                   [](double x) { return std::cos(x); }, 3};
    Field base = random_field(g, part, 17, /*j_cut=*/3);
    Field f = base * (0.5 / lp_norm(base, inf));
    double res = compose_telescope_residual(sine, f, part);
    CHECK(res >= 0.0);
    CHECK(res < 1e-2);

    SmoothMap no_df{[](double x) { return x; }, nullptr, 3};
    CHECK_THROWS_AS(compose_telescope_residual(no_df, f, part),
                    std::invalid_argument);
}
