// Time-dependent block weights and weighted norms.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include <besovlab/recipes.hpp>
#include <besovlab/weights.hpp>

using namespace besovlab;

namespace {

std::vector<double> time_lattice() {
    // 40 log-spaced samples in [1e-4, 10], plus t = 0.
    std::vector<double> ts{0.0};
    for (int i = 0; i < 40; ++i)
        ts.push_back(1e-4 * std::pow(10.0 / 1e-4, i / 39.0));
    return ts;
}

} // namespace

TEST_CASE("parabolic closure: explicit values and limits") {
    WeightSequence ws(1.0, -2, 8);
    CHECK(ws.e(0, 0.0) == 0.0);
    CHECK(ws.e(5, 0.0) == 0.0);
    // e_0(ln 2) = sqrt(1 - 1/2).
    CHECK(ws.e(0, std::log(2.0)) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    // Saturation from below: e in [0, 1].
    for (int l = -2; l <= 8; ++l)
        for (double t : time_lattice()) {
            double v = ws.e(l, t);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    CHECK_THROWS_AS(ws.e(0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightSequence(0.0, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(WeightSequence(1.0, 4, 0), std::invalid_argument);
}

TEST_CASE("omega at the saturated closure e = 1 equals 2 exactly") {
    WeightSequence ws([](int, double) { return 1.0; }, -2, 8);
    for (int k = -2; k <= 8; ++k)
        CHECK(ws.omega(k, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("omega: zero start, uniform bound, truncation error") {
    for (double c : {0.5, 1.0, 2.0}) {
        WeightSequence ws(c, -2, 8);
        for (int k = -2; k <= 8; ++k) {
            CHECK(ws.omega(k, 0.0) == 0.0);
            for (double t : time_lattice())
                CHECK(ws.omega(k, t) <= 2.0 + std::ldexp(1.0, -16));
        }
    }
    // Refining the tail moves omega by less than the advertised bound.
    WeightSequence coarse(1.0, -2, 8, 16), fine(1.0, -2, 8, 48);
    for (int k = -2; k <= 8; ++k)
        for (double t : {1e-3, 0.1, 1.0, 10.0})
            CHECK(std::abs(coarse.omega(k, t) - fine.omega(k, t)) <=
                  std::ldexp(1.0, -16));
    CHECK_THROWS_AS(coarse.omega(99, 1.0), std::invalid_argument);
}

TEST_CASE("weight-family inequalities on a (k, t) lattice") {
    const auto ts = time_lattice();
    for (double c : {0.5, 1.0, 2.0}) {
        const int lo = -2, hi = 8;
        WeightSequence ws(c, lo, hi);
        for (double t : ts) {
            for (int k = lo; k <= hi; ++k) {
                double wk = ws.omega(k, t);
                // e_k <= omega_k (the l = k term alone).
                CHECK(ws.e(k, t) <= wk + 1e-14);
                for (int kp = lo; kp <= hi; ++kp) {
                    double wkp = ws.omega(kp, t);
                    if (k >= kp)
                        CHECK(wk <= std::ldexp(1.0, k - kp) * wkp + 1e-12);
                    else
                        CHECK(wk <= 3.0 * wkp + 1e-12);
                    if (std::abs(k - kp) <= 2 && wkp > 0.0) {
                        double ratio = wk / wkp;
                        CHECK(ratio >= 1.0 / 8.0 - 1e-12);
                        CHECK(ratio <= 8.0 + 1e-12);
                    }
                }
            }
        }
        // Monotone in t for each k.
        for (int k = lo; k <= hi; ++k) {
            double prev = 0.0;
            for (double t : ts) {
                double v = ws.omega(k, t);
                CHECK(v >= prev - 1e-14);
                prev = v;
            }
        }
    }
}

TEST_CASE("weighted Besov norm: zero horizon, two-sided comparison, mode sum") {
    Grid g(2, 64);
    DyadicPartition part = DyadicPartition::build(g, 2);
    WeightSequence ws(1.0, part.j_min(), part.j_max());

    FieldRecipe r;
    r.seed = 13;
    Field f = generate(r, g, part);
    BesovParams bp{0.5, 2.0, 1.0, inf};

    WeightedBesovParams w0{bp, ws, 0.0};
    CHECK(weighted_besov_norm(f, w0, part) == 0.0);

    WeightedBesovParams wt{bp, ws, 0.3};
    CHECK(weighted_besov_norm(f, wt, part) <=
          2.0 * besov_norm(f, bp, part) * (1.0 + 1e-12));

    // Single mode |k| = 4: the norm is the explicit phi/omega sum.
    FieldRecipe rm;
    rm.spectrum = FieldRecipe::Spectrum::multimode;
    rm.modes = {{{4, 0, 0}, 1.0}};
    rm.seed = 5;
    Field mode = generate(rm, g, part);
    double l2 = lp_norm(mode, 2.0);
    WeightedBesovParams ws0{{0.0, 2.0, 1.0, inf}, ws, 0.25};
    double expected = 0.0;
    for (int j = part.j_min(); j <= part.j_max(); ++j)
        expected += part.phi(std::ldexp(4.0, -j)) * ws.omega(j, 0.25) * l2;
    CHECK(weighted_besov_norm(mode, ws0, part) ==
          doctest::Approx(expected).epsilon(1e-12));

    WeightedBesovParams neg{bp, ws, -1.0};
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
}

TEST_CASE("weighted time norm: constant series and single active block") {
    WeightSequence ws(1.0, 0, 6);
    const double T = 0.5;

    // Synthetic series with one active block k0 = 3, constant value b.
    NormSeries series;
    series.j_min = 0;
    series.j_max = 6;
    series.params = BesovParams{1.0, 2.0, 1.0, inf};
    const double b = 0.7;
    const int n = 50;
    for (int i = 0; i <= n; ++i) {
        std::vector<double> row(7, 0.0);
        row[3] = b;
        series.append(T * i / n, std::move(row));
    }

    // q = inf: value is 2^{k s} omega_k(T) b.
    WeightedBesovParams wp{series.params, ws, T};
    CHECK(weighted_cl_norm(series, wp) ==
          doctest::Approx(std::pow(2.0, 3.0) * ws.omega(3, T) * b).epsilon(1e-12));

    // q = 1: the trapezoid integral of the constant block is b T.
    WeightedBesovParams wq1{{1.0, 2.0, 1.0, 1.0}, ws, T};
    CHECK(weighted_cl_norm(series, wq1) ==
          doctest::Approx(std::pow(2.0, 3.0) * ws.omega(3, T) * b * T).epsilon(1e-12));
}

TEST_CASE("smallness time: trivial horizons and bracketing") {
    WeightSequence ws(1.0, 0, 6);
    NormSeries series;
    series.j_min = 0;
    series.j_max = 6;
    series.params = BesovParams{0.0, 2.0, 1.0, inf};
    const double T = 1.0, b = 1.0;
    const int n = 200;
    for (int i = 0; i <= n; ++i) {
        std::vector<double> row(7, 0.0);
        row[3] = b;
        series.append(T * i / n, std::move(row));
    }
    WeightedBesovParams wp{series.params, ws, T};

    // eps at least twice the unweighted sup norm: the full horizon qualifies.
    SmallnessResult full = smallness_time(series, wp, 2.0 * std::pow(2.0, 0.0) * b + 1.0);
    CHECK(full.achieved);
    CHECK(full.t_tilde == T);

    // Interior eps: the result is the largest sample satisfying the bound,
    // with the next sample already above it (the value is omega_3(t) b here).
    const double eps = 1e-2;
    SmallnessResult r = smallness_time(series, wp, eps);
    REQUIRE(r.achieved);
    CHECK(r.value <= eps);
    auto value_at = [&](double t) { return ws.omega(3, t) * b; };
    CHECK(value_at(r.t_tilde) <= eps * (1.0 + 1e-12));
    CHECK(value_at(r.t_tilde + T / n) > eps);

    // Interior eps chosen between two consecutive sample values: the
    // returned horizon is exactly the earlier sample.
    double eps_mid = 0.5 * (value_at(3 * T / n) + value_at(4 * T / n));
    SmallnessResult mid = smallness_time(series, wp, eps_mid);
    REQUIRE(mid.achieved);
    CHECK(mid.t_tilde == doctest::Approx(3 * T / n).epsilon(1e-12));

    // Zero series: any eps qualifies up to the full horizon.
    NormSeries zero;
    zero.j_min = 0;
    zero.j_max = 6;
    zero.params = series.params;
    for (int i = 0; i <= 10; ++i) zero.append(0.1 * i, std::vector<double>(7, 0.0));
    SmallnessResult z = smallness_time(zero, wp, 1e-12);
    CHECK(z.achieved);
    CHECK(z.t_tilde == doctest::Approx(1.0));

    CHECK_THROWS_AS(smallness_time(series, wp, 0.0), std::invalid_argument);
}

TEST_CASE("weighted sup norm is nondecreasing in the horizon") {
    Grid g(2, 32);
    DyadicPartition part = DyadicPartition::build(g, 2);
    WeightSequence ws(1.0, part.j_min(), part.j_max());
    FieldRecipe r;
    r.seed = 19;
    Field f = generate(r, g, part);
    double prev = 0.0;
    for (double T : {0.0, 1e-3, 1e-2, 0.1, 1.0, 10.0}) {
        WeightedBesovParams wp{{0.5, 2.0, 1.0, inf}, ws, T};
        double v = weighted_besov_norm(f, wp, part);
        CHECK(v >= prev - 1e-13);
        prev = v;
    }
}
