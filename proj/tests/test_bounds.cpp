#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "girthlab/bounds.hpp"
#include "girthlab/regular.hpp"

namespace gb = girthlab::bounds;
using gb::Rational;

namespace {

/// Tree inequality right-hand sides restated independently of the library's
/// symbolic machinery, for the substitution identity check.
Rational rhs_reference(int girth, const Rational& wc, const Rational& wr) {
    Rational q = wc - 1;
    Rational v = 1 + wr * q;
    if (girth == 8) return v + (wr - 1) * q * q;
    v += wr * (wr - 1) * q * q;
    if (girth == 10) return v;
    if (girth == 12) return v + (wr - 1) * (wr - 1) * q * q * q;
    v += wr * (wr - 1) * (wr - 1) * q * q * q;
    if (girth == 14) return v;
    return v + (wr - 1) * (wr - 1) * (wr - 1) * q * q * q * q;  // girth 16
}

}  // namespace

TEST_CASE("girth-8 closed form", "[bounds]") {
    CHECK(gb::bound_girth8(2, 64) == Catch::Approx(16.0).margin(1e-9));
    CHECK(gb::bound_girth8(2, 1) == Catch::Approx(2.0).margin(1e-9));
    CHECK(gb::bound_girth8(3, 45) == Catch::Approx(27.0).margin(1e-9));
    CHECK_THROWS(gb::bound_girth8(1, 10));

    // the returned value solves m^2 + wc(wc-2)m - wc^2(wc-1)n = 0
    double m = gb::bound_girth8(3, 45);
    CHECK(m * m + 3.0 * 1 * m - 9.0 * 2 * 45 == Catch::Approx(0.0).margin(1e-6));
}

TEST_CASE("girth-8 bound is tight at column weight 2 on perfect squares", "[bounds]") {
    for (long long k = 2; k <= 40; ++k)
        CHECK(gb::bound_girth8(2, k * k) == static_cast<double>(2 * k));
}

TEST_CASE("girth-8 bound is monotone in n", "[bounds]") {
    for (int wc = 2; wc <= 5; ++wc) {
        double prev = 0;
        for (long long n = 1; n <= 2000; n += 37) {
            double b = gb::bound_girth8(wc, n);
            CHECK(b >= prev);
            prev = b;
        }
    }
}

TEST_CASE("quadratic consistency of the closed form", "[bounds]") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> wc_dist(2, 6);
    std::uniform_int_distribution<long long> n_dist(1, 1000000);
    for (int trial = 0; trial < 200; ++trial) {
        int wc = wc_dist(rng);
        long long n = n_dist(rng);
        double m = gb::bound_girth8(wc, n);
        double lhs = m * m + wc * (wc - 2.0) * m - wc * wc * (wc - 1.0) * n;
        double scale = std::max(1.0, std::abs(wc * wc * (wc - 1.0) * n));
        CHECK(std::abs(lhs) / scale < 1e-6);
    }
}

TEST_CASE("tree inequality right-hand sides", "[bounds]") {
    CHECK(gb::tree_inequality_rhs(8, 2, 4) == 8);
    CHECK(gb::tree_inequality_rhs(10, 3, 3) == 31);
    CHECK(gb::tree_inequality_rhs(8, 2, 2) == 4);
    CHECK_THROWS(gb::tree_inequality_rhs(18, 2, 2));
    CHECK_THROWS(gb::tree_inequality_rhs(8, 1, 2));

    // the girth-8 RHS at (2,4) is exactly the check count the regular
    // construction needs
    auto [n, m] = girthlab::predicted_dims(2, 4);
    CHECK(gb::tree_inequality_rhs(8, 2, 4) == m);
}

TEST_CASE("assembled polynomial for girth 10", "[bounds]") {
    auto p = gb::assemble_polynomial(10, 3, 1000);
    CHECK(p.degree == 3);
    CHECK(p.clearing_power == 2);
    REQUIRE(p.coefficients.size() == 4);
    CHECK(p.coefficients[3] == 1);
    CHECK(p.coefficients[2] == -1);
    CHECK(p.coefficients[1] == 6000);      // wc(wc-1)(wc-2) n
    CHECK(p.coefficients[0] == -36000000); // wc^2(wc-1)^2 n^2

    for (long long n : {1LL, 7LL, 1000LL}) {
        auto p2 = gb::assemble_polynomial(10, 2, n);
        CHECK(p2.coefficients[1] == 0);  // the n m term vanishes at wc = 2
        CHECK(p2.coefficients[0] == Rational(-4 * n * n));
    }

    CHECK_THROWS(gb::assemble_polynomial(8, 3, 10));
    CHECK_THROWS(gb::assemble_polynomial(11, 3, 10));
}

TEST_CASE("assembled polynomials match the tabulated sign patterns", "[bounds]") {
    auto sign = [](const Rational& c) { return c > 0 ? 1 : (c < 0 ? -1 : 0); };

    auto p12 = gb::assemble_polynomial(12, 3, 100);
    CHECK(p12.degree == 3);
    CHECK(sign(p12.coefficients[3]) == 1);
    CHECK(sign(p12.coefficients[2]) == -1);
    CHECK(sign(p12.coefficients[1]) == 1);
    CHECK(sign(p12.coefficients[0]) == -1);

    for (int wc : {2, 3, 5}) {
        auto p14 = gb::assemble_polynomial(14, wc, 100);
        CHECK(p14.degree == 4);
        CHECK(p14.coefficients[4] == 1);
        CHECK(p14.coefficients[3] == -1);
        CHECK(sign(p14.coefficients[2]) == -1);
        CHECK(sign(p14.coefficients[1]) == 1);
        CHECK(sign(p14.coefficients[0]) == -1);

        auto p16 = gb::assemble_polynomial(16, wc, 100);
        CHECK(p16.degree == 4);
        CHECK(p16.coefficients[4] == 1);
        CHECK(sign(p16.coefficients[3]) == (wc == 2 ? 0 : 1));
        CHECK(sign(p16.coefficients[2]) == -1);
        CHECK(sign(p16.coefficients[1]) == 1);
        CHECK(sign(p16.coefficients[0]) == -1);
    }

    // P(0) <= 0 and monic, across a parameter sweep
    for (int girth : {10, 12, 14, 16})
        for (int wc = 2; wc <= 6; ++wc)
            for (long long n : {1LL, 10LL, 1000LL}) {
                auto p = gb::assemble_polynomial(girth, wc, n);
                CHECK(p.coefficients.back() == 1);
                CHECK(p.coefficients.front() <= 0);
            }
}

TEST_CASE("substitution identity under exact rational arithmetic", "[bounds]") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> wc_dist(2, 6);
    std::uniform_int_distribution<int> num(1, 500), den(1, 24);

    for (int trial = 0; trial < 200; ++trial) {
        int wc = wc_dist(rng);
        Rational m(num(rng), den(rng));
        Rational n(num(rng), den(rng));
        for (int girth : {10, 12, 14, 16}) {
            auto p = gb::assemble_polynomial_rational(girth, wc, n);
            Rational wr = Rational(wc) * n / m;
            Rational residual = m - rhs_reference(girth, Rational(wc), wr);
            Rational cleared = residual;
            for (int i = 0; i < p.clearing_power; ++i) cleared *= m;
            CHECK(p.eval_exact(m) == cleared);
        }
    }
}

TEST_CASE("root bracketing on frozen integer evaluations", "[bounds]") {
    auto p10 = gb::assemble_polynomial(10, 3, 1000);
    CHECK(p10.eval_exact(320) == -1414400);
    CHECK(p10.eval_exact(330) == 1808100);
    auto rep = gb::min_m_root(10, 3, 1000);
    REQUIRE(rep.root.has_value());
    CHECK(*rep.root > 320.0);
    CHECK(*rep.root < 330.0);

    auto p = gb::assemble_polynomial(10, 2, 4);
    CHECK(p.eval_exact(4) == -16);
    CHECK(p.eval_exact(5) == 36);
    auto rep2 = gb::min_m_root(10, 2, 4);
    CHECK(*rep2.root > 4.0);
    CHECK(*rep2.root < 5.0);
}

TEST_CASE("roots are certified by an exact sign change", "[bounds]") {
    for (int girth : {10, 12, 14, 16})
        for (int wc : {2, 3, 4})
            for (long long n : {50LL, 1000LL, 100000LL}) {
                auto p = gb::assemble_polynomial(girth, wc, n);
                auto rep = gb::min_m_root(girth, wc, n);
                double root = *rep.root;
                CHECK(p.eval_exact(Rational(root * (1 - 1e-6))) < 0);
                CHECK(p.eval_exact(Rational(root * (1 + 1e-6))) > 0);
                CHECK(rep.residual <= 1e-6 * std::abs(p.eval(2 * root)));
            }
}

TEST_CASE("root bound is monotone in n", "[bounds]") {
    for (int girth : {10, 14}) {
        double prev = 0;
        for (long long n = 10; n <= 100000; n *= 10) {
            double b = gb::min_m_root(girth, 3, n).m_lower;
            CHECK(b >= prev);
            prev = b;
        }
    }
}

TEST_CASE("scaling exponents over a decade grid", "[bounds]") {
    std::vector<long long> grid{10000, 100000, 1000000, 10000000, 100000000};
    CHECK(gb::scaling_exponent(10, 3, grid) == Catch::Approx(2.0 / 3).margin(0.05));
    CHECK(gb::scaling_exponent(12, 3, grid) == Catch::Approx(2.0 / 3).margin(0.05));
    CHECK(gb::scaling_exponent(14, 3, grid) == Catch::Approx(3.0 / 4).margin(0.05));
    CHECK(gb::scaling_exponent(16, 3, grid) == Catch::Approx(3.0 / 4).margin(0.05));
    CHECK(gb::scaling_exponent(8, 2, grid) == Catch::Approx(0.5).margin(0.05));

    CHECK_THROWS_WITH(gb::scaling_exponent(10, 3, {10, 100, 1000}), "grid too small");
    CHECK_THROWS(gb::scaling_exponent(10, 3, {10, 100, 100, 1000}));
}
