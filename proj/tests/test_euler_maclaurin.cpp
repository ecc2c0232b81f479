#include "doctest.h"
#include "printers.hpp"
#include "logalg/classic.hpp"
#include "logalg/euler_maclaurin.hpp"
#include "logalg/roman.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace logalg;

TEST_CASE("operator identity residual") {
    for (int k = 1; k <= 12; ++k) {
        EMReport r = em_operator_residual(k);
        CHECK(r.symbolic_ok);
        CHECK(r.residual_lead == k + 1);
        CHECK(r.numeric_abs_err.has_value());
        CHECK(em_residual_operator(k).is_zero());
    }
    // K = 0 keeps only B_0 J, which misses the D^1 term
    CHECK_FALSE(em_operator_residual(0).symbolic_ok);
    EMReport bad = em_operator_residual(0, true);
    CHECK_FALSE(bad.symbolic_ok);
    CHECK(em_residual_operator(0, true).coeff(1) != 0);
    CHECK_FALSE(em_operator_residual(6, true).symbolic_ok);
    CHECK(em_operator_residual(6, true).residual_lead == 1);
}

TEST_CASE("telescoping lambda sums") {
    for (int a = -3; a <= 3; ++a)
        for (int k : {0, 1, 2, 5}) {
            CAPTURE(a);
            CAPTURE(k);
            CHECK(lambda_sum_closed_form(Order::Generic, a, k, a - 10).equal());
            if (a >= 0) CHECK(lambda_sum_closed_form(Order::Zero, a, k, 0).equal());
        }

    LambdaSumPair logs = lambda_sum_closed_form(Order::Generic, 0, 2, -8);
    LogSeries l0 = LogSeries::harmonic(Order::Generic, 0, -8);
    CHECK(logs.direct == l0 + shift(l0, 1) + shift(l0, 2));
    CHECK(logs.equal());

    // B_2(x+1) - B_2(x) = 2x
    LambdaSumPair one = lambda_sum_closed_form(Order::Zero, 1, 0, 0);
    CHECK(one.closed_form == LogSeries::harmonic(Order::Zero, 1, 0));
}

TEST_CASE("difference of Bernoulli members lowers like the derivative") {
    for (int a = -3; a <= 4; ++a) {
        LogSeries b = bernoulli_member(Order::Generic, a, a - 10);
        LogSeries diff = shift(b, 1) - b;
        CHECK(agree_above(diff, roman(a) * LogSeries::harmonic(Order::Generic, a - 1, a - 10), a - 10));
    }
}

TEST_CASE("harmonic identity") {
    SumReport r = harmonic_identity(10, 89, 6);
    REQUIRE(r.exact_lhs);
    Rat h(0);
    for (int j = 10; j <= 99; ++j) h += Rat(1, j);
    CHECK(*r.exact_lhs == h);
    CHECK(r.lhs == doctest::Approx(2.3484).epsilon(1e-4));
    CHECK(r.abs_err < 1e-8);

    SumReport single = harmonic_identity(7, 0, 12);
    CHECK(single.lhs == doctest::Approx(1.0 / 7));
    CHECK(single.abs_err < 1e-6);

    SumReport small = harmonic_identity(2, 3, 6);
    CHECK(*small.exact_lhs == rat(77, 60));
    CHECK(small.abs_err > r.abs_err);

    double prev = INFINITY;
    for (int x : {2, 5, 10, 20}) {
        double err = harmonic_identity(x, 89, 6).abs_err;
        CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("Stirling identity") {
    SumReport r = stirling_identity(10, 89, 6);
    double direct = 0;
    for (int j = 10; j <= 99; ++j) direct += std::log(j);
    CHECK(r.lhs == doctest::Approx(direct).epsilon(1e-13));
    CHECK(r.rel_err < 1e-9);

    SumReport one = stirling_identity(5, 0, 8);
    CHECK(std::abs(one.lhs - std::log(5.0)) < 1e-14);
    CHECK(one.abs_err < 1e-4);

    SumReport fact = stirling_identity(1, 9, 6);
    CHECK(fact.lhs == doctest::Approx(15.1044).epsilon(1e-5));
    CHECK(fact.abs_err < 1e-2);
    CHECK(fact.abs_err > r.abs_err);
}

TEST_CASE("numeric right side on single terms") {
    // lambda_{-1}: sum 1/x over one point
    LogSeries p = LogSeries::harmonic(Order::Generic, -1, -1);
    CHECK(em_numeric_rhs(p, 30.0, 0, 10) == doctest::Approx(1.0 / 30).epsilon(1e-12));
}

TEST_CASE("symbolic sums") {
    LogSeries r = LogSeries::harmonic(Order::Generic, -1, -12);
    CHECK(em_apply(r, 2, 10).is_zero());
    CHECK(em_apply(LogSeries::harmonic(Order::Generic, 0, -10), 0, 10).is_zero());
    CHECK(em_apply(bernoulli_member(Order::Generic, 1, -9), 1, 10).is_zero());
    CHECK_FALSE(em_apply(r, 2, 3).is_zero());

    oracle::Gen g(71);
    for (int i = 0; i < 50; ++i) {
        LogSeries p = g.series(Order::Generic, 3, -6);
        const int k = p.top_degree().value() - p.floor();
        CHECK(em_apply(p, g.integer(0, 4), k).is_zero());
    }
}
