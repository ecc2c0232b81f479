#include "doctest.h"
#include "printers.hpp"
#include "logalg/operator.hpp"
#include "logalg/roman.hpp"
#include "oracles.hpp"

#include <stdexcept>

using namespace logalg;

namespace {

ArtinOp ops(int cap, ArtinOp::Terms t) { return ArtinOp(cap, std::move(t)); }

// f = D + c_2 D^2 + ... + c_cap D^cap with small random rationals; lead
// coefficient is nonzero but not necessarily 1.
ArtinOp random_delta(oracle::Gen& g, int cap) {
    ArtinOp::Terms t{{1, g.integer(0, 3) == 0 ? g.nonzero_rational(3, 2) : Rat(1)}};
    for (int k = 2; k <= cap; ++k) t[k] = g.rational(3, 4);
    return ArtinOp(cap, t);
}

ArtinOp random_op(oracle::Gen& g, int lead, int cap) {
    ArtinOp::Terms t{{lead, g.nonzero_rational()}};
    for (int k = lead + 1; k <= cap; ++k) t[k] = g.rational();
    return ArtinOp(cap, t);
}

}  // namespace

TEST_CASE("catalogued operators") {
    CHECK(make(op::BernoulliJ{}, 3) == ops(3, {{0, 1}, {1, rat(1, 2)}, {2, rat(1, 6)}, {3, rat(1, 24)}}));
    CHECK(make(op::Weierstrass{rat(1, 2)}, 4) == ops(4, {{0, 1}, {2, rat(1, 2)}, {4, rat(1, 8)}}));
    CHECK(make(op::OneMinusDPow{-1}, 3) == ops(3, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    CHECK(make(op::Derivative{}, 5) == ops(5, {{1, 1}}));
    CHECK(make(op::Identity{}, 5) == ArtinOp::identity(5));
    CHECK(make(op::ForwardDiff{}, 3) == ops(3, {{1, 1}, {2, rat(1, 2)}, {3, rat(1, 6)}}));
    CHECK(make(op::Shift{2}, 3) == ops(3, {{0, 1}, {1, 2}, {2, 2}, {3, rat(4, 3)}}));
    CHECK(binomial(rat(1, 2), 2) == rat(-1, 8));
    CHECK(binomial(-3, 3) == -10);
}

TEST_CASE("construction and access") {
    CHECK_THROWS(ArtinOp(2, {{3, 1}}));
    ArtinOp a = ops(4, {{-1, 2}, {3, 1}});
    CHECK(a.lead() == -1);
    CHECK(a.coeff(0) == 0);
    CHECK_THROWS_AS(a.coeff(5), std::out_of_range);
    CHECK(ArtinOp::zero(4).lead() == 5);
    CHECK(a.truncate(2) == ops(2, {{-1, 2}}));
    CHECK_THROWS(a.truncate(5));
}

TEST_CASE("products") {
    ArtinOp delta = make(op::ForwardDiff{}, 8);
    ArtinOp dinv = op_recip(make(op::Derivative{}, 8));
    CHECK(agree_through(op_mul(delta, dinv), make(op::BernoulliJ{}, 7), 7));
    CHECK(op_mul(delta, dinv).cap() == 7);

    ArtinOp a = make(op::Weierstrass{1}, 6);
    CHECK(op_mul(a, ArtinOp::identity(6)) == a);
    CHECK(op_mul(make(op::Derivative{}, 6), make(op::Derivative{}, 6)) == ops(7, {{2, 1}}));
    CHECK(agree_through(op_mul(make(op::BernoulliJ{}, 9), make(op::Derivative{}, 9)), make(op::ForwardDiff{}, 10), 10));
}

TEST_CASE("reciprocals") {
    ArtinOp binv = op_recip(make(op::BernoulliJ{}, 6));
    CHECK(binv == ops(6, {{0, 1}, {1, rat(-1, 2)}, {2, rat(1, 12)}, {4, rat(-1, 720)}, {6, rat(1, 30240)}}));
    CHECK(op_recip(make(op::Derivative{}, 4)) == ops(2, {{-1, 1}}));
    oracle::Gen g(41);
    for (int i = 0; i < 20; ++i) {
        ArtinOp a = random_op(g, g.integer(-2, 2), 6);
        CHECK(agree_through(op_recip(op_recip(a)), a, a.cap()));
        CHECK(op_recip(op_recip(a)).cap() == a.cap());
    }
    CHECK_THROWS(op_recip(ArtinOp::zero(3)));
}

TEST_CASE("reciprocal of J reproduces the Bernoulli numbers") {
    ArtinOp binv = op_recip(make(op::BernoulliJ{}, 12));
    auto b = oracle::bernoulli_recurrence(12);
    for (int k = 0; k <= 12; ++k) CHECK(binv.coeff(k) * oracle::factorial(k) == b[static_cast<std::size_t>(k)]);
}

TEST_CASE("powers") {
    CHECK(op_pow(make(op::BernoulliJ{}, 2), -3) == ops(2, {{0, 1}, {1, rat(-3, 2)}, {2, 1}}));
    CHECK(op_pow(make(op::Weierstrass{}, 4), 0) == ArtinOp::identity(4));
    CHECK(agree_through(op_pow(make(op::Derivative{}, 4), -2), ops(0, {{-2, 1}}), 0));
    CHECK(op_pow(make(op::Derivative{}, 4), -2).terms() == ArtinOp::Terms{{-2, 1}});
}

TEST_CASE("composition") {
    ArtinOp delta = make(op::ForwardDiff{}, 6);
    CHECK(agree_through(op_compose(delta, make(op::Derivative{}, 6)), delta, 6));
    CHECK(agree_through(op_compose(ops(1, {{0, 1}, {1, 1}}), ops(2, {{1, 1}, {2, 1}})), ops(2, {{0, 1}, {1, 1}, {2, 1}}), 2));
    CHECK(op_compose(ops(1, {{0, 1}, {1, 1}}), ops(2, {{1, 1}, {2, 1}})).cap() >= 1);
}

TEST_CASE("compositional inverse") {
    ArtinOp g = comp_inverse(make(op::ForwardDiff{}, 4));
    CHECK(g == ops(4, {{1, 1}, {2, rat(-1, 2)}, {3, rat(1, 3)}, {4, rat(-1, 4)}}));
    CHECK(agree_through(comp_inverse(make(op::Derivative{}, 5)), make(op::Derivative{}, 5), 5));
    CHECK_THROWS(comp_inverse(make(op::BernoulliJ{}, 4)));

    oracle::Gen gen(43);
    for (int i = 0; i < 20; ++i) {
        const int cap = gen.integer(2, 7);
        ArtinOp f = random_delta(gen, cap);
        ArtinOp inv = comp_inverse(f);
        ArtinOp d = make(op::Derivative{}, cap);
        CHECK(inv.cap() == cap);
        CHECK(agree_through(op_compose(f, inv), d, cap));
        CHECK(agree_through(op_compose(inv, f), d, cap));
        CHECK(agree_through(comp_inverse(inv), f, cap));
    }
}

TEST_CASE("ring laws") {
    oracle::Gen g(47);
    for (int i = 0; i < 100; ++i) {
        ArtinOp a = random_op(g, g.integer(-2, 2), g.integer(2, 6));
        ArtinOp b = random_op(g, g.integer(-2, 2), g.integer(2, 6));
        ArtinOp c = random_op(g, g.integer(-2, 2), g.integer(2, 6));
        CHECK(op_mul(a, b) == op_mul(b, a));
        ArtinOp l = op_mul(op_mul(a, b), c), r = op_mul(a, op_mul(b, c));
        CHECK(l.cap() == r.cap());
        CHECK(agree_through(l, r, l.cap()));
        ArtinOp dl = op_mul(a, op_add(b, c)), dr = op_add(op_mul(a, b), op_mul(a, c));
        CHECK(agree_through(dl, dr, std::min(dl.cap(), dr.cap())));
        CHECK(op_sub(a, a).is_zero());
        CHECK(op_scale(2, a) == op_add(a, a));
    }
}

TEST_CASE("application") {
    ArtinOp binv = op_recip(make(op::BernoulliJ{}, 12));
    LogSeries b1 = apply(binv, LogSeries::harmonic(Order::Generic, 1, -11));
    CHECK(b1.floor() == -11);
    CHECK(b1.coeff(1) == 1);
    CHECK(b1.coeff(0) == rat(-1, 2));
    CHECK(b1.coeff(-1) == rat(1, 12));
    CHECK(b1.coeff(-2) == 0);
    CHECK(b1.coeff(-3) == rat(-1, 360));
    CHECK(b1.coeff(-5) == rat(1, 1260));

    for (int a = -5; a <= 5; ++a) {
        LogSeries p = LogSeries::harmonic(Order::Generic, a, a - 6);
        CHECK(apply(make(op::Derivative{}, 10), p) == roman(a) * LogSeries::harmonic(Order::Generic, a - 1, a - 7));
    }

    ArtinOp t = op_mul(make(op::Shift{1}, 2), op_pow(make(op::BernoulliJ{}, 2), -3));
    CHECK(apply(t, LogSeries::harmonic(Order::Zero, 2, 0)) == oracle::as_series(oracle::lower_factorial(2)));

    // a cap-4 D only pins the result down to top - 4
    CHECK(apply(make(op::Derivative{}, 4), LogSeries::harmonic(Order::Generic, 2, -6)).floor() == -2);

    CHECK_THROWS(apply(op_recip(make(op::Derivative{}, 3)), LogSeries::harmonic(Order::Zero, 2, 0)));
}

TEST_CASE("application is linear and multiplicative") {
    oracle::Gen g(53);
    for (int i = 0; i < 100; ++i) {
        LogSeries p = g.series(Order::Generic, 4, -6);
        LogSeries q = g.series(Order::Generic, 4, -6);
        ArtinOp a = random_op(g, g.integer(-1, 2), 8);
        ArtinOp b = random_op(g, g.integer(-1, 2), 8);
        Rat c = g.rational();
        LogSeries lin = apply(a, p + c * q);
        LogSeries lin2 = apply(a, p) + c * apply(a, q);
        CHECK(agree_above(lin, lin2, std::max(lin.floor(), lin2.floor())));
        LogSeries m1 = apply(op_mul(a, b), p);
        LogSeries m2 = apply(a, apply(b, p));
        CHECK(agree_above(m1, m2, std::max(m1.floor(), m2.floor())));
    }
}

TEST_CASE("formal derivative") {
    CHECK(op_derivative(make(op::ForwardDiff{}, 4)) == make(op::Shift{1}, 3));
    CHECK(op_derivative(ops(3, {{-1, 1}, {2, 1}})) == ops(2, {{-2, -1}, {1, 2}}));
}
