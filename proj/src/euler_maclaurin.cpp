#include "logalg/euler_maclaurin.hpp"

#include "logalg/classic.hpp"
#include "logalg/numeric.hpp"
#include "logalg/roman.hpp"

#include <cmath>
#include <stdexcept>

namespace logalg {

namespace {

constexpr int kMaxNumericOrder = 12;

void require_truncation(int k) {
    if (k < 0) throw std::invalid_argument("truncation order must be non-negative");
}

void require_numeric_order(int k) {
    require_truncation(k);
    if (k > kMaxNumericOrder)
        throw std::invalid_argument("numeric Euler-MacLaurin expansions are limited to order 12");
}

// (E^{n+1} - I) D^{power}, exact through D^(cap + power).
ArtinOp boundary_operator(int n, int power, int cap) {
    ArtinOp difference = op_sub(make(op::Shift{Rat(n + 1)}, cap), ArtinOp::identity(cap));
    return op_mul(difference, ArtinOp::monomial(power, Rat(1), cap + power + 2));
}

}  // namespace

ArtinOp em_residual_operator(int truncation_order, bool omit_b1) {
    require_truncation(truncation_order);
    // The B_1 term lives at D^1, so the check always reaches it.
    const int cap = std::max(truncation_order, 1);
    const std::vector<Rat> numbers = bernoulli_numbers(cap);
    ArtinOp sum = op_scale(numbers[0], make(op::BernoulliJ{}, cap));
    ArtinOp forward = make(op::ForwardDiff{}, std::max(cap, 1));
    Rat fact(1);
    for (int k = 1; k <= truncation_order; ++k) {
        fact *= k;
        if (k == 1 && omit_b1) continue;
        ArtinOp term = op_mul(forward, ArtinOp::monomial(k - 1, Rat(1), cap + 1));
        sum = op_add(sum, op_scale(numbers[static_cast<std::size_t>(k)] / fact, term.truncate(cap)));
    }
    return op_sub(ArtinOp::identity(cap), sum).truncate(cap);
}

EMReport em_operator_residual(int truncation_order, bool omit_b1) {
    ArtinOp residual = em_residual_operator(truncation_order, omit_b1);
    EMReport report;
    report.truncation_order = truncation_order;
    report.residual_lead = residual.lead();
    report.symbolic_ok = report.residual_lead > residual.cap();
    if (truncation_order <= kMaxNumericOrder)
        report.numeric_abs_err = harmonic_identity(Rat(10), 89, truncation_order).abs_err;
    return report;
}

LambdaSumPair lambda_sum_closed_form(Order order, int a, int k, int floor) {
    if (k < 0) throw std::invalid_argument("sum length must be non-negative");
    if (floor > a) throw std::invalid_argument("floor must not exceed the degree");
    LogSeries lambda = LogSeries::harmonic(order, a, floor);
    LambdaSumPair pair{LogSeries(order, floor), LogSeries(order, floor), lambda.floor()};
    for (int j = 0; j <= k; ++j) pair.direct += shift(lambda, Rat(j));

    LogSeries bernoulli = bernoulli_member(order, a + 1, floor);
    pair.closed_form = (1 / roman(a + 1)) * (shift(bernoulli, Rat(k + 1)) - bernoulli);
    return pair;
}

double em_numeric_rhs(const LogSeries& p, double x, int n, int truncation_order) {
    require_numeric_order(truncation_order);
    if (p.order() != Order::Generic)
        throw std::invalid_argument("the Euler-MacLaurin integral term needs a non-polynomial order");
    const std::vector<Rat> numbers = bernoulli_numbers(truncation_order);
    const double upper = x + n + 1;
    auto bracket = [&](const LogSeries& q) {
        return eval_series(q, NumericLevel::Log, upper).value - eval_series(q, NumericLevel::Log, x).value;
    };
    double rhs = to_double(numbers[0]) * bracket(antiderivative(p));
    LogSeries q = p;
    Rat fact(1);
    for (int k = 1; k <= truncation_order; ++k) {
        fact *= k;
        if (k > 1) q = derivative(q);
        const Rat weight = numbers[static_cast<std::size_t>(k)] / fact;
        if (weight != 0) rhs += to_double(weight) * bracket(q);
    }
    return rhs;
}

namespace {

void require_positive(const Rat& x, int n) {
    if (x <= 0) throw std::domain_error("summation start must be positive");
    if (n < 0) throw std::invalid_argument("number of summands must be non-negative");
}

}  // namespace

SumReport harmonic_identity(const Rat& x, int n, int truncation_order) {
    require_positive(x, n);
    Rat exact(0);
    for (int j = 0; j <= n; ++j) exact += 1 / (x + j);
    SumReport report{x, n, truncation_order, exact, to_double(exact)};
    report.rhs = em_numeric_rhs(LogSeries::harmonic(Order::Generic, -1, -1), to_double(x), n, truncation_order);
    report.abs_err = std::fabs(report.lhs - report.rhs);
    report.rel_err = report.abs_err / std::fabs(report.lhs);
    return report;
}

SumReport stirling_identity(const Rat& x, int n, int truncation_order) {
    require_positive(x, n);
    SumReport report{x, n, truncation_order, std::nullopt, 0.0};
    const double start = to_double(x);
    for (int j = 0; j <= n; ++j) report.lhs += std::log(start + j);
    report.rhs = em_numeric_rhs(LogSeries::harmonic(Order::Generic, 0, 0), start, n, truncation_order);
    report.abs_err = std::fabs(report.lhs - report.rhs);
    report.rel_err = report.lhs == 0.0 ? report.abs_err : report.abs_err / std::fabs(report.lhs);
    return report;
}

LogSeries em_apply(const LogSeries& p, int n, int truncation_order) {
    require_truncation(truncation_order);
    if (p.order() != Order::Generic)
        throw std::domain_error("the Euler-MacLaurin integral term needs a non-polynomial order");
    if (n < 0) throw std::invalid_argument("number of summands must be non-negative");
    LogSeries difference(p.order(), p.floor());
    for (int j = 0; j <= n; ++j) difference += shift(p, Rat(j));
    auto top = p.top_degree();
    if (!top) return difference;

    const int cap = *top - p.floor() + truncation_order + 2;
    const std::vector<Rat> numbers = bernoulli_numbers(truncation_order);
    difference -= numbers[0] * apply(boundary_operator(n, -1, cap), p);
    Rat fact(1);
    for (int k = 1; k <= truncation_order; ++k) {
        fact *= k;
        const Rat weight = numbers[static_cast<std::size_t>(k)] / fact;
        if (weight != 0) difference -= weight * apply(boundary_operator(n, k - 1, cap), p);
    }
    return difference;
}

}  // namespace logalg
