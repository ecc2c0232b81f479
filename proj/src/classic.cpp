#include "logalg/classic.hpp"

#include "logalg/roman.hpp"

#include <algorithm>
#include <stdexcept>

namespace logalg {

GradedSeq bernoulli_sequence() { return GradedSeq::appell(family(op::BernoulliJ{}), "bernoulli"); }

GradedSeq hermite_sequence(const Rat& sigma) {
    if (sigma <= 0) throw std::invalid_argument("Weierstrass parameter must be positive");
    return GradedSeq::appell(family(op::Weierstrass{sigma}), "hermite");
}

ArtinOp laguerre_delta(int cap) {
    ArtinOp::Terms t;
    for (int k = 1; k <= cap; ++k) t.emplace(k, Rat(-1));
    return ArtinOp(cap, std::move(t));
}

GradedSeq laguerre_sequence(const Rat& grade) {
    Rat exponent = -(grade + 1);
    return GradedSeq::sheffer(family(op::OneMinusDPow{exponent}), laguerre_delta, "laguerre");
}

namespace {

const GradedSeq& shared_bernoulli() {
    static const GradedSeq seq = bernoulli_sequence();
    return seq;
}

}  // namespace

LogSeries bernoulli_member(Order order, int a, int floor) { return shared_bernoulli().member(order, a, floor); }

Rat bernoulli_number(int n) {
    if (n < 0) throw std::invalid_argument("Bernoulli numbers are indexed by n >= 0");
    return eval_functional(bernoulli_member(Order::Zero, n, 0));
}

std::vector<Rat> bernoulli_numbers(int n) {
    if (n < 0) throw std::invalid_argument("Bernoulli numbers are indexed by n >= 0");
    // n! [D^n] J^{-1}, from a single inversion
    ArtinOp inverse = op_recip(make(op::BernoulliJ{}, n));
    std::vector<Rat> out;
    Rat fact(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= k;
        out.push_back(fact * inverse.coeff(k));
    }
    return out;
}

LogSeries residual_bernoulli(int floor) { return bernoulli_member(Order::Generic, -1, floor); }

LogSeries hermite_member(Order order, int a, int floor, const Rat& sigma) {
    return hermite_sequence(sigma).member(order, a, floor);
}

LogSeries hermite_closed_form(Order order, int a, int floor, const Rat& sigma) {
    LogSeries::Terms t;
    LogSeries shape(order, floor);
    if (order == Order::Zero && a < 0) return shape;
    Rat weight(1);
    for (int k = 0; a - 2 * k >= shape.floor(); ++k) {
        if (order == Order::Zero && a - 2 * k < 0) break;
        if (k > 0) weight = weight * -sigma / k;
        t.emplace(a - 2 * k, weight * roman_ratio(a, a - 2 * k));
    }
    return LogSeries(order, shape.floor(), std::move(t));
}

Rat hermite_number(int n, const Rat& sigma) {
    if (n < 0) throw std::invalid_argument("Hermite numbers are indexed by n >= 0");
    return eval_functional(hermite_member(Order::Zero, n, 0, sigma));
}

LogSeries laguerre_member(Order order, int a, const Rat& grade, int floor) {
    LogSeries lambda = LogSeries::harmonic(order, a, floor);
    if (lambda.is_zero()) return lambda;
    ArtinOp power = make(op::OneMinusDPow{grade + a}, a - lambda.floor());
    LogSeries out = apply(power, lambda);
    if (a % 2 != 0) out *= Rat(-1);
    return out;
}

bool laguerre_genfun_check(const Rat& grade, int max_k) {
    if (max_k < 0) throw std::invalid_argument("max_k must be non-negative");
    const int cap = std::max(max_k, 1);
    ArtinOp weight = make(op::OneMinusDPow{-grade - 1}, cap);
    // x y / (y - 1) = -x (y + y^2 + ...)
    ArtinOp inner = laguerre_delta(cap);
    std::vector<ArtinOp> columns{weight};
    ArtinOp power = inner;
    for (int n = 1; n <= max_k; ++n) {
        columns.push_back(op_mul(weight, power).truncate(cap));
        if (n < max_k) power = op_mul(power, inner);
    }
    Rat k_fact(1);
    for (int k = 0; k <= max_k; ++k) {
        if (k > 0) k_fact *= k;
        LogSeries::Terms t;
        Rat n_fact(1);
        for (int n = 0; n <= k; ++n) {
            if (n > 0) n_fact *= n;
            Rat c = columns[static_cast<std::size_t>(n)].coeff(k);
            if (c != 0) t.emplace(n, k_fact / n_fact * c);
        }
        if (LogSeries(Order::Zero, 0, std::move(t)) != laguerre_member(Order::Zero, k, grade, 0)) return false;
    }
    return true;
}

namespace {

Rat parameter(const std::map<std::string, Rat>& parameters, const std::string& key, const Rat& fallback) {
    auto it = parameters.find(key);
    return it == parameters.end() ? fallback : it->second;
}

}  // namespace

GradedSeq named_sequence(const std::string& name, const std::map<std::string, Rat>& parameters) {
    if (name == "bernoulli") return shared_bernoulli();
    if (name == "hermite") return hermite_sequence(parameter(parameters, "sigma", kHermiteSigma));
    if (name == "laguerre") return laguerre_sequence(parameter(parameters, "grade", Rat(0)));
    if (name == "harmonic") return GradedSeq::harmonic();
    if (name == "delta") return GradedSeq::associated(family(op::ForwardDiff{}), "delta");
    throw std::invalid_argument("unknown sequence '" + name + "'");
}

SeqTable emit_table(const std::string& name, int from, int to, int depth,
                    const std::map<std::string, Rat>& parameters, Order order) {
    if (depth < 0) throw std::invalid_argument("table depth must be non-negative");
    if (from > to) throw std::invalid_argument("empty table range");
    SeqTable table;
    table.name = name;
    table.order = order;
    table.depth = depth;
    if (name == "hermite") table.parameters["sigma"] = parameter(parameters, "sigma", kHermiteSigma);
    if (name == "laguerre") table.parameters["grade"] = parameter(parameters, "grade", Rat(0));

    if (name == "laguerre") {
        const Rat grade = table.parameters["grade"];
        for (int a = from; a <= to; ++a) table.rows.emplace_back(a, laguerre_member(order, a, grade, a - depth));
        return table;
    }
    GradedSeq seq = named_sequence(name, table.parameters);
    for (int a = from; a <= to; ++a) table.rows.emplace_back(a, seq.member(order, a, a - depth));
    return table;
}

}  // namespace logalg
