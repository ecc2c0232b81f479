#include "logalg/sheffer.hpp"

#include "logalg/roman.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace logalg {

OpFamily family(OpKind kind) {
    return [kind = std::move(kind)](int cap) { return make(kind, cap); };
}

struct GradedSeq::Cache {
    std::shared_mutex mutex;
    // (order, a) -> deepest member computed so far
    std::map<std::pair<Order, int>, LogSeries> members;
};

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate_normalizer(const OpFamily& h) {
    ArtinOp op = h(1);
    if (op.lead() != 0 || op.coeff(0) != 1)
        throw std::invalid_argument("normalizing operator must have lead 0 and constant term 1");
}

void validate_delta(const OpFamily& f) {
    ArtinOp op = f(2);
    if (op.lead() != 1) throw std::invalid_argument("delta operator must have lead 1");
}

ArtinOp divide_by_d(const ArtinOp& a) {
    ArtinOp::Terms t;
    for (const auto& [e, v] : a.terms()) t.emplace(e - 1, v);
    return ArtinOp(a.cap() - 1, std::move(t));
}

}  // namespace

GradedSeq::GradedSeq(Rule rule, std::string name)
    : rule_(std::move(rule)), name_(std::move(name)), cache_(std::make_shared<Cache>()) {
    std::visit(overloaded{
                   [](const rule::Harmonic&) {},
                   [](const rule::Appell& r) { validate_normalizer(r.h); },
                   [](const rule::Associated& r) { validate_delta(r.f); },
                   [](const rule::Sheffer& r) {
                       validate_normalizer(r.h);
                       validate_delta(r.f);
                   },
               },
               rule_);
    if (name_.empty()) name_ = "sequence";
}

GradedSeq GradedSeq::harmonic() { return GradedSeq(rule::Harmonic{}, "harmonic"); }
GradedSeq GradedSeq::appell(OpFamily h, std::string name) {
    return GradedSeq(rule::Appell{std::move(h)}, std::move(name));
}
GradedSeq GradedSeq::associated(OpFamily f, std::string name) {
    return GradedSeq(rule::Associated{std::move(f)}, std::move(name));
}
GradedSeq GradedSeq::sheffer(OpFamily h, OpFamily f, std::string name) {
    return GradedSeq(rule::Sheffer{std::move(h), std::move(f)}, std::move(name));
}

ArtinOp GradedSeq::normalizer(int cap) const {
    if (auto* r = std::get_if<rule::Appell>(&rule_)) return r->h(cap);
    if (auto* r = std::get_if<rule::Sheffer>(&rule_)) return r->h(cap);
    return ArtinOp::identity(cap);
}

ArtinOp GradedSeq::delta(int cap) const {
    if (auto* r = std::get_if<rule::Associated>(&rule_)) return r->f(cap);
    if (auto* r = std::get_if<rule::Sheffer>(&rule_)) return r->f(cap);
    return make(op::Derivative{}, cap);
}

namespace {

bool has_delta(const Rule& rule) {
    return std::holds_alternative<rule::Associated>(rule) || std::holds_alternative<rule::Sheffer>(rule);
}

bool has_normalizer(const Rule& rule) {
    return std::holds_alternative<rule::Appell>(rule) || std::holds_alternative<rule::Sheffer>(rule);
}

}  // namespace

ArtinOp GradedSeq::member_operator(int a, int precision) const {
    ArtinOp m = ArtinOp::identity(precision);
    if (has_delta(rule_)) {
        ArtinOp f = delta(precision + 1);
        ArtinOp transfer = op_mul(op_derivative(f), op_pow(divide_by_d(f), -(a + 1)));
        m = transfer;
    }
    if (has_normalizer(rule_)) m = op_mul(op_recip(normalizer(precision)), m);
    return m;
}

ArtinOp GradedSeq::dual_operator(int b, int precision) const {
    ArtinOp h = normalizer(precision);
    if (b == 0) return h;
    return op_mul(h, op_pow(delta(precision + 1), b));
}

LogSeries GradedSeq::compute_member(Order order, int a, int floor) const {
    LogSeries lambda = LogSeries::harmonic(order, a, floor);
    if (lambda.is_zero()) return lambda;
    return apply(member_operator(a, a - lambda.floor()), lambda);
}

LogSeries GradedSeq::member(Order order, int a, int floor) const {
    if (order == Order::Zero && a < 0) return LogSeries(order, 0);
    if (floor > a) throw std::invalid_argument("member floor must not exceed its index");
    const int effective = order == Order::Zero ? std::max(floor, 0) : floor;

    const auto key = std::make_pair(order, a);
    {
        std::shared_lock lock(cache_->mutex);
        auto it = cache_->members.find(key);
        if (it != cache_->members.end() && it->second.floor() <= effective)
            return it->second.truncate(effective);
    }
    LogSeries computed = compute_member(order, a, effective);
    std::unique_lock lock(cache_->mutex);
    auto [it, inserted] = cache_->members.try_emplace(key, computed);
    if (!inserted && it->second.floor() > computed.floor()) it->second = computed;
    return computed;
}

LogSeries GradedSeq::associated_member(Order order, int b, int floor) const {
    if (auto* r = std::get_if<rule::Sheffer>(&rule_))
        return GradedSeq(rule::Associated{r->f}, name_ + "/associated").member(order, b, floor);
    if (std::holds_alternative<rule::Associated>(rule_)) return member(order, b, floor);
    return LogSeries::harmonic(order, b, floor);
}

bool check_lowering(const GradedSeq& seq, Order order, int a, int floor) {
    LogSeries current = seq.member(order, a, floor);
    ArtinOp f = seq.delta(a - current.floor() + 1);
    LogSeries lowered = apply(f, current);
    LogSeries expected = roman(a) * seq.member(order, a - 1, floor - 1);
    return agree_above(lowered, expected, floor - 1);
}

bool check_binomial_shift(const GradedSeq& seq, Order order, int a, const Rat& z, int floor) {
    LogSeries current = seq.member(order, a, floor);
    LogSeries shifted = shift(current, z);
    LogSeries expansion(order, current.floor());
    const int last_b = a - current.floor();
    for (int b = 0; b <= last_b; ++b) {
        if (order == Order::Zero && a - b < 0) break;
        Rat weight = eval_functional(shift(seq.associated_member(Order::Zero, b, 0), z));
        if (weight == 0) continue;
        expansion += (roman_coeff(a, b) * weight) * seq.member(order, a - b, current.floor());
    }
    return agree_above(shifted, expansion, current.floor());
}

Rat pairing(const GradedSeq& seq, int a, int b) {
    const int floor = std::min(a, b);
    LogSeries s = seq.member(Order::Generic, a, floor);
    ArtinOp dual = seq.dual_operator(b, std::max(a - b, 0));
    return eval_functional(apply(dual, s));
}

bool check_biorthogonality(const GradedSeq& seq, int a, int b) {
    const Rat expected = a == b ? roman_factorial(a) : Rat(0);
    return pairing(seq, a, b) == expected;
}

LogSeries appell_from_constants(const std::vector<Rat>& constants, Order order, int a, int floor) {
    if (constants.empty()) throw std::invalid_argument("appell_from_constants needs at least one constant");
    const int reach = a - static_cast<int>(constants.size()) + 1;
    const int exact_from = LogSeries(order, std::max(floor, reach)).floor();
    LogSeries::Terms t;
    for (int b = 0; a - b >= exact_from; ++b) {
        if (order == Order::Zero && a - b < 0) break;
        const Rat& c = constants[static_cast<std::size_t>(b)];
        if (c != 0) t.emplace(a - b, roman_coeff(a, b) * c);
    }
    return LogSeries(order, exact_from, std::move(t));
}

std::map<int, Rat> taylor_coeffs(const GradedSeq& seq, const LogSeries& p, int a_min) {
    if (p.order() == Order::Zero && a_min < 0)
        throw std::domain_error("Taylor coefficients below degree 0 need a non-polynomial order");
    if (a_min < p.floor())
        throw std::out_of_range("Taylor coefficient below the exactness floor of the series");
    std::map<int, Rat> out;
    auto top = p.top_degree();
    if (!top) return out;
    for (int a = a_min; a <= *top; ++a) {
        ArtinOp dual = seq.dual_operator(a, *top - a);
        Rat c = eval_functional(apply(dual, p)) / roman_factorial(a);
        if (c != 0) out.emplace(a, std::move(c));
    }
    return out;
}

LogSeries reconstruct(const GradedSeq& seq, const std::map<int, Rat>& coeffs, Order order, int floor) {
    LogSeries sum(order, floor);
    for (const auto& [a, c] : coeffs) {
        if (a < floor) continue;
        sum += c * seq.member(order, a, floor);
    }
    return sum;
}

std::map<int, Rat> expand_operator(const GradedSeq& seq, const ArtinOp& target, int a_min) {
    std::map<int, Rat> out;
    const int lead = target.lead();
    for (int a = a_min; a <= target.cap(); ++a) {
        LogSeries s = seq.member(Order::Generic, a, std::min(a, lead));
        Rat d = eval_functional(apply(target, s)) / roman_factorial(a);
        if (d != 0) out.emplace(a, std::move(d));
    }
    return out;
}

ArtinOp resum_operator(const GradedSeq& seq, const std::map<int, Rat>& coeffs, int cap) {
    ArtinOp sum = ArtinOp::zero(cap);
    for (const auto& [a, d] : coeffs) {
        if (a > cap) break;
        sum = op_add(sum, op_scale(d, seq.dual_operator(a, cap - a)));
    }
    return sum;
}

std::vector<LogSeries> genfun_members(const GradedSeq& seq, int max_k) {
    if (max_k < 1) throw std::invalid_argument("generating function check needs max_k >= 1");
    ArtinOp inverse = comp_inverse(seq.delta(max_k));
    ArtinOp weight = op_recip(op_compose(seq.normalizer(max_k), inverse));

    // column[n] = [y^k] weight * inverse^n, for all k <= max_k
    std::vector<ArtinOp> columns;
    columns.push_back(weight.truncate(max_k));
    ArtinOp power = inverse;
    for (int n = 1; n <= max_k; ++n) {
        columns.push_back(op_mul(weight, power).truncate(max_k));
        if (n < max_k) power = op_mul(power, inverse);
    }

    std::vector<LogSeries> out;
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
        out.emplace_back(Order::Zero, 0, std::move(t));
    }
    return out;
}

bool genfun_check_order_zero(const GradedSeq& seq, int max_k) {
    std::vector<LogSeries> generated = genfun_members(seq, max_k);
    for (int k = 0; k <= max_k; ++k)
        if (generated[static_cast<std::size_t>(k)] != seq.member(Order::Zero, k, 0)) return false;
    return true;
}

}  // namespace logalg
