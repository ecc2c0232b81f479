#include "logalg/operator.hpp"

#include "logalg/roman.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace logalg {

ArtinOp::ArtinOp(int cap, Terms coeffs) : cap_(cap) {
    for (auto& [exponent, c] : coeffs) {
        if (c == 0) continue;
        if (exponent > cap_)
            throw std::invalid_argument("coefficient at D^" + std::to_string(exponent) +
                                        " lies above the cap " + std::to_string(cap_));
        coeffs_.emplace(exponent, std::move(c));
    }
}

ArtinOp ArtinOp::identity(int cap) { return monomial(0, Rat(1), cap); }

ArtinOp ArtinOp::monomial(int exponent, const Rat& c, int cap) {
    if (cap < exponent) throw std::invalid_argument("cap below the monomial exponent");
    return ArtinOp(cap, {{exponent, c}});
}

int ArtinOp::lead() const { return coeffs_.empty() ? cap_ + 1 : coeffs_.begin()->first; }

Rat ArtinOp::coeff(int exponent) const {
    if (exponent > cap_)
        throw std::out_of_range("coefficient of D^" + std::to_string(exponent) + " is above the cap " +
                                std::to_string(cap_));
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

ArtinOp ArtinOp::truncate(int new_cap) const {
    if (new_cap > cap_)
        throw std::invalid_argument("cannot raise the cap from " + std::to_string(cap_) + " to " +
                                    std::to_string(new_cap));
    Terms kept(coeffs_.begin(), coeffs_.upper_bound(new_cap));
    return ArtinOp(new_cap, std::move(kept));
}

bool agree_through(const ArtinOp& a, const ArtinOp& b, int through) {
    const int last = std::min({through, a.cap(), b.cap()});
    auto end_a = a.terms().upper_bound(last);
    auto end_b = b.terms().upper_bound(last);
    return std::equal(a.terms().begin(), end_a, b.terms().begin(), end_b);
}

Rat binomial(const Rat& r, int k) {
    if (k < 0) return Rat(0);
    Rat c(1);
    for (int j = 0; j < k; ++j) {
        c *= r - j;
        c /= j + 1;
    }
    return c;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_cap(int cap, int lead, const char* what) {
    if (cap < lead)
        throw std::invalid_argument(std::string(what) + " needs cap >= " + std::to_string(lead));
}

}  // namespace

ArtinOp make(const OpKind& kind, int cap) {
    ArtinOp::Terms t;
    std::visit(
        overloaded{
            [&](const op::Derivative&) {
                require_cap(cap, 1, "D");
                t.emplace(1, Rat(1));
            },
            [&](const op::Identity&) {
                require_cap(cap, 0, "I");
                t.emplace(0, Rat(1));
            },
            [&](const op::Shift& s) {
                require_cap(cap, 0, "E^z");
                Rat term(1);
                for (int k = 0; k <= cap; ++k) {
                    if (k > 0) term = term * s.z / k;
                    t.emplace(k, term);
                }
            },
            [&](const op::ForwardDiff&) {
                require_cap(cap, 1, "Delta");
                Rat term(1);
                for (int k = 1; k <= cap; ++k) {
                    term /= k;
                    t.emplace(k, term);
                }
            },
            [&](const op::BernoulliJ&) {
                require_cap(cap, 0, "J");
                Rat term(1);
                for (int k = 0; k <= cap; ++k) {
                    term /= k + 1;
                    t.emplace(k, term);
                }
            },
            [&](const op::Weierstrass& w) {
                require_cap(cap, 0, "W");
                Rat term(1);
                for (int k = 0; 2 * k <= cap; ++k) {
                    if (k > 0) term = term * w.sigma / k;
                    t.emplace(2 * k, term);
                }
            },
            [&](const op::OneMinusDPow& p) {
                require_cap(cap, 0, "(1-D)^r");
                for (int k = 0; k <= cap; ++k) {
                    Rat c = binomial(p.r, k);
                    if (k % 2 == 1) c = -c;
                    t.emplace(k, std::move(c));
                }
            },
            [&](const op::Custom& c) {
                auto first = std::find_if(c.coeffs.begin(), c.coeffs.end(),
                                          [](const auto& kv) { return kv.second != 0; });
                if (first != c.coeffs.end()) require_cap(cap, first->first, "custom operator");
                t.insert(c.coeffs.begin(), c.coeffs.upper_bound(cap));
            },
        },
        kind);
    return ArtinOp(cap, std::move(t));
}

ArtinOp op_add(const ArtinOp& a, const ArtinOp& b) {
    const int cap = std::min(a.cap(), b.cap());
    ArtinOp::Terms t(a.terms().begin(), a.terms().upper_bound(cap));
    for (auto it = b.terms().begin(); it != b.terms().upper_bound(cap); ++it) t[it->first] += it->second;
    return ArtinOp(cap, std::move(t));
}

ArtinOp op_sub(const ArtinOp& a, const ArtinOp& b) { return op_add(a, op_scale(Rat(-1), b)); }

ArtinOp op_scale(const Rat& c, const ArtinOp& a) {
    ArtinOp::Terms t;
    if (c != 0)
        for (const auto& [e, v] : a.terms()) t.emplace(e, c * v);
    return ArtinOp(a.cap(), std::move(t));
}

ArtinOp op_mul(const ArtinOp& a, const ArtinOp& b) {
    const int cap = std::min(a.cap() + b.lead(), b.cap() + a.lead());
    ArtinOp::Terms t;
    for (const auto& [ea, va] : a.terms()) {
        for (const auto& [eb, vb] : b.terms()) {
            if (ea + eb > cap) break;
            t[ea + eb] += va * vb;
        }
    }
    return ArtinOp(cap, std::move(t));
}

ArtinOp op_recip(const ArtinOp& a) {
    if (a.is_zero()) throw std::domain_error("the zero operator has no inverse");
    const int lead = a.lead();
    const int precision = a.cap() - lead;
    const Rat inv_lead = 1 / a.terms().begin()->second;
    std::vector<Rat> b(static_cast<std::size_t>(precision) + 1);
    b[0] = inv_lead;
    for (int n = 1; n <= precision; ++n) {
        Rat sum(0);
        for (auto it = std::next(a.terms().begin()); it != a.terms().end(); ++it) {
            const int i = it->first - lead;
            if (i > n) break;
            sum += it->second * b[static_cast<std::size_t>(n - i)];
        }
        b[static_cast<std::size_t>(n)] = -inv_lead * sum;
    }
    ArtinOp::Terms t;
    for (int n = 0; n <= precision; ++n) t.emplace(n - lead, b[static_cast<std::size_t>(n)]);
    return ArtinOp(precision - lead, std::move(t));
}

ArtinOp op_pow(const ArtinOp& a, int n) {
    if (n == 0) return ArtinOp::identity(std::max(0, a.cap() - a.lead()));
    if (n < 0) return op_pow(op_recip(a), -n);
    ArtinOp result = a;
    ArtinOp base = a;
    int e = n - 1;
    while (e > 0) {
        if (e & 1) result = op_mul(result, base);
        e >>= 1;
        if (e > 0) base = op_mul(base, base);
    }
    return result;
}

ArtinOp op_compose(const ArtinOp& a, const ArtinOp& b) {
    const int inner = b.lead();
    if (inner < 1) throw std::invalid_argument("substitution needs an inner series of lead >= 1");
    if (a.lead() < 0) throw std::invalid_argument("substitution needs an outer series of lead >= 0");

    // Unknown outer coefficients beyond a.cap() enter at exponent (a.cap()+1)*inner;
    // unknown inner coefficients enter B^k at b.cap() + (k-1)*inner.
    long cap = static_cast<long>(a.cap() + 1) * inner - 1;
    for (const auto& [k, c] : a.terms()) {
        if (k < 1) continue;
        cap = std::min(cap, static_cast<long>(b.cap()) + static_cast<long>(k - 1) * inner);
        break;
    }
    const int result_cap = static_cast<int>(std::min<long>(cap, std::numeric_limits<int>::max() / 2));

    ArtinOp::Terms t;
    ArtinOp power = ArtinOp::identity(std::max(result_cap, 0));
    int power_k = 0;
    for (const auto& [k, c] : a.terms()) {
        if (static_cast<long>(k) * inner > result_cap) break;
        while (power_k < k) {
            power = op_mul(power, b);
            ++power_k;
            if (power.cap() > result_cap) power = power.truncate(result_cap);
        }
        for (const auto& [e, v] : power.terms()) {
            if (e > result_cap) break;
            t[e] += c * v;
        }
    }
    return ArtinOp(result_cap, std::move(t));
}

ArtinOp comp_inverse(const ArtinOp& f) {
    if (f.lead() != 1) throw std::invalid_argument("compositional inverse needs an operator of lead 1");
    const int cap = f.cap();
    const Rat f1 = f.terms().begin()->second;
    ArtinOp::Terms g{{1, 1 / f1}};
    for (int n = 2; n <= cap; ++n) {
        ArtinOp trial(n, g);
        ArtinOp composed = op_compose(f.truncate(n), trial);
        Rat c = composed.coeff(n);
        if (c != 0) g.emplace(n, -c / f1);
    }
    return ArtinOp(cap, std::move(g));
}

ArtinOp op_derivative(const ArtinOp& a) {
    ArtinOp::Terms t;
    for (const auto& [e, v] : a.terms())
        if (e != 0) t.emplace(e - 1, v * e);
    return ArtinOp(a.cap() - 1, std::move(t));
}

LogSeries apply(const ArtinOp& a, const LogSeries& p) {
    const int lead = a.lead();
    if (p.order() == Order::Zero && lead < 0)
        throw std::domain_error("negative powers of D do not act on polynomial-order series");
    int floor = p.floor() - lead;
    if (auto top = p.top_degree()) floor = std::max(floor, *top - a.cap());

    const int lowest = p.order() == Order::Zero ? std::max(floor, 0) : floor;
    LogSeries::Terms out;
    for (const auto& [n, pn] : p.terms()) {
        for (const auto& [k, ck] : a.terms()) {
            const int m = n - k;
            if (m < lowest) break;
            out[m] += ck * roman_ratio(n, m) * pn;
        }
    }
    return LogSeries(p.order(), floor, std::move(out));
}

}  // namespace logalg
