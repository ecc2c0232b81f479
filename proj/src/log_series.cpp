#include "logalg/log_series.hpp"

#include "logalg/roman.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace logalg {

const char* order_name(Order order) { return order == Order::Zero ? "zero" : "generic"; }

namespace {

int normalized_floor(Order order, int floor) {
    return order == Order::Zero ? std::max(floor, 0) : floor;
}

void require_same_order(const LogSeries& p, const LogSeries& q) {
    if (p.order() != q.order()) throw std::invalid_argument("log series order mismatch");
}

}  // namespace

LogSeries::LogSeries(Order order, int floor) : order_(order), floor_(normalized_floor(order, floor)) {}

LogSeries::LogSeries(Order order, int floor, Terms coeffs)
    : order_(order), floor_(normalized_floor(order, floor)) {
    for (auto& [degree, c] : coeffs) {
        if (c == 0) continue;
        if (order_ == Order::Zero && degree < 0)
            throw std::invalid_argument("polynomial-order series cannot have negative degree " +
                                        std::to_string(degree));
        if (degree < floor_)
            throw std::invalid_argument("coefficient at degree " + std::to_string(degree) +
                                        " lies below the floor " + std::to_string(floor_));
        coeffs_.emplace(degree, std::move(c));
    }
}

LogSeries LogSeries::harmonic(Order order, int a, int floor) {
    LogSeries p(order, floor);
    if ((order == Order::Generic || a >= 0) && a >= p.floor_) p.coeffs_.emplace(a, Rat(1));
    return p;
}

Rat LogSeries::coeff(int degree) const {
    if (degree < floor_)
        throw std::out_of_range("coefficient of degree " + std::to_string(degree) +
                                " is below the exactness floor " + std::to_string(floor_));
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

std::optional<int> LogSeries::top_degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

LogSeries LogSeries::truncate(int new_floor) const {
    if (new_floor < floor_)
        throw std::invalid_argument("cannot lower the floor from " + std::to_string(floor_) + " to " +
                                    std::to_string(new_floor));
    LogSeries out(order_, new_floor);
    out.coeffs_.insert(coeffs_.lower_bound(out.floor_), coeffs_.end());
    return out;
}

LogSeries& LogSeries::operator+=(const LogSeries& other) {
    require_same_order(*this, other);
    floor_ = std::max(floor_, other.floor_);
    coeffs_.erase(coeffs_.begin(), coeffs_.lower_bound(floor_));
    for (auto it = other.coeffs_.lower_bound(floor_); it != other.coeffs_.end(); ++it) {
        auto [pos, inserted] = coeffs_.try_emplace(it->first, it->second);
        if (!inserted) {
            pos->second += it->second;
            if (pos->second == 0) coeffs_.erase(pos);
        }
    }
    return *this;
}

LogSeries& LogSeries::operator-=(const LogSeries& other) {
    return *this += Rat(-1) * other;
}

LogSeries& LogSeries::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [degree, v] : coeffs_) v *= c;
    return *this;
}

LogSeries operator+(LogSeries p, const LogSeries& q) { return p += q; }
LogSeries operator-(LogSeries p, const LogSeries& q) { return p -= q; }
LogSeries operator-(LogSeries p) { return p *= Rat(-1); }
LogSeries operator*(const Rat& c, LogSeries p) { return p *= c; }

LogSeries derivative(const LogSeries& p) {
    LogSeries::Terms out;
    for (const auto& [degree, c] : p.terms()) {
        if (p.order() == Order::Zero && degree == 0) continue;
        out.emplace(degree - 1, roman(degree) * c);
    }
    return LogSeries(p.order(), p.floor() - 1, std::move(out));
}

LogSeries antiderivative(const LogSeries& p) {
    if (p.order() == Order::Zero)
        throw std::domain_error("D has no inverse on polynomial-order series");
    LogSeries::Terms out;
    for (const auto& [degree, c] : p.terms()) out.emplace(degree + 1, c / roman(degree + 1));
    return LogSeries(p.order(), p.floor() + 1, std::move(out));
}

LogSeries shift(const LogSeries& p, const Rat& z) {
    if (z == 0 || p.is_zero()) return p;
    const int top = *p.top_degree();
    const int lowest = p.order() == Order::Zero ? std::max(p.floor(), 0) : p.floor();
    LogSeries::Terms out;
    for (int m = lowest; m <= top; ++m) {
        // sum_{k>=0} z^k / k! * rf(m + k) / rf(m) * p_{m+k}
        Rat sum(0);
        Rat zk(1);
        Rat kfact(1);
        for (int k = 0; m + k <= top; ++k) {
            if (k > 0) {
                zk *= z;
                kfact *= k;
            }
            auto it = p.terms().find(m + k);
            if (it == p.terms().end()) continue;
            sum += zk / kfact * roman_ratio(m + k, m) * it->second;
        }
        if (sum != 0) out.emplace(m, std::move(sum));
    }
    return LogSeries(p.order(), p.floor(), std::move(out));
}

Rat eval_functional(const LogSeries& p) {
    if (p.floor() > 0)
        throw std::out_of_range("augmentation needs the lambda_0 coefficient, but the floor is " +
                                std::to_string(p.floor()));
    return p.coeff(0);
}

bool agree_above(const LogSeries& p, const LogSeries& q, int m) {
    if (p.order() != q.order()) return false;
    const int from = std::max({m, p.floor(), q.floor()});
    auto low_p = p.terms().lower_bound(from);
    auto low_q = q.terms().lower_bound(from);
    return std::equal(low_p, p.terms().end(), low_q, q.terms().end());
}

}  // namespace logalg
