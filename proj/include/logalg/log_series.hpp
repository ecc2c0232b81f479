#pragma once

// Truncated formal power series of logarithmic type, written on the basis of
// harmonic logarithms lambda_a of one fixed order.
//
// A series carries an exactness floor: coefficients at degrees >= floor are
// exact (absent means exactly zero), coefficients below it are unknown. The
// top degree is always finite. Order::Zero series are ordinary polynomials:
// no negative degrees, and the floor is never below 0.

#include "logalg/rational.hpp"

#include <map>
#include <optional>

namespace logalg {

/// Zero models the polynomial order (0); Generic stands for any order != (0).
/// Every formula in this library has coefficients independent of which
/// non-zero order is meant.
enum class Order { Zero, Generic };

const char* order_name(Order order);

class LogSeries {
public:
    using Terms = std::map<int, Rat>;

    LogSeries(Order order, int floor);
    LogSeries(Order order, int floor, Terms coeffs);

    /// lambda_a as a single-term series; the zero series for Zero order, a < 0.
    static LogSeries harmonic(Order order, int a, int floor);

    Order order() const { return order_; }
    int floor() const { return floor_; }
    /// Nonzero coefficients only, ascending by degree.
    const Terms& terms() const { return coeffs_; }

    /// Throws std::out_of_range for a degree below the floor.
    Rat coeff(int degree) const;
    std::optional<int> top_degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Raises the floor, dropping lower terms. new_floor < floor() throws.
    LogSeries truncate(int new_floor) const;

    LogSeries& operator+=(const LogSeries& other);
    LogSeries& operator-=(const LogSeries& other);
    LogSeries& operator*=(const Rat& c);

    friend bool operator==(const LogSeries&, const LogSeries&) = default;

private:
    Order order_;
    int floor_;
    Terms coeffs_;
};

LogSeries operator+(LogSeries p, const LogSeries& q);
LogSeries operator-(LogSeries p, const LogSeries& q);
LogSeries operator-(LogSeries p);
LogSeries operator*(const Rat& c, LogSeries p);

inline LogSeries add(const LogSeries& p, const LogSeries& q) { return p + q; }
inline LogSeries scale(const Rat& c, const LogSeries& p) { return c * p; }

/// (Dp)_m = roman(m+1) p_{m+1}; floor drops by one.
LogSeries derivative(const LogSeries& p);

/// Inverse of derivative; Generic order only.
LogSeries antiderivative(const LogSeries& p);

/// E^z p = sum_k z^k D^k p / k!; floor is preserved.
LogSeries shift(const LogSeries& p, const Rat& z);

/// The augmentation <alpha| p>, i.e. the coefficient of lambda_0.
/// Requires floor <= 0.
Rat eval_functional(const LogSeries& p);

/// True iff p and q have the same order and agree at every degree >= m that
/// is exact in both.
bool agree_above(const LogSeries& p, const LogSeries& q, int m);

}  // namespace logalg
