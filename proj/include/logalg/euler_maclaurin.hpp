#pragma once

// The Euler-MacLaurin formula as an exact identity of Artinian operators,
//
//   I = B_0 J + B_1 Delta + (B_2/2!) Delta D + (B_3/3!) Delta D^2 + ...,
//
// together with its consequences: closed forms for sums of shifted harmonic
// logarithms and the numeric harmonic-sum and Stirling instances.

#include "logalg/log_series.hpp"
#include "logalg/operator.hpp"
#include "logalg/rational.hpp"

#include <optional>

namespace logalg {

struct EMReport {
    int truncation_order = 0;
    /// First exponent at which the residual is nonzero; cap + 1 when it
    /// vanishes through the cap max(K, 1).
    int residual_lead = 0;
    bool symbolic_ok = false;
    std::optional<double> numeric_abs_err;
};

/// I - [B_0 J + sum_{k=1}^{K} (B_k/k!) Delta D^{k-1}] through D^max(K, 1).
/// With omit_b1 the B_1 term is dropped (a negative control).
ArtinOp em_residual_operator(int truncation_order, bool omit_b1 = false);
EMReport em_operator_residual(int truncation_order, bool omit_b1 = false);

struct LambdaSumPair {
    LogSeries direct;       // lambda_a(x) + lambda_a(x+1) + ... + lambda_a(x+k)
    LogSeries closed_form;  // (B_{a+1}(x+k+1) - B_{a+1}(x)) / roman(a+1)
    int floor = 0;
    bool equal() const { return agree_above(direct, closed_form, floor); }
};

LambdaSumPair lambda_sum_closed_form(Order order, int a, int k, int floor);

struct SumReport {
    Rat x;
    int n = 0;
    int truncation_order = 0;
    std::optional<Rat> exact_lhs;  // set when the left side is rational
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
};

/// Numeric right side of p(x) + ... + p(x+n) =
///   B_0 [D^{-1}p]_x^{x+n+1} + sum_{k=1}^{K} (B_k/k!) [D^{k-1}p]_x^{x+n+1}
/// at iterated-log level 1. Generic order.
double em_numeric_rhs(const LogSeries& p, double x, int n, int truncation_order);

/// 1/x + ... + 1/(x+n) exactly, against the Bernoulli expansion.
SumReport harmonic_identity(const Rat& x, int n, int truncation_order);

/// log(x (x+1) ... (x+n)) by direct log summation, against the expansion.
SumReport stirling_identity(const Rat& x, int n, int truncation_order);

/// sum_{j=0}^{n} E^j p minus the truncated Euler-MacLaurin right side,
/// computed exactly. Zero above the floor once K >= top(p) - floor(p).
LogSeries em_apply(const LogSeries& p, int n, int truncation_order);

}  // namespace logalg
