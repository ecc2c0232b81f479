#pragma once

// Floating-point reading of harmonic logarithms and truncated series for
// iterated-log levels 0 and 1.
//
//   level 0:  lambda_n = x^n (n >= 0),               0 (n < 0)
//   level 1:  lambda_n = x^n (log x - h_n) (n >= 0),  x^n (n < 0)
//
// with h_n the n-th harmonic number. Both satisfy d/dx lambda_n = roman(n) lambda_{n-1}.

#include "logalg/log_series.hpp"

#include <optional>

namespace logalg {

enum class NumericLevel { Polynomial = 0, Log = 1 };

NumericLevel numeric_level(int level);

double eval_lambda(NumericLevel level, int n, double x);

struct SeriesValue {
    double value = 0.0;
    /// |lowest retained coefficient| * x^floor * max(1, log x): a tail
    /// indicator, not a certified bound. Only reported for x > 1.
    std::optional<double> trunc_bound;
};

/// Zero-order series evaluate at level 0 only. Level 1 needs x > 0.
SeriesValue eval_series(const LogSeries& p, NumericLevel level, double x);

/// |(lambda_n(x+h) - lambda_n(x-h)) / (2h) - roman(n) lambda_{n-1}(x)|.
double finite_diff_check(NumericLevel level, int n, double x, double h);

}  // namespace logalg
