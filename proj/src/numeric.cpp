#include "logalg/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logalg {

NumericLevel numeric_level(int level) {
    if (level == 0) return NumericLevel::Polynomial;
    if (level == 1) return NumericLevel::Log;
    throw std::invalid_argument("numeric evaluation supports levels 0 and 1 only");
}

double eval_lambda(NumericLevel level, int n, double x) {
    if (level == NumericLevel::Polynomial) return n < 0 ? 0.0 : std::pow(x, n);
    if (!(x > 0.0)) throw std::domain_error("level-1 harmonic logarithms are evaluated at x > 0 only");
    if (n < 0) return std::pow(x, n);
    double harmonic = 0.0;
    for (int j = 1; j <= n; ++j) harmonic += 1.0 / j;
    return std::pow(x, n) * (std::log(x) - harmonic);
}

SeriesValue eval_series(const LogSeries& p, NumericLevel level, double x) {
    if (p.order() == Order::Zero && level != NumericLevel::Polynomial)
        throw std::invalid_argument("polynomial-order series evaluate at level 0 only");
    if (level == NumericLevel::Log && !(x > 0.0))
        throw std::domain_error("level-1 series are evaluated at x > 0 only");
    SeriesValue out;
    // Highest degree first keeps the large terms together.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out.value += to_double(it->second) * eval_lambda(level, it->first, x);
    if (x > 1.0) {
        const double lowest = p.terms().empty() ? 0.0 : std::fabs(to_double(p.terms().begin()->second));
        out.trunc_bound = lowest * std::pow(x, p.floor()) * std::max(1.0, std::log(x));
    }
    return out;
}

double finite_diff_check(NumericLevel level, int n, double x, double h) {
    if (!(h > 0.0) || !(x - h > 0.0)) throw std::domain_error("finite differences need 0 < h < x");
    const double central = (eval_lambda(level, n, x + h) - eval_lambda(level, n, x - h)) / (2.0 * h);
    const double roman_n = n == 0 ? 1.0 : static_cast<double>(n);
    return std::fabs(central - roman_n * eval_lambda(level, n - 1, x));
}

}  // namespace logalg
