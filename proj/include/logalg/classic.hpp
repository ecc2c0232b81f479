#pragma once

// The logarithmic Bernoulli, Hermite and Laguerre graded sequences.
//
//   Bernoulli      B_a = J^{-1} lambda_a,        J = (e^D - I)/D
//   Hermite        H_a = W^{-1} lambda_a,        W = e^{sigma D^2}
//   Laguerre       L_a = (-1)^a (1 - D)^{a+b} lambda_a   (grade b)
//
// The Hermite definition fixes sigma = 1/2; the printed Hermite table
// corresponds to sigma = 1 (each coefficient of lambda_{a-2k} is 2^k times
// the sigma = 1/2 value), so sigma is a parameter.

#include "logalg/log_series.hpp"
#include "logalg/sheffer.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace logalg {

inline const Rat kHermiteSigma{1, 2};

GradedSeq bernoulli_sequence();
GradedSeq hermite_sequence(const Rat& sigma = kHermiteSigma);
/// Sheffer for h = (1 - D)^{-(b+1)} with respect to K = D / (D - 1).
GradedSeq laguerre_sequence(const Rat& grade);

/// The Laguerre delta operator D / (D - 1) = -D - D^2 - ... through D^cap.
ArtinOp laguerre_delta(int cap);

LogSeries bernoulli_member(Order order, int a, int floor);
/// B_n = <(0)| B_n^{(0)}>, i.e. n! [D^n] J^{-1}.
Rat bernoulli_number(int n);
/// B_0..B_n.
std::vector<Rat> bernoulli_numbers(int n);
/// B_{-1} on a non-polynomial order: 1/x + 1/(2x^2) + 1/(6x^3) - ... in the
/// order-(1) reading.
LogSeries residual_bernoulli(int floor);

LogSeries hermite_member(Order order, int a, int floor, const Rat& sigma = kHermiteSigma);
/// Direct sum sum_k (-sigma)^k rf(a) / (k! rf(a-2k)) lambda_{a-2k}.
LogSeries hermite_closed_form(Order order, int a, int floor, const Rat& sigma = kHermiteSigma);
/// H_n = <(0)| H_n^{(0)}>: (-sigma)^m (2m)!/m! for n = 2m, 0 for odd n.
Rat hermite_number(int n, const Rat& sigma = kHermiteSigma);

/// Closed form (-1)^a (1 - D)^{a+b} lambda_a.
LogSeries laguerre_member(Order order, int a, const Rat& grade, int floor);

/// Expands (1 - y)^{-b-1} exp(x y / (y - 1)) directly and compares k! [y^k]
/// against laguerre_member(Zero, k) for k <= max_k.
bool laguerre_genfun_check(const Rat& grade, int max_k);

struct SeqTable {
    std::string name;
    std::map<std::string, Rat> parameters;
    Order order = Order::Generic;
    int depth = 0;
    std::vector<std::pair<int, LogSeries>> rows;
};

/// Rows a = from..to, each exact down to a - depth. Names: "bernoulli",
/// "hermite" (parameter "sigma"), "laguerre" (parameter "grade"), "harmonic".
/// Throws std::invalid_argument for an unknown name.
SeqTable emit_table(const std::string& name, int from, int to, int depth,
                    const std::map<std::string, Rat>& parameters = {}, Order order = Order::Generic);

/// Named sequence used by the CLI and table emitter.
GradedSeq named_sequence(const std::string& name, const std::map<std::string, Rat>& parameters = {});

}  // namespace logalg
