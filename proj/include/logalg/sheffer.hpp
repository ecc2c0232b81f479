#pragma once

// Graded sequences of logarithmic series built from Artinian operators:
//
//   Harmonic          s_a = lambda_a
//   Appell(h)         s_a = h(D)^{-1} lambda_a
//   Associated(f)     s_a = f'(D) (f(D)/D)^{-(a+1)} lambda_a      (transfer formula)
//   Sheffer(h, f)     s_a = h(D)^{-1} Associated(f)_a
//
// h must have lead 0 with constant term 1; f must have lead 1 with a nonzero
// coefficient at D. With these conventions the pairing
//   <alpha| h f^b s_a> = rf(a) delta_{ab}
// holds, and the Taylor and expansion coefficients use h f^a.

#include "logalg/log_series.hpp"
#include "logalg/operator.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace logalg {

/// An exactly known operator, expanded through D^cap on request.
using OpFamily = std::function<ArtinOp(int cap)>;

OpFamily family(OpKind kind);

namespace rule {
struct Harmonic {};
struct Appell { OpFamily h; };
struct Associated { OpFamily f; };
struct Sheffer { OpFamily h; OpFamily f; };
}  // namespace rule

using Rule = std::variant<rule::Harmonic, rule::Appell, rule::Associated, rule::Sheffer>;

class GradedSeq {
public:
    explicit GradedSeq(Rule rule, std::string name = {});

    static GradedSeq harmonic();
    static GradedSeq appell(OpFamily h, std::string name = "appell");
    static GradedSeq associated(OpFamily f, std::string name = "associated");
    static GradedSeq sheffer(OpFamily h, OpFamily f, std::string name = "sheffer");

    const std::string& name() const { return name_; }
    const Rule& rule() const { return rule_; }

    /// The a-th member, exact down to floor (floor <= a). Cached; safe to call
    /// from several threads.
    LogSeries member(Order order, int a, int floor) const;

    /// The member of the underlying associated sequence (lambda_b for Appell
    /// and Harmonic rules).
    LogSeries associated_member(Order order, int b, int floor) const;

    /// h through D^cap (the identity when the rule has no h).
    ArtinOp normalizer(int cap) const;
    /// f through D^cap (D when the rule has no f).
    ArtinOp delta(int cap) const;

    /// Lead-0 operator M_a with member(a) = M_a lambda_a, exact through D^precision.
    ArtinOp member_operator(int a, int precision) const;

    /// h f^b, exact through D^(b + precision).
    ArtinOp dual_operator(int b, int precision) const;

private:
    struct Cache;

    LogSeries compute_member(Order order, int a, int floor) const;

    Rule rule_;
    std::string name_;
    std::shared_ptr<Cache> cache_;
};

/// f s_a == roman(a) s_{a-1} above the floor.
bool check_lowering(const GradedSeq& seq, Order order, int a, int floor);

/// E^z s_a == sum_b rc(a,b) <(0)|E^z p_b> s_{a-b} above the floor, where p is
/// the underlying associated sequence.
bool check_binomial_shift(const GradedSeq& seq, Order order, int a, const Rat& z, int floor);

/// <alpha| h f^b s_a> on Generic order.
Rat pairing(const GradedSeq& seq, int a, int b);

/// pairing(seq, a, b) == rf(a) delta_{ab}.
bool check_biorthogonality(const GradedSeq& seq, int a, int b);

/// sum_b rc(a,b) constants[b] lambda_{a-b}. The floor is raised where the
/// constant list runs out.
LogSeries appell_from_constants(const std::vector<Rat>& constants, Order order, int a, int floor);

/// c_a = <alpha| h f^a p> / rf(a) for a in [a_min, top(p)]; nonzero entries
/// only. a_min must be >= p.floor(), and >= 0 on Zero order.
std::map<int, Rat> taylor_coeffs(const GradedSeq& seq, const LogSeries& p, int a_min);

/// sum_a c_a s_a over a >= floor.
LogSeries reconstruct(const GradedSeq& seq, const std::map<int, Rat>& coeffs, Order order, int floor);

/// d_a = <alpha| H s_a> / rf(a) for a in [a_min, H.cap()], so that
/// H = sum_a d_a h f^a through D^H.cap(). Nonzero entries only.
std::map<int, Rat> expand_operator(const GradedSeq& seq, const ArtinOp& target, int a_min);

/// sum_a d_a h f^a, exact through D^cap.
ArtinOp resum_operator(const GradedSeq& seq, const std::map<int, Rat>& coeffs, int cap);

/// Polynomials k! [y^k] G(y) exp(x g(y)) for k = 0..max_k, where
/// g = f^{(-1)} and G = 1 / h(g). Zero order.
std::vector<LogSeries> genfun_members(const GradedSeq& seq, int max_k);

/// genfun_members agree with member(Zero, k, 0) for every k <= max_k.
bool genfun_check_order_zero(const GradedSeq& seq, int max_k);

}  // namespace logalg
