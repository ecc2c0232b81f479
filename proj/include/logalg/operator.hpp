#pragma once

// Artinian operators: formal Laurent series sum_k c_k D^k in the derivative D,
// truncated at a cap. Coefficients at exponents <= cap are exact; above the
// cap they are unknown. All operators here commute with one another.

#include "logalg/log_series.hpp"
#include "logalg/rational.hpp"

#include <map>
#include <variant>

namespace logalg {

class ArtinOp {
public:
    using Terms = std::map<int, Rat>;

    /// Throws if a nonzero coefficient sits above the cap.
    ArtinOp(int cap, Terms coeffs);

    static ArtinOp zero(int cap) { return ArtinOp(cap, {}); }
    static ArtinOp identity(int cap);
    static ArtinOp monomial(int exponent, const Rat& c, int cap);

    int cap() const { return cap_; }
    /// Lowest exponent with a nonzero coefficient. For an operator whose known
    /// part vanishes this is cap() + 1: the true lead is only known to exceed
    /// the cap.
    int lead() const;
    bool is_zero() const { return coeffs_.empty(); }
    const Terms& terms() const { return coeffs_; }

    /// Throws std::out_of_range above the cap.
    Rat coeff(int exponent) const;

    /// Lowers the cap; new_cap > cap() throws.
    ArtinOp truncate(int new_cap) const;

    friend bool operator==(const ArtinOp&, const ArtinOp&) = default;

private:
    int cap_;
    Terms coeffs_;
};

/// True iff A and B agree at every exponent <= min(A.cap, B.cap, through).
bool agree_through(const ArtinOp& a, const ArtinOp& b, int through);

namespace op {
struct Derivative {};
struct Identity {};
struct Shift { Rat z; };
struct ForwardDiff {};
struct BernoulliJ {};
struct Weierstrass { Rat sigma{1, 2}; };
struct OneMinusDPow { Rat r; };
struct Custom { ArtinOp::Terms coeffs; };
}  // namespace op

using OpKind = std::variant<op::Derivative, op::Identity, op::Shift, op::ForwardDiff, op::BernoulliJ,
                            op::Weierstrass, op::OneMinusDPow, op::Custom>;

/// Exact expansion of a catalogued operator through D^cap:
///   D, I, E^z = sum z^k D^k/k!, Delta = e^D - I, J = (e^D - I)/D,
///   W = e^{sigma D^2}, (1 - D)^r with generalized binomial coefficients,
///   and a finite Laurent polynomial.
ArtinOp make(const OpKind& kind, int cap);

/// Generalized binomial coefficient r (r-1) ... (r-k+1) / k!.
Rat binomial(const Rat& r, int k);

ArtinOp op_add(const ArtinOp& a, const ArtinOp& b);
ArtinOp op_sub(const ArtinOp& a, const ArtinOp& b);
ArtinOp op_scale(const Rat& c, const ArtinOp& a);
/// Cauchy product; cap = min(A.cap + B.lead, B.cap + A.lead).
ArtinOp op_mul(const ArtinOp& a, const ArtinOp& b);
/// Multiplicative inverse; relative precision (cap - lead) is preserved.
ArtinOp op_recip(const ArtinOp& a);
ArtinOp op_pow(const ArtinOp& a, int n);
/// A(B(D)); needs B.lead >= 1 and A.lead >= 0.
ArtinOp op_compose(const ArtinOp& a, const ArtinOp& b);
/// The series g with lead 1 and f(g(D)) = D; needs f.lead == 1.
ArtinOp comp_inverse(const ArtinOp& f);
/// Formal derivative with respect to D.
ArtinOp op_derivative(const ArtinOp& a);

/// (Ap)_m = sum_k c_k rf(m+k)/rf(m) p_{m+k}, exact above
/// max(p.floor - A.lead, top(p) - A.cap). Negative-lead operators need
/// Generic order.
LogSeries apply(const ArtinOp& a, const LogSeries& p);

}  // namespace logalg
