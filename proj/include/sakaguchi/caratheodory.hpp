#pragma once

#include <variant>
#include <vector>

#include "sakaguchi/series.hpp"

namespace sakaguchi {

// Parameters of the three-step disk-automorphism construction
// omega(z) = z * psi_{-xi1}(z * psi_{-xi2}(xi3 * z)),
// psi_c(w) = (w - c) / (1 - conj(c) w).
struct ChoParams {
    cplx xi1;
    cplx xi2;
    cplx xi3;
};

struct Atom {
    double weight = 0.0;
    double angle = 0.0;
};

// finite convex combination of rotated half-plane kernels
// p(z) = sum_k weight_k (1 + e^{i t_k} z) / (1 - e^{i t_k} z)
struct AtomicMeasure {
    std::vector<Atom> atoms;
};

// q(z) = (1 + 2 tau z + 2 tau^2 z^2 + 2 tau z^3 + z^4) / (1 - z^4)
struct TauKernel {
    double tau = 0.0;
};

// series-only source: no closed form is available for exact evaluation
struct ExplicitSource {};

using CaraSource = std::variant<ChoParams, AtomicMeasure, TauKernel, ExplicitSource>;

// A function with positive real part on the disk, p(0) = 1, held as a
// truncation plus the construction it came from. Construction runs the
// membership certificate (coefficient bound + grid positivity); the grid
// check is evidence against implementation bugs, not a proof of membership.
class CaraFunction {
public:
    const Series& series() const { return series_; }
    const CaraSource& source() const { return source_; }

    bool has_exact_eval() const;
    // evaluates the source's closed form; only valid when has_exact_eval()
    cplx eval_exact(cplx z) const;

    // Wraps a series the caller certifies to be a truncated member. Used on
    // hot paths that construct measures valid by construction; no checks.
    static CaraFunction trusted(Series s, CaraSource src);

    friend CaraFunction cho_p(const ChoParams&, std::size_t);
    friend CaraFunction atom_p(const AtomicMeasure&, std::size_t);
    friend CaraFunction tau_q(double, std::size_t);
    friend CaraFunction halved_hadamard(const CaraFunction&, const CaraFunction&);

private:
    CaraFunction(Series s, CaraSource src)
        : series_(std::move(s)), source_(std::move(src)) {}

    Series series_;
    CaraSource source_;
};

// (w - c) / (1 - conj(c) w); requires |c| < 1 and the denominator away from 0
cplx mobius(cplx c, cplx w);

// Schwarz-function series of the automorphism construction; omega[1] = xi1.
// Built by lifting each Moebius factor to a series with divide/compose.
Series cho_omega(const ChoParams& xi, std::size_t order);

// p = (1 + omega) / (1 - omega) for the construction above
CaraFunction cho_p(const ChoParams& xi, std::size_t order);

// coefficients p_n = 2 sum_k weight_k e^{i n t_k}
CaraFunction atom_p(const AtomicMeasure& mu, std::size_t order);

// series of the atomic measure without the membership certificate; valid by
// construction when weights are a probability vector
Series atom_series(const AtomicMeasure& mu, std::size_t order);

// period-4 kernel with coefficient pattern (2 tau, 2 tau^2, 2 tau, 2, ...)
CaraFunction tau_q(double tau, std::size_t order);

// r[0] = 1, r[n] = p[n] q[n] / 2; the result is certified like any member
CaraFunction halved_hadamard(const CaraFunction& p, const CaraFunction& q);

// omega = (p - 1) / (p + 1)
Series schwarz_of(const CaraFunction& p);

// Membership certificate: constant term 1, |p_n| <= 2 + 1e-9, and grid
// positivity. Sources with a closed form are evaluated exactly on the grid
// (threshold -1e-6) and the truncation must agree with the closed form
// within the coefficient-bound tail estimate 2 r^{N+1}/(1-r). Series-only
// sources get the truncation check with the same tail allowance added to
// the threshold, which is the strongest test the data supports.
void verify_membership(const CaraFunction& p);

} // namespace sakaguchi
