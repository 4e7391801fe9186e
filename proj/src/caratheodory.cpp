#include "sakaguchi/caratheodory.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sakaguchi {

namespace {

constexpr double grid_radii[] = {0.5, 0.9, 0.95};
constexpr int grid_angles = 64;
constexpr double grid_tolerance = 1e-6;
constexpr double coeff_tolerance = 1e-9;

// |tail of a member past order n| <= sum_{k>n} 2 r^k
double tail_bound(double r, std::size_t order) {
    return 2.0 * std::pow(r, static_cast<double>(order + 1)) / (1.0 - r);
}

cplx tau_q_exact(double tau, cplx z) {
    const cplx z2 = z * z;
    const cplx z4 = z2 * z2;
    const cplx num = 1.0 + 2.0 * tau * z + 2.0 * tau * tau * z2 + 2.0 * tau * z * z2 + z4;
    return num / (1.0 - z4);
}

cplx cho_omega_exact(const ChoParams& xi, cplx z) {
    return z * mobius(-xi.xi1, z * mobius(-xi.xi2, xi.xi3 * z));
}

void check_cho_params(const ChoParams& xi) {
    if (std::abs(xi.xi1) >= 1.0 || std::abs(xi.xi2) >= 1.0 || std::abs(xi.xi3) > 1.0)
        throw error(errc::param_out_of_disk,
                    "need |xi1| < 1, |xi2| < 1, |xi3| <= 1");
}

void check_measure(const AtomicMeasure& mu) {
    if (mu.atoms.empty())
        throw error(errc::bad_measure, "measure has no atoms");
    double sum = 0.0;
    for (const Atom& a : mu.atoms) {
        if (a.weight < 0.0)
            throw error(errc::bad_measure, "negative weight");
        sum += a.weight;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw error(errc::bad_measure, "weights do not sum to 1");
}

} // namespace

bool CaraFunction::has_exact_eval() const {
    return !std::holds_alternative<ExplicitSource>(source_);
}

cplx CaraFunction::eval_exact(cplx z) const {
    if (const auto* xi = std::get_if<ChoParams>(&source_)) {
        const cplx w = cho_omega_exact(*xi, z);
        return (1.0 + w) / (1.0 - w);
    }
    if (const auto* mu = std::get_if<AtomicMeasure>(&source_)) {
        cplx acc = 0.0;
        for (const Atom& a : mu->atoms) {
            const cplx u = std::polar(1.0, a.angle) * z;
            acc += a.weight * (1.0 + u) / (1.0 - u);
        }
        return acc;
    }
    if (const auto* tk = std::get_if<TauKernel>(&source_))
        return tau_q_exact(tk->tau, z);
    throw error(errc::bad_spec, "no closed form for series-only source");
}

CaraFunction CaraFunction::trusted(Series s, CaraSource src) {
    return CaraFunction(std::move(s), std::move(src));
}

cplx mobius(cplx c, cplx w) {
    if (std::abs(c) >= 1.0)
        throw error(errc::param_out_of_disk, "mobius center must satisfy |c| < 1");
    const cplx den = 1.0 - std::conj(c) * w;
    if (std::abs(den) <= 1e-14)
        throw error(errc::pole_at_input, "mobius evaluated at its pole");
    return (w - c) / den;
}

Series cho_omega(const ChoParams& xi, std::size_t order) {
    check_cho_params(xi);
    const std::size_t n = order;
    const Series z = Series::identity(n);

    // psi_{-c}(w) = (w + c)/(1 + conj(c) w) lifted to a series in w
    auto psi_series = [n](cplx c) {
        Series num(n), den(n);
        num[0] = c;
        if (n >= 1) num[1] = 1.0;
        den[0] = 1.0;
        if (n >= 1) den[1] = std::conj(c);
        return divide(num, den);
    };

    const Series inner = Series::monomial(xi.xi3, 1, n); // xi3 * z
    const Series level2 = multiply(z, compose(psi_series(xi.xi2), inner));
    return multiply(z, compose(psi_series(xi.xi1), level2));
}

CaraFunction cho_p(const ChoParams& xi, std::size_t order) {
    const Series w = cho_omega(xi, order);
    const Series one = Series::one(order);
    CaraFunction p(divide(one + w, one - w), xi);
    p.series_[0] = 1.0;
    verify_membership(p);
    return p;
}

Series atom_series(const AtomicMeasure& mu, std::size_t order) {
    Series p(order);
    p[0] = 1.0;
    for (std::size_t k = 1; k <= order; ++k) {
        cplx acc = 0.0;
        for (const Atom& a : mu.atoms)
            acc += a.weight * std::polar(1.0, static_cast<double>(k) * a.angle);
        p[k] = 2.0 * acc;
    }
    return p;
}

CaraFunction atom_p(const AtomicMeasure& mu, std::size_t order) {
    check_measure(mu);
    CaraFunction p(atom_series(mu, order), mu);
    verify_membership(p);
    return p;
}

CaraFunction tau_q(double tau, std::size_t order) {
    if (!(tau > 0.0 && tau < 1.0))
        throw error(errc::tau_out_of_range, "need 0 < tau < 1");
    Series num(order), den(order);
    num[0] = 1.0;
    if (order >= 1) num[1] = 2.0 * tau;
    if (order >= 2) num[2] = 2.0 * tau * tau;
    if (order >= 3) num[3] = 2.0 * tau;
    if (order >= 4) num[4] = 1.0;
    den[0] = 1.0;
    if (order >= 4) den[4] = -1.0;
    CaraFunction q(divide(num, den), TauKernel{tau});
    verify_membership(q);
    return q;
}

CaraFunction halved_hadamard(const CaraFunction& p, const CaraFunction& q) {
    verify_membership(p);
    verify_membership(q);
    const std::size_t n = std::min(p.series().order(), q.series().order());
    Series r(n);
    r[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) r[k] = p.series()[k] * q.series()[k] / 2.0;
    CaraFunction h(std::move(r), ExplicitSource{});
    verify_membership(h);
    return h;
}

Series schwarz_of(const CaraFunction& p) {
    const std::size_t n = p.series().order();
    const Series one = Series::one(n);
    return divide(p.series() - one, p.series() + one);
}

void verify_membership(const CaraFunction& p) {
    const Series& s = p.series();
    if (std::abs(s[0] - 1.0) > 1e-12)
        throw error(errc::membership_check_failed, "constant term is not 1");
    for (std::size_t k = 1; k <= s.order(); ++k)
        if (std::abs(s[k]) > 2.0 + coeff_tolerance)
            throw error(errc::membership_check_failed,
                        "coefficient " + std::to_string(k) + " exceeds modulus 2");

    for (double r : grid_radii) {
        const double tail = tail_bound(r, s.order());
        for (int j = 0; j < grid_angles; ++j) {
            const double theta =
                2.0 * std::numbers::pi * static_cast<double>(j) / grid_angles;
            const cplx z = std::polar(r, theta);
            const cplx truncated = evaluate(s, z);
            if (p.has_exact_eval()) {
                const cplx exact = p.eval_exact(z);
                if (exact.real() <= -grid_tolerance)
                    throw error(errc::membership_check_failed,
                                "closed form has negative real part on grid");
                if (std::abs(truncated - exact) > tail + grid_tolerance)
                    throw error(errc::membership_check_failed,
                                "truncation strays from closed form beyond tail bound");
            } else if (truncated.real() <= -(grid_tolerance + tail)) {
                throw error(errc::membership_check_failed,
                            "truncation has negative real part beyond tail allowance");
            }
        }
    }
}

} // namespace sakaguchi
