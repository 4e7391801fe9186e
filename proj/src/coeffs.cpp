#include "sakaguchi/coeffs.hpp"

#include <cassert>
#include <cmath>

namespace sakaguchi {

const char* to_string(ClassKind k) {
    return k == ClassKind::starlike ? "star" : "convex";
}

CoeffVector solve_coeffs(ClassKind kind, const Series& phi, const Series& p_series,
                         std::size_t nmax) {
    if (nmax < 5)
        throw error(errc::bad_spec, "solver needs nmax >= 5");
    if (phi.order() < nmax || p_series.order() < nmax)
        throw error(errc::insufficient_coefficients,
                    "phi and p series must carry order >= nmax");

    Series p(nmax);
    for (std::size_t k = 0; k <= nmax; ++k) p[k] = p_series[k];
    const Series omega = divide(p - Series::one(nmax), p + Series::one(nmax));
    Series phi_cut(nmax);
    for (std::size_t k = 0; k <= nmax; ++k) phi_cut[k] = phi[k];
    const Series c = compose(phi_cut, omega);

    CoeffVector out;
    out.a.assign(nmax + 1, cplx(0.0));
    out.a[1] = 1.0;

    const bool star = kind == ClassKind::starlike;
    for (std::size_t n = 2; n <= nmax; ++n) {
        cplx rhs = 0.0;
        for (std::size_t m = 1; m < n; m += 2) {
            const cplx w = star ? out.a[m] : static_cast<double>(m) * out.a[m];
            rhs += w * c[n - m];
        }
        double divisor;
        if (n % 2 == 0) {
            divisor = star ? static_cast<double>(n)
                           : static_cast<double>(n) * static_cast<double>(n);
        } else {
            // the m = n term contributes a_n c_0 = a_n (star) or n a_n (convex)
            divisor = star ? static_cast<double>(n - 1)
                           : static_cast<double>(n) * static_cast<double>(n - 1);
        }
        assert(divisor > 0.0);
        out.a[n] = rhs / divisor;
    }
    return out;
}

CoeffVector solve_coeffs(ClassKind kind, const Series& phi, const CaraFunction& p,
                         std::size_t nmax) {
    return solve_coeffs(kind, phi, p.series(), nmax);
}

LowCoeffs closed_form_low(ClassKind kind, const PhiCoeffs& b, cplx p1, cplx p2) {
    const double d2 = kind == ClassKind::starlike ? 4.0 : 8.0;
    const double d3 = kind == ClassKind::starlike ? 8.0 : 24.0;
    LowCoeffs r;
    r.a2 = b.b1 * p1 / d2;
    r.a3 = ((b.b2 - b.b1) * p1 * p1 + 2.0 * b.b1 * p2) / d3;
    return r;
}

Upsilons upsilons(const PhiCoeffs& b) {
    const double b1 = b.b1, b2 = b.b2, b3 = b.b3, b4 = b.b4;
    Upsilons u;
    u.u1 = (b1 * b1 - 2.0 * b1 + 6.0 * b2 - 2.0 * b1 * b2 + b2 * b2 - 6.0 * b3 +
            2.0 * b4) /
           (16.0 * b1);
    u.u2 = (3.0 * b1 - b1 * b1 - 6.0 * b2 + b1 * b2 + 3.0 * b3) / (4.0 * b1);
    u.u3 = (b2 - b1) / b1;
    u.u4 = (b1 * b1 - 2.0 * b1 + 2.0 * b2) / (4.0 * b1);
    return u;
}

namespace {

cplx a5_form(ClassKind kind, const PhiCoeffs& b, cplx quartic_sum) {
    const double prefactor = kind == ClassKind::starlike ? b.b1 / 8.0 : b.b1 / 40.0;
    return prefactor * quartic_sum;
}

} // namespace

cplx closed_form_a5(ClassKind kind, const PhiCoeffs& b, cplx p1, cplx p2, cplx p3,
                    cplx p4) {
    const Upsilons u = upsilons(b);
    const cplx p1sq = p1 * p1;
    return a5_form(kind, b,
                   u.u1 * p1sq * p1sq + u.u2 * p1sq * p2 + u.u3 * p1 * p3 +
                       u.u4 * p2 * p2 + p4);
}

cplx closed_form_a5_literal(ClassKind kind, const PhiCoeffs& b, cplx p1, cplx p2,
                            cplx p3, cplx p4) {
    const Upsilons u = upsilons(b);
    const cplx p1sq = p1 * p1;
    return a5_form(kind, b,
                   u.u1 * p1sq * p1sq + u.u2 * p1sq * p2 + u.u3 * p1 * p3 +
                       u.u4 * p1sq * p2 + p4);
}

CoeffVector extremal_function(ClassKind kind, const PhiSpec& spec, int k,
                              std::size_t nmax) {
    if (k != 1 && k != 2 && k != 4)
        throw error(errc::bad_spec, "extremal kernel index must be 1, 2, or 4");
    // p = (1 + z^k)/(1 - z^k): p_n = 2 when k | n, else 0, written exactly
    Series p(nmax);
    p[0] = 1.0;
    for (std::size_t n = k; n <= nmax; n += k) p[n] = 2.0;
    return solve_coeffs(kind, phi_series(spec, nmax), p, nmax);
}

} // namespace sakaguchi
