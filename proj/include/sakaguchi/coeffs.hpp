#pragma once

#include "sakaguchi/caratheodory.hpp"
#include "sakaguchi/phi.hpp"
#include "sakaguchi/series.hpp"

namespace sakaguchi {

enum class ClassKind { starlike, convex };

const char* to_string(ClassKind k);

// Taylor coefficients of the class member; a[0] = 0, a[1] = 1.
struct CoeffVector {
    std::vector<cplx> a;

    std::size_t max_index() const { return a.size() - 1; }
    const cplx& operator[](std::size_t n) const { return a[n]; }
};

// Solves the defining equation order by order for f(z) = z + sum a_n z^n.
//
// starlike:  2 z f' = phi(omega) (f(z) - f(-z))
//            n a_n = sum_{m odd, m <= n} a_m c_{n-m},  c = phi(omega)
// convex:    (2 z f')' = phi(omega) (f(z) - f(-z))'
//            n^2 a_n = sum_{m odd, m <= n} m a_m c_{n-m}
//
// For odd n the m = n term moves to the left, leaving divisors n(n-1) and
// n-1 which never vanish for n >= 2.
CoeffVector solve_coeffs(ClassKind kind, const Series& phi, const Series& p_series,
                         std::size_t nmax);
CoeffVector solve_coeffs(ClassKind kind, const Series& phi, const CaraFunction& p,
                         std::size_t nmax);

struct LowCoeffs {
    cplx a2;
    cplx a3;
};

// a2 = B1 p1 / d2, a3 = ((B2 - B1) p1^2 + 2 B1 p2) / d3 with
// (d2, d3) = (4, 8) for starlike and (8, 24) for convex
LowCoeffs closed_form_low(ClassKind kind, const PhiCoeffs& b, cplx p1, cplx p2);

struct Upsilons {
    double u1 = 0.0;
    double u2 = 0.0;
    double u3 = 0.0;
    double u4 = 0.0;
};

Upsilons upsilons(const PhiCoeffs& b);

// a5 = (B1/8) (u1 p1^4 + u2 p1^2 p2 + u3 p1 p3 + u4 p2^2 + p4) for starlike,
// prefactor B1/40 for convex (the recursion divides by 20 instead of 4).
// The u4 term multiplies p2^2; see closed_form_a5_literal for the variant
// reading used in audit output.
cplx closed_form_a5(ClassKind kind, const PhiCoeffs& b, cplx p1, cplx p2, cplx p3,
                    cplx p4);

// variant with the u4 term multiplying p1^2 p2 instead of p2^2; disagrees
// with solve_coeffs and exists only so audits can show the difference
cplx closed_form_a5_literal(ClassKind kind, const PhiCoeffs& b, cplx p1, cplx p2,
                            cplx p3, cplx p4);

// member driven by omega = z^k, i.e. p = (1 + z^k)/(1 - z^k); k in {1, 2, 4}
CoeffVector extremal_function(ClassKind kind, const PhiSpec& spec, int k,
                              std::size_t nmax);

} // namespace sakaguchi
