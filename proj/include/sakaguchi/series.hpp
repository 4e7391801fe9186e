#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "sakaguchi/errors.hpp"

namespace sakaguchi {

using cplx = std::complex<double>;

// Truncation order used by constructors that don't take an explicit order.
inline constexpr std::size_t default_order = 12;

// Truncated power series sum_{k=0}^{order} c[k] z^k over complex doubles.
// The truncation order is part of the value: binary operations truncate to
// the smaller operand order, so degree bookkeeping travels with the data.
class Series {
public:
    Series() : c_(1, cplx(0.0)) {}

    explicit Series(std::size_t order) : c_(order + 1, cplx(0.0)) {}

    explicit Series(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.assign(1, cplx(0.0));
    }

    std::size_t order() const { return c_.size() - 1; }

    const cplx& operator[](std::size_t k) const { return c_[k]; }
    cplx& operator[](std::size_t k) { return c_[k]; }

    const std::vector<cplx>& coeffs() const { return c_; }

    // the constant series 1 at the given order
    static Series one(std::size_t order);
    // the identity series z at the given order
    static Series identity(std::size_t order);
    // c * z^k at the given order
    static Series monomial(cplx c, std::size_t k, std::size_t order);

private:
    std::vector<cplx> c_;
};

// alpha*a + beta*b, truncated to min(order a, order b)
Series combine(const Series& a, const Series& b, cplx alpha, cplx beta);

// Cauchy product truncated to min(order a, order b)
Series multiply(const Series& a, const Series& b);

// a/b by forward recurrence; requires |b[0]| > 1e-14
Series divide(const Series& a, const Series& b);

// outer(inner(z)); requires inner[0] == 0 exactly
Series compose(const Series& outer, const Series& inner);

// termwise derivative, order drops by one
Series differentiate(const Series& a);

// a(z) - a(-z): even coefficients zeroed, odd doubled
Series antisymmetrize(const Series& a);

// Horner evaluation of the truncation at z
cplx evaluate(const Series& a, cplx z);

// series square root q with q*q = a and q[0] = +1; requires a[0] == 1
Series sqrt_unit(const Series& a);

inline Series operator+(const Series& a, const Series& b) { return combine(a, b, 1.0, 1.0); }
inline Series operator-(const Series& a, const Series& b) { return combine(a, b, 1.0, -1.0); }
inline Series operator*(const Series& a, const Series& b) { return multiply(a, b); }

} // namespace sakaguchi
