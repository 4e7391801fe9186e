#include "sakaguchi/series.hpp"

#include <algorithm>
#include <cmath>

namespace sakaguchi {

namespace {

std::size_t min_order(const Series& a, const Series& b) {
    return std::min(a.order(), b.order());
}

} // namespace

Series Series::one(std::size_t order) {
    Series s(order);
    s[0] = 1.0;
    return s;
}

Series Series::identity(std::size_t order) {
    return monomial(1.0, 1, order);
}

Series Series::monomial(cplx c, std::size_t k, std::size_t order) {
    Series s(order);
    if (k <= order) s[k] = c;
    return s;
}

Series combine(const Series& a, const Series& b, cplx alpha, cplx beta) {
    const std::size_t n = min_order(a, b);
    Series r(n);
    for (std::size_t k = 0; k <= n; ++k) r[k] = alpha * a[k] + beta * b[k];
    return r;
}

Series multiply(const Series& a, const Series& b) {
    const std::size_t n = min_order(a, b);
    Series r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == cplx(0.0)) continue;
        for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series divide(const Series& a, const Series& b) {
    if (std::abs(b[0]) <= 1e-14)
        throw error(errc::division_by_non_unit,
                    "divisor constant term has modulus <= 1e-14");
    const std::size_t n = min_order(a, b);
    Series q(n);
    // q[k] = (a[k] - sum_{j<k} q[j] b[k-j]) / b[0]
    for (std::size_t k = 0; k <= n; ++k) {
        cplx acc = a[k];
        for (std::size_t j = 0; j < k; ++j) acc -= q[j] * b[k - j];
        q[k] = acc / b[0];
    }
    return q;
}

Series compose(const Series& outer, const Series& inner) {
    if (inner[0] != cplx(0.0))
        throw error(errc::nonvanishing_inner,
                    "inner series must have zero constant term");
    const std::size_t n = min_order(outer, inner);
    // Horner in the inner series: r = (...(c_n * w + c_{n-1}) * w + ...) + c_0
    Series r(n);
    r[0] = outer[n];
    Series w(n);
    for (std::size_t k = 0; k <= n; ++k) w[k] = inner[k];
    for (std::size_t k = n; k-- > 0;) {
        r = multiply(r, w);
        r[0] += outer[k];
    }
    return r;
}

Series differentiate(const Series& a) {
    if (a.order() == 0) return Series(std::size_t{0});
    Series r(a.order() - 1);
    for (std::size_t k = 1; k <= a.order(); ++k)
        r[k - 1] = a[k] * cplx(static_cast<double>(k));
    return r;
}

Series antisymmetrize(const Series& a) {
    Series r(a.order());
    for (std::size_t k = 1; k <= a.order(); k += 2) r[k] = 2.0 * a[k];
    return r;
}

cplx evaluate(const Series& a, cplx z) {
    cplx acc = a[a.order()];
    for (std::size_t k = a.order(); k-- > 0;) acc = acc * z + a[k];
    return acc;
}

Series sqrt_unit(const Series& a) {
    if (a[0] != cplx(1.0))
        throw error(errc::bad_spec, "sqrt_unit requires unit constant term");
    const std::size_t n = a.order();
    Series q(n);
    q[0] = 1.0;
    // 2 q[0] q[k] = a[k] - sum_{0<j<k} q[j] q[k-j]
    for (std::size_t k = 1; k <= n; ++k) {
        cplx acc = a[k];
        for (std::size_t j = 1; j < k; ++j) acc -= q[j] * q[k - j];
        q[k] = acc / 2.0;
    }
    return q;
}

} // namespace sakaguchi
