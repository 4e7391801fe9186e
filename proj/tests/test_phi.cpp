#include "doctest.h"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "sakaguchi/phi.hpp"
#include "support.hpp"

using namespace sakaguchi;
using testutil::code_of;

namespace {

const double rt2 = std::sqrt(2.0);

// trapezoid rule on |z| = r recovers Taylor coefficients of an analytic f;
// independent of the series machinery under test
cplx cauchy_coeff(const std::function<cplx(cplx)>& f, std::size_t n, double r) {
    const int m = 256;
    cplx acc = 0.0;
    for (int j = 0; j < m; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / m;
        const cplx z = std::polar(r, theta);
        acc += f(z) * std::polar(1.0, -theta * static_cast<double>(n));
    }
    return acc / (static_cast<double>(m) * std::pow(r, static_cast<double>(n)));
}

struct NamedPhi {
    PhiSpec spec;
    std::function<cplx(cplx)> closed;
};

std::vector<NamedPhi> closed_forms() {
    return {
        {PhiSpec::exponential(), [](cplx z) { return std::exp(z); }},
        {PhiSpec::sqrt1p(), [](cplx z) { return std::sqrt(cplx(1.0) + z); }},
        {PhiSpec::rl(),
         [](cplx z) {
             const cplx u = (cplx(1.0) - z) / (cplx(1.0) + 2.0 * (rt2 - 1.0) * z);
             return rt2 - (rt2 - 1.0) * std::sqrt(u);
         }},
        {PhiSpec::sg(), [](cplx z) { return 2.0 / (1.0 + std::exp(-z)); }},
        {PhiSpec::janowski(0.0, -0.5),
         [](cplx z) { return cplx(1.0) / (1.0 - 0.5 * z); }},
        {PhiSpec::janowski(1.0, -1.0),
         [](cplx z) { return (cplx(1.0) + z) / (cplx(1.0) - z); }},
        {PhiSpec::alpha(0.25),
         [](cplx z) { return (cplx(1.0) + 0.5 * z) / (cplx(1.0) - z); }},
    };
}

} // namespace

TEST_CASE("low-order coefficients match their closed forms") {
    auto check4 = [](const PhiSpec& s, double b1, double b2, double b3, double b4) {
        const PhiCoeffs b = phi_coeffs(s);
        CHECK(std::abs(b.b1 - b1) < 1e-14);
        CHECK(std::abs(b.b2 - b2) < 1e-14);
        CHECK(std::abs(b.b3 - b3) < 1e-14);
        CHECK(std::abs(b.b4 - b4) < 1e-14);
    };
    check4(PhiSpec::exponential(), 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0);
    check4(PhiSpec::sqrt1p(), 0.5, -1.0 / 8.0, 1.0 / 16.0, -5.0 / 128.0);
    check4(PhiSpec::sg(), 0.5, 0.0, -1.0 / 24.0, 0.0);
    check4(PhiSpec::janowski(0.0, -0.5), 0.5, 0.25, 0.125, 0.0625);
    check4(PhiSpec::janowski(1.0, -1.0), 2.0, 2.0, 2.0, 2.0);
    check4(PhiSpec::alpha(0.25), 1.5, 1.5, 1.5, 1.5);

    const PhiCoeffs rl = phi_coeffs(PhiSpec::rl());
    CHECK(std::abs(rl.b1 - (5.0 - 3.0 * rt2) / 2.0) < 1e-14);
    CHECK(std::abs(rl.b2 - (71.0 - 51.0 * rt2) / 8.0) < 1e-14);
}

TEST_CASE("series expansions agree with contour-integral coefficients") {
    for (const NamedPhi& np : closed_forms()) {
        INFO("spec ", to_string(np.spec));
        const Series s = phi_series(np.spec, 6);
        CHECK(std::abs(s[0] - cplx(1.0)) < 1e-15);
        for (std::size_t n = 1; n <= 6; ++n)
            CHECK(std::abs(s[n] - cauchy_coeff(np.closed, n, 0.5)) < 1e-10);
    }
}

TEST_CASE("closed forms keep positive real part inside the disk") {
    for (const NamedPhi& np : closed_forms()) {
        INFO("spec ", to_string(np.spec));
        for (int j = 0; j < 64; ++j) {
            const cplx z = std::polar(0.9, 2.0 * std::numbers::pi * j / 64.0);
            CHECK(np.closed(z).real() > 0.0);
        }
    }
}

TEST_CASE("extreme Janowski choice coincides with order zero") {
    const Series a = phi_series(PhiSpec::janowski(1.0, -1.0), 8);
    const Series b = phi_series(PhiSpec::alpha(0.0), 8);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-15);
}

TEST_CASE("custom coefficients are copied verbatim and padded with zeros") {
    const PhiSpec s = PhiSpec::custom({2.0, 0.25, -0.5});
    const Series ser = phi_series(s, 8);
    CHECK(std::abs(ser[1] - cplx(2.0)) == 0.0);
    CHECK(std::abs(ser[2] - cplx(0.25)) == 0.0);
    CHECK(std::abs(ser[3] + cplx(0.5)) == 0.0);
    for (std::size_t k = 4; k <= 8; ++k) CHECK(std::abs(ser[k]) == 0.0);
}

TEST_CASE("four-coefficient extraction equals the series truncation") {
    for (const NamedPhi& np : closed_forms()) {
        const PhiCoeffs b = phi_coeffs(np.spec);
        const Series s = phi_series(np.spec, 12);
        CHECK(std::abs(b.b1 - s[1].real()) < 1e-15);
        CHECK(std::abs(b.b2 - s[2].real()) < 1e-15);
        CHECK(std::abs(b.b3 - s[3].real()) < 1e-15);
        CHECK(std::abs(b.b4 - s[4].real()) < 1e-15);
    }
}

TEST_CASE("spec strings round-trip through parse and print") {
    const char* names[] = {"exp",        "sqrt1p",          "rl",
                           "sg",         "janowski:0,-0.5", "alpha:0.25",
                           "janowski:1,-1", "custom:0.5,-0.125"};
    for (const char* name : names) CHECK(to_string(parse_phi_spec(name)) == name);
}

TEST_CASE("malformed spec strings are rejected") {
    const char* bad[] = {
        "janowski:1,1",   // needs B < A
        "janowski:0.2",   // wrong arity
        "janowski:0.5,-1.5",
        "alpha:1",
        "alpha:-0.1",
        "exp:1",          // takes no parameters
        "custom:-1",      // first coefficient must be positive
        "custom:",
        "janowski:1,",    // trailing comma
        "janowski:a,b",
        "bogus",
    };
    for (const char* text : bad) {
        INFO("spec ", text);
        CHECK(code_of([&] { parse_phi_spec(text); }) == errc::bad_spec);
    }
}

TEST_CASE("constructor range checks reject out-of-domain parameters") {
    CHECK(code_of([] { PhiSpec::janowski(0.5, 0.5); }) == errc::bad_spec);
    CHECK(code_of([] { PhiSpec::alpha(1.0); }) == errc::bad_spec);
    CHECK(code_of([] { PhiSpec::custom({}); }) == errc::bad_spec);
    CHECK(code_of([] { PhiSpec::custom({0.0, 1.0}); }) == errc::bad_spec);
}
