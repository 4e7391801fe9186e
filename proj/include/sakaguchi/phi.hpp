#pragma once

#include <string>
#include <vector>

#include "sakaguchi/series.hpp"

namespace sakaguchi {

enum class PhiKind {
    janowski,   // (1 + A z)/(1 + B z), -1 <= B < A <= 1
    alpha,      // (1 + (1 - 2 alpha) z)/(1 - z), 0 <= alpha < 1
    exponential,// e^z
    sqrt1p,     // sqrt(1 + z)
    rl,         // sqrt(2) - (sqrt(2)-1) sqrt((1 - z)/(1 + 2(sqrt(2)-1) z))
    sg,         // 2/(1 + e^{-z})
    custom,     // caller-supplied Maclaurin coefficients, zero-padded
};

class PhiSpec {
public:
    static PhiSpec janowski(double A, double B);
    static PhiSpec alpha(double a);
    static PhiSpec exponential();
    static PhiSpec sqrt1p();
    static PhiSpec rl();
    static PhiSpec sg();
    static PhiSpec custom(std::vector<double> coeffs); // B1, B2, ...

    PhiKind kind() const { return kind_; }
    double param_a() const { return a_; }
    double param_b() const { return b_; }
    const std::vector<double>& custom_coeffs() const { return custom_; }

private:
    PhiSpec() = default;
    PhiKind kind_ = PhiKind::exponential;
    double a_ = 0.0;
    double b_ = 0.0;
    std::vector<double> custom_;
};

// CLI syntax: janowski:A,B | alpha:a | exp | sqrt1p | rl | sg | custom:B1,B2,B3,B4
PhiSpec parse_phi_spec(const std::string& text);
std::string to_string(const PhiSpec& spec);

// Maclaurin truncation of the target function; constant term 1
Series phi_series(const PhiSpec& spec, std::size_t order);

struct PhiCoeffs {
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    double b4 = 0.0;
};

// first four coefficients; requires them real and b1 > 0
PhiCoeffs phi_coeffs(const PhiSpec& spec);

} // namespace sakaguchi
