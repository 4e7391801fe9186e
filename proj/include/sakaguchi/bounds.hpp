#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sakaguchi/coeffs.hpp"
#include "sakaguchi/phi.hpp"

namespace sakaguchi {

// One comparison of the form |lhs| vs |rhs| (C1..C3, hypothesis rows) or a
// two-sided ratio constraint (C4, where `value` carries the ratio).
struct Condition {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    std::optional<double> value; // C4 ratio; empty elsewhere
    bool holds = false;
    bool marginal = false; // |lhs - rhs| < 1e-10, or ratio within 1e-10 of {0,1}
    std::string reason;    // set when a denominator degenerates
};

struct ConditionReport {
    std::vector<Condition> items;

    const Condition& find(const std::string& name) const;
    // C1..C4 together gate the fifth-coefficient bound
    bool a5_conditions_hold() const;
};

// evaluates C1..C4 plus the hypothesis rows H_a3 (B1 <= |B2|),
// H_T5 (B1^2 > 2 B2), H_T6 (3 B1^2 >= 8 B2)
ConditionReport check_conditions(const PhiCoeffs& b);

// the same four conditions specialized to the two-parameter family
// (1 + A z)/(1 + B z); verdicts agree with check_conditions on phi_coeffs
ConditionReport janowski_conditions(double A, double B);

struct ProofWitness {
    double eps1 = 0.0;
    double eps2 = 0.0;
    double eps3 = 0.0;
    double tau = 0.0;
    double nu1 = 0.0;
    double nu2 = 0.0;
    double nu3 = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0;
};

// witness scalars for the sharp fifth-coefficient bound; requires C1..C4
ProofWitness proof_witnesses(const PhiCoeffs& b);

struct GammaClosed {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0;
};

// independent closed forms of the gamma weights, for cross-checking
GammaClosed gamma_closed_forms(const PhiCoeffs& b);

// A4 = (1/2) g0 k4 p4 - (1/4) g1 k2^2 p2^2 - (1/2) g1 k1 k3 p1 p3
//      + (3/8) g2 k1^2 k2 p1^2 p2 - (1/16) g3 k1^4 p1^4
// kappa = (k1..k4), gamma = (g0..g3); |A4| <= 2 over the class
cplx a4_functional(const std::array<double, 4>& kappa,
                   const std::array<double, 4>& gamma,
                   const std::array<cplx, 4>& p);

// B1/4 (starlike) or B1/20 (convex); sharp once C1..C4 hold
double a5_sharp_bound(ClassKind kind, double b1);

// |B2|/2 (starlike) or |B2|/6 (convex); requires B1 <= |B2|
double a3_bound(ClassKind kind, const PhiCoeffs& b);

// determinant of the m x m Hermitian Toeplitz matrix with first row
// (a_n, a_{n+1}, ..., a_{n+m-1}); returns the real part
double toeplitz_det(const CoeffVector& a, int m, int n);

// 1 - 2|a2|^2 + 2 Re(a2^2 conj(a3)) - |a3|^2
double t31(cplx a2, cplx a3);

enum class BoundCase {
    hypothesis_failed,
    flat,            // unconditional comparison, no case split
    sigma_outside,   // critical point outside [0,4]; endpoint minimum
    sigma_equals_four,
    sigma_interior,  // interior critical point; bound not sharp
};

enum class WitnessTag { none, identity, extremal_k1, extremal_k2 };

const char* to_string(BoundCase c);
const char* to_string(WitnessTag w);

struct BoundResult {
    std::optional<double> value; // empty iff hypothesis_failed
    BoundCase case_tag = BoundCase::flat;
    std::optional<double> sigma;
    bool sharp = false;
    WitnessTag witness = WitnessTag::none;
    std::string note;
};

// T_{3,1} <= 1 over either class when B1 <= |B2|; attained by f(z) = z
BoundResult t31_upper(const PhiCoeffs& b);

// lower bound for the starlike class; requires B1^2 > 2 B2
BoundResult t31_lower_star(const PhiCoeffs& b);

// lower bound for the convex class; requires 3 B1^2 >= 8 B2
BoundResult t31_lower_convex(const PhiCoeffs& b);

} // namespace sakaguchi
