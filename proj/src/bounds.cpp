#include "sakaguchi/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace sakaguchi {

namespace {

constexpr double marginal_tolerance = 1e-10;
constexpr double degenerate_tolerance = 1e-12;

Condition absolute_comparison(std::string name, double lhs, double rhs) {
    Condition c;
    c.name = std::move(name);
    c.lhs = std::abs(lhs);
    c.rhs = std::abs(rhs);
    c.holds = c.lhs < c.rhs;
    c.marginal = std::abs(c.lhs - c.rhs) < marginal_tolerance;
    return c;
}

Condition ratio_condition(std::string name, double num, double den) {
    Condition c;
    c.name = std::move(name);
    if (std::abs(den) <= 1e-14) {
        c.holds = false;
        c.reason = "denominator vanishes";
        return c;
    }
    const double v = num / den;
    c.value = v;
    c.lhs = v;
    c.rhs = 1.0;
    c.holds = v > 0.0 && v < 1.0;
    c.marginal = std::abs(v) < marginal_tolerance || std::abs(v - 1.0) < marginal_tolerance;
    return c;
}

// shared transcription of the order-7 comparison; both condition checking
// and the eps3 witness read from here so there is a single source of truth
double c3_numerator(double b1, double b2, double b3, double b4) {
    return std::pow(b1, 7) - std::pow(b1, 6) * (8.0 * b2 + 3.0) -
           6.0 * std::pow(b1, 4) *
               (b2 * (3.0 * b2 + 2.0 * b3 + 2.0) - 6.0 * b3 + 9.0 * b4) +
           std::pow(b1, 5) * (7.0 * b2 * (b2 + 4.0) - 24.0 * b3 + 18.0 * b4) +
           6.0 * std::pow(b1, 3) *
               (std::pow(b2, 3) - 2.0 * b2 * b2 + 8.0 * b2 * b3 - 3.0 * b3 * b3 +
                6.0 * (b2 + 1.0) * b4) -
           6.0 * b1 * b2 *
               (3.0 * std::pow(b2, 3) - 6.0 * b3 * b3 + b2 * b2 * (4.0 * b3 - 6.0) +
                6.0 * b2 * (b4 - 2.0 * b3)) +
           18.0 * b2 * b2 *
               (-2.0 * b3 * b3 + b2 * ((b2 - 2.0) * b2 + 2.0 * b4)) +
           b1 * b1 * b2 *
               (b2 * (b2 * (5.0 * b2 + 6.0) - 24.0 * b3 + 18.0 * b4) -
                36.0 * (2.0 * b3 + b4));
}

double c3_denominator(double b1, double b2, double b3) {
    return 2.0 * ((b1 - 2.0) * b1 + 2.0 * b2) *
           (b1 * (2.0 * b1 + b2 - 3.0) + 3.0 * b3) *
           (4.0 * std::pow(b1, 3) + 6.0 * b2 * b2 - b1 * b1 * (b2 + 3.0) -
            3.0 * b1 * b3);
}

struct QuadraticCase {
    double i0;            // value at x = 0
    double i4;            // value at x = 4
    double interior;      // value at the critical point
    double sigma_num;
    double sigma_den;
    WitnessTag w0;        // attains i0
    WitnessTag w4;        // attains i4
};

BoundResult resolve_cases(const QuadraticCase& q) {
    BoundResult r;
    auto endpoint_min = [&] {
        if (q.i0 <= q.i4) {
            r.value = q.i0;
            r.witness = q.w0;
        } else {
            r.value = q.i4;
            r.witness = q.w4;
        }
        r.case_tag = BoundCase::sigma_outside;
        r.sharp = true;
    };

    if (std::abs(q.sigma_den) <= degenerate_tolerance) {
        endpoint_min();
        r.note = "critical-point denominator degenerates; endpoint minimum used";
        return r;
    }
    const double sigma = q.sigma_num / q.sigma_den;
    r.sigma = sigma;
    if (std::abs(sigma - 4.0) <= degenerate_tolerance) {
        r.value = q.i4;
        r.case_tag = BoundCase::sigma_equals_four;
        r.sharp = true;
        r.witness = q.w4;
    } else if (sigma < 0.0 || sigma > 4.0) {
        endpoint_min();
    } else {
        r.value = q.interior;
        r.case_tag = BoundCase::sigma_interior;
        r.sharp = false;
        r.witness = WitnessTag::none;
        r.note = "interior critical point; bound is not sharp";
    }
    return r;
}

} // namespace

const Condition& ConditionReport::find(const std::string& name) const {
    for (const Condition& c : items)
        if (c.name == name) return c;
    throw error(errc::bad_spec, "no condition named " + name);
}

bool ConditionReport::a5_conditions_hold() const {
    return find("C1").holds && find("C2").holds && find("C3").holds &&
           find("C4").holds;
}

ConditionReport check_conditions(const PhiCoeffs& b) {
    if (!(b.b1 > 0.0))
        throw error(errc::bad_spec, "conditions need B1 > 0");
    const double b1 = b.b1, b2 = b.b2, b3 = b.b3, b4 = b.b4;

    ConditionReport rep;
    rep.items.push_back(absolute_comparison(
        "C1", std::pow(b1, 3) - 2.0 * b1 * b2 + 2.0 * b2 * b2,
        2.0 * b1 * b1 - std::pow(b1, 3) - 2.0 * b1 * b2));
    rep.items.push_back(absolute_comparison(
        "C2", std::pow(b1, 3) - b1 * b1 * b2 + 3.0 * b2 * b2 - 3.0 * b1 * b3,
        3.0 * (std::pow(b1, 3) - b1 * b1 + b2 * b2)));
    rep.items.push_back(absolute_comparison("C3", c3_numerator(b1, b2, b3, b4),
                                            c3_denominator(b1, b2, b3)));
    rep.items.push_back(ratio_condition("C4", 2.0 * b1 - b1 * b1 - 2.0 * b2,
                                        2.0 * (b1 - b2)));

    Condition ha3;
    ha3.name = "H_a3";
    ha3.lhs = b1;
    ha3.rhs = std::abs(b2);
    ha3.holds = b1 <= std::abs(b2);
    ha3.marginal = std::abs(ha3.lhs - ha3.rhs) < marginal_tolerance;
    rep.items.push_back(ha3);

    Condition ht5;
    ht5.name = "H_T5";
    ht5.lhs = b1 * b1;
    ht5.rhs = 2.0 * b2;
    ht5.holds = ht5.lhs > ht5.rhs;
    ht5.marginal = std::abs(ht5.lhs - ht5.rhs) < marginal_tolerance;
    rep.items.push_back(ht5);

    Condition ht6;
    ht6.name = "H_T6";
    ht6.lhs = 3.0 * b1 * b1;
    ht6.rhs = 8.0 * b2;
    ht6.holds = ht6.lhs >= ht6.rhs;
    ht6.marginal = std::abs(ht6.lhs - ht6.rhs) < marginal_tolerance;
    rep.items.push_back(ht6);

    return rep;
}

ConditionReport janowski_conditions(double A, double B) {
    if (!(B < A && A <= 1.0 && -1.0 <= B))
        throw error(errc::bad_spec, "need -1 <= B < A <= 1");
    if (std::abs(B + 1.0) <= 1e-14)
        throw error(errc::denominator_vanishes,
                    "B = -1 degenerates the ratio condition");

    const double d = A - B;
    ConditionReport rep;
    rep.items.push_back(absolute_comparison(
        "C1", d * d * (A + B + 2.0 * B * B), (A - 3.0 * B - 2.0) * d * d));
    rep.items.push_back(absolute_comparison(
        "C2", std::pow(d, 3) * (B + 1.0),
        3.0 * d * d * (A - 1.0 + (B - 1.0) * B)));
    rep.items.push_back(absolute_comparison(
        "C3",
        std::pow(d, 5) * (B + 1.0) *
            (A * A * (7.0 * B + 1.0) +
             B * (B * (38.0 + (12.0 - 17.0 * B) * B) + 15.0) +
             A * (B * (B * (5.0 * B - 31.0) - 27.0) - 3.0)),
        2.0 * std::pow(d, 4) * (A - 3.0 * B - 2.0) *
            (A * (B - 2.0) - 4.0 * B * B + 2.0 * B + 3.0) *
            (A * (B + 4.0) + 2.0 * B * (B - 2.0) - 3.0)));
    rep.items.push_back(
        ratio_condition("C4", 3.0 * B - A + 2.0, 2.0 * B + 2.0));
    return rep;
}

ProofWitness proof_witnesses(const PhiCoeffs& b) {
    const ConditionReport rep = check_conditions(b);
    if (!rep.a5_conditions_hold())
        throw error(errc::conditions_not_met,
                    "C1..C4 must hold before witnesses exist");

    const double b1 = b.b1, b2 = b.b2, b3 = b.b3;
    ProofWitness w;
    w.eps1 = (std::pow(b1, 3) - 2.0 * b1 * b2 + 2.0 * b2 * b2) /
             (2.0 * b1 * b1 - std::pow(b1, 3) - 2.0 * b1 * b2);
    w.eps2 = (std::pow(b1, 3) - b1 * b1 * b2 + 3.0 * b2 * b2 - 3.0 * b1 * b3) /
             (3.0 * (-b1 * b1 + std::pow(b1, 3) + b2 * b2));
    w.eps3 = c3_numerator(b1, b2, b3, b.b4) / c3_denominator(b1, b2, b3);
    w.tau = std::sqrt((2.0 * b1 - b1 * b1 - 2.0 * b2) / (2.0 * (b1 - b2)));

    const double e1 = w.eps1, e2 = w.eps2, e3 = w.eps3;
    const double s1 = 1.0 - e1 * e1;
    w.nu1 = 2.0 * e1;
    w.nu2 = 2.0 * e1 * e1 + 2.0 * s1 * e2;
    w.nu3 = 2.0 * std::pow(e1, 3) + 4.0 * s1 * e1 * e2 - 2.0 * s1 * e1 * e2 * e2 +
            2.0 * s1 * (1.0 - e2 * e2) * e3;

    w.gamma1 = 0.5 * (1.0 + 0.5 * w.nu1);
    w.gamma2 = 0.25 * (1.0 + w.nu1 + 0.5 * w.nu2);
    w.gamma3 = 0.125 * (1.0 + 1.5 * w.nu1 + 1.5 * w.nu2 + 0.5 * w.nu3);
    return w;
}

GammaClosed gamma_closed_forms(const PhiCoeffs& b) {
    const double b1 = b.b1, b2 = b.b2, b3 = b.b3, b4 = b.b4;
    const double d = b1 - b2;
    const double q = b1 * b1 - 2.0 * b1 + 2.0 * b2;
    GammaClosed g;
    g.gamma1 = -d * d / (b1 * q);
    g.gamma2 = -d * d * (b1 * b1 + 6.0 * b2 - b1 * (3.0 + b2) - 3.0 * b3) /
               (3.0 * b1 * q * q);
    g.gamma3 = -d * d *
               (b1 * b1 + 6.0 * b2 + b2 * b2 - 2.0 * b1 * (1.0 + b2) - 6.0 * b3 +
                2.0 * b4) /
               (4.0 * b1 * q * q);
    return g;
}

cplx a4_functional(const std::array<double, 4>& kappa,
                   const std::array<double, 4>& gamma,
                   const std::array<cplx, 4>& p) {
    const double k1 = kappa[0], k2 = kappa[1], k3 = kappa[2], k4 = kappa[3];
    const double g0 = gamma[0], g1 = gamma[1], g2 = gamma[2], g3 = gamma[3];
    const cplx p1 = p[0], p2 = p[1], p3 = p[2], p4 = p[3];
    return 0.5 * g0 * k4 * p4 - 0.25 * g1 * k2 * k2 * p2 * p2 -
           0.5 * g1 * k1 * k3 * p1 * p3 + 0.375 * g2 * k1 * k1 * k2 * p1 * p1 * p2 -
           (1.0 / 16.0) * g3 * std::pow(k1, 4) * p1 * p1 * p1 * p1;
}

double a5_sharp_bound(ClassKind kind, double b1) {
    if (!(b1 > 0.0))
        throw error(errc::bad_spec, "bound needs B1 > 0");
    return kind == ClassKind::starlike ? b1 / 4.0 : b1 / 20.0;
}

double a3_bound(ClassKind kind, const PhiCoeffs& b) {
    if (!(b.b1 <= std::abs(b.b2)))
        throw error(errc::hypothesis_failed, "needs B1 <= |B2|");
    return kind == ClassKind::starlike ? std::abs(b.b2) / 2.0
                                       : std::abs(b.b2) / 6.0;
}

double toeplitz_det(const CoeffVector& a, int m, int n) {
    if (m < 1 || n < 1)
        throw error(errc::bad_spec, "need m >= 1 and n >= 1");
    if (static_cast<std::size_t>(n + m - 1) > a.max_index())
        throw error(errc::insufficient_coefficients,
                    "coefficient vector too short for requested determinant");

    std::vector<std::vector<cplx>> t(m, std::vector<cplx>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            t[i][j] = j >= i ? a[n + j - i] : std::conj(a[n + i - j]);

    // Gaussian elimination with partial pivoting
    cplx det = 1.0;
    for (int col = 0; col < m; ++col) {
        int pivot = col;
        for (int row = col + 1; row < m; ++row)
            if (std::abs(t[row][col]) > std::abs(t[pivot][col])) pivot = row;
        if (std::abs(t[pivot][col]) == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(t[pivot], t[col]);
            det = -det;
        }
        det *= t[col][col];
        for (int row = col + 1; row < m; ++row) {
            const cplx factor = t[row][col] / t[col][col];
            for (int j = col; j < m; ++j) t[row][j] -= factor * t[col][j];
        }
    }
    return det.real();
}

double t31(cplx a2, cplx a3) {
    return 1.0 - 2.0 * std::norm(a2) + 2.0 * (a2 * a2 * std::conj(a3)).real() -
           std::norm(a3);
}

const char* to_string(BoundCase c) {
    switch (c) {
        case BoundCase::hypothesis_failed: return "hypothesis_failed";
        case BoundCase::flat: return "flat";
        case BoundCase::sigma_outside: return "sigma_outside";
        case BoundCase::sigma_equals_four: return "sigma_equals_four";
        case BoundCase::sigma_interior: return "sigma_interior";
    }
    return "?";
}

const char* to_string(WitnessTag w) {
    switch (w) {
        case WitnessTag::none: return "none";
        case WitnessTag::identity: return "identity";
        case WitnessTag::extremal_k1: return "extremal_k1";
        case WitnessTag::extremal_k2: return "extremal_k2";
    }
    return "?";
}

BoundResult t31_upper(const PhiCoeffs& b) {
    BoundResult r;
    if (!(b.b1 <= std::abs(b.b2))) {
        r.case_tag = BoundCase::hypothesis_failed;
        r.note = "needs B1 <= |B2|";
        return r;
    }
    r.value = 1.0;
    r.case_tag = BoundCase::flat;
    r.sharp = true;
    r.witness = WitnessTag::identity;
    return r;
}

BoundResult t31_lower_star(const PhiCoeffs& b) {
    const double b1 = b.b1, b2 = b.b2;
    if (!(b1 * b1 > 2.0 * b2)) {
        BoundResult r;
        r.case_tag = BoundCase::hypothesis_failed;
        r.note = "needs B1^2 > 2 B2";
        return r;
    }
    QuadraticCase q;
    q.i0 = 1.0 - b1 * b1 / 4.0;
    q.i4 = 1.0 - b1 * b1 / 2.0 + b1 * b1 * b2 / 4.0 - b2 * b2 / 4.0;
    q.sigma_num = 2.0 * b1 * (b1 * b1 - 2.0 * b2);
    q.sigma_den = (b1 * b1 - b1 - b2) * (b1 + b2);
    q.interior =
        1.0 - std::pow(b1, 3) *
                  (std::pow(b1, 3) + 4.0 * b1 * b1 - 4.0 * b1 - 8.0 * b2) /
                  (16.0 * (std::pow(b1, 3) + b1 * b1 * (b2 - 1.0) -
                           2.0 * b1 * b2 - b2 * b2));
    q.w0 = WitnessTag::extremal_k2;
    q.w4 = WitnessTag::extremal_k1;
    return resolve_cases(q);
}

BoundResult t31_lower_convex(const PhiCoeffs& b) {
    const double b1 = b.b1, b2 = b.b2;
    if (!(3.0 * b1 * b1 >= 8.0 * b2)) {
        BoundResult r;
        r.case_tag = BoundCase::hypothesis_failed;
        r.note = "needs 3 B1^2 >= 8 B2";
        return r;
    }
    QuadraticCase q;
    q.i0 = 1.0 - b1 * b1 / 144.0;
    q.i4 = 1.0 + (3.0 * b1 * b1 * (b2 - 6.0) - 4.0 * b2 * b2) / 144.0;
    q.sigma_num = 2.0 * (17.0 * b1 * b1 + 3.0 * std::pow(b1, 3) - 8.0 * b1 * b2);
    q.sigma_den =
        3.0 * std::pow(b1, 3) - 8.0 * b1 * b2 + 3.0 * b1 * b1 * b2 - 4.0 * b2 * b2;
    q.interior =
        1.0 - b1 * b1 *
                  (9.0 * std::pow(b1, 4) + 114.0 * std::pow(b1, 3) +
                   289.0 * b1 * b1 - 304.0 * b1 * b2 - 36.0 * b1 * b1 * b2 +
                   48.0 * b2 * b2) /
                  (576.0 * q.sigma_den);
    q.w0 = WitnessTag::extremal_k2;
    q.w4 = WitnessTag::extremal_k1;
    return resolve_cases(q);
}

} // namespace sakaguchi
