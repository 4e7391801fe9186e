#include "sakaguchi/phi.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sakaguchi {

namespace {

const double sqrt2 = std::sqrt(2.0);

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw error(errc::bad_spec, "malformed number '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw error(errc::bad_spec, "malformed number '" + item + "'");
        out.push_back(v);
    }
    if (!text.empty() && text.back() == ',')
        throw error(errc::bad_spec, "trailing comma in parameter list");
    return out;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

PhiSpec PhiSpec::janowski(double A, double B) {
    if (!(-1.0 <= B && B < A && A <= 1.0))
        throw error(errc::bad_spec, "janowski needs -1 <= B < A <= 1");
    PhiSpec s;
    s.kind_ = PhiKind::janowski;
    s.a_ = A;
    s.b_ = B;
    return s;
}

PhiSpec PhiSpec::alpha(double a) {
    if (!(0.0 <= a && a < 1.0))
        throw error(errc::bad_spec, "alpha needs 0 <= alpha < 1");
    PhiSpec s;
    s.kind_ = PhiKind::alpha;
    s.a_ = a;
    return s;
}

PhiSpec PhiSpec::exponential() {
    PhiSpec s;
    s.kind_ = PhiKind::exponential;
    return s;
}

PhiSpec PhiSpec::sqrt1p() {
    PhiSpec s;
    s.kind_ = PhiKind::sqrt1p;
    return s;
}

PhiSpec PhiSpec::rl() {
    PhiSpec s;
    s.kind_ = PhiKind::rl;
    return s;
}

PhiSpec PhiSpec::sg() {
    PhiSpec s;
    s.kind_ = PhiKind::sg;
    return s;
}

PhiSpec PhiSpec::custom(std::vector<double> coeffs) {
    if (coeffs.empty() || !(coeffs[0] > 0.0))
        throw error(errc::bad_spec, "custom phi needs B1 > 0");
    PhiSpec s;
    s.kind_ = PhiKind::custom;
    s.custom_ = std::move(coeffs);
    return s;
}

PhiSpec parse_phi_spec(const std::string& text) {
    const std::size_t colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string args =
        colon == std::string::npos ? std::string() : text.substr(colon + 1);

    auto need_args = [&](std::size_t n) {
        std::vector<double> v = parse_number_list(args);
        if (v.size() != n)
            throw error(errc::bad_spec,
                        "'" + head + "' expects " + std::to_string(n) + " parameter(s)");
        return v;
    };

    if (head == "janowski") {
        auto v = need_args(2);
        return PhiSpec::janowski(v[0], v[1]);
    }
    if (head == "alpha") {
        auto v = need_args(1);
        return PhiSpec::alpha(v[0]);
    }
    if (head == "custom") {
        auto v = parse_number_list(args);
        if (v.empty()) throw error(errc::bad_spec, "custom phi needs coefficients");
        return PhiSpec::custom(std::move(v));
    }
    if (colon != std::string::npos)
        throw error(errc::bad_spec, "'" + head + "' takes no parameters");
    if (head == "exp") return PhiSpec::exponential();
    if (head == "sqrt1p") return PhiSpec::sqrt1p();
    if (head == "rl") return PhiSpec::rl();
    if (head == "sg") return PhiSpec::sg();
    throw error(errc::bad_spec, "unknown phi spec '" + text + "'");
}

std::string to_string(const PhiSpec& spec) {
    switch (spec.kind()) {
        case PhiKind::janowski:
            return "janowski:" + format_number(spec.param_a()) + "," +
                   format_number(spec.param_b());
        case PhiKind::alpha:
            return "alpha:" + format_number(spec.param_a());
        case PhiKind::exponential: return "exp";
        case PhiKind::sqrt1p: return "sqrt1p";
        case PhiKind::rl: return "rl";
        case PhiKind::sg: return "sg";
        case PhiKind::custom: {
            std::string out = "custom:";
            const auto& c = spec.custom_coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) out += ",";
                out += format_number(c[i]);
            }
            return out;
        }
    }
    return "?";
}

Series phi_series(const PhiSpec& spec, std::size_t order) {
    switch (spec.kind()) {
        case PhiKind::janowski: {
            Series num(order), den(order);
            num[0] = 1.0;
            den[0] = 1.0;
            if (order >= 1) {
                num[1] = spec.param_a();
                den[1] = spec.param_b();
            }
            return divide(num, den);
        }
        case PhiKind::alpha: {
            Series num(order), den(order);
            num[0] = 1.0;
            den[0] = 1.0;
            if (order >= 1) {
                num[1] = 1.0 - 2.0 * spec.param_a();
                den[1] = -1.0;
            }
            return divide(num, den);
        }
        case PhiKind::exponential: {
            Series s(order);
            double fact = 1.0;
            s[0] = 1.0;
            for (std::size_t k = 1; k <= order; ++k) {
                fact *= static_cast<double>(k);
                s[k] = 1.0 / fact;
            }
            return s;
        }
        case PhiKind::sqrt1p: {
            Series a(order);
            a[0] = 1.0;
            if (order >= 1) a[1] = 1.0;
            return sqrt_unit(a);
        }
        case PhiKind::rl: {
            // sqrt(2) - (sqrt(2)-1) sqrt((1 - z)/(1 + 2(sqrt(2)-1) z))
            Series num(order), den(order);
            num[0] = 1.0;
            den[0] = 1.0;
            if (order >= 1) {
                num[1] = -1.0;
                den[1] = 2.0 * (sqrt2 - 1.0);
            }
            const Series root = sqrt_unit(divide(num, den));
            Series s = combine(Series::one(order), root, sqrt2, -(sqrt2 - 1.0));
            return s;
        }
        case PhiKind::sg: {
            // 2 / (1 + e^{-z})
            Series den(order);
            double fact = 1.0;
            double sign = 1.0;
            den[0] = 2.0;
            for (std::size_t k = 1; k <= order; ++k) {
                fact *= static_cast<double>(k);
                sign = -sign;
                den[k] = sign / fact;
            }
            Series two(order);
            two[0] = 2.0;
            return divide(two, den);
        }
        case PhiKind::custom: {
            Series s(order);
            s[0] = 1.0;
            const auto& c = spec.custom_coeffs();
            for (std::size_t k = 1; k <= order && k <= c.size(); ++k)
                s[k] = c[k - 1];
            return s;
        }
    }
    throw error(errc::bad_spec, "unhandled phi kind");
}

PhiCoeffs phi_coeffs(const PhiSpec& spec) {
    const Series s = phi_series(spec, 4);
    PhiCoeffs b;
    double* out[] = {&b.b1, &b.b2, &b.b3, &b.b4};
    for (std::size_t k = 1; k <= 4; ++k) {
        if (std::abs(s[k].imag()) > 1e-12)
            throw error(errc::bad_spec, "phi coefficients must be real");
        *out[k - 1] = s[k].real();
    }
    if (!(b.b1 > 0.0))
        throw error(errc::bad_spec, "phi needs B1 > 0");
    return b;
}

} // namespace sakaguchi
