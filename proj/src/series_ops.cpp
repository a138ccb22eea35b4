#include "lagcal/series_ops.hpp"

#include "lagcal/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace lagcal {

namespace {

bool is_zero_exponent(double p) { return std::abs(p) < 1e-12; }

// Gamma(a)/Gamma(b) for a, b > 0, stable for large arguments.
double gamma_ratio(double a, double b) {
    if (a <= 0.0 || b <= 0.0)
        throw std::domain_error("gamma_ratio: requires positive arguments");
    if (a < 50.0 && b < 50.0) return gamma(a) / gamma(b);
    return std::exp(std::lgamma(a) - std::lgamma(b));
}

void check_frac_order(double a, const char* who) {
    if (!(a > 0.0) || a > 1.0)
        throw std::domain_error(std::string(who) + ": order must be in (0, 1]");
}

} // namespace

PhasedPowerSeries differentiate(const PhasedPowerSeries& s) {
    std::vector<SeriesTerm> out;
    out.reserve(s.size());
    for (const auto& t : s.terms()) {
        if (is_zero_exponent(t.exponent)) continue;
        const double p = t.exponent - 1.0;
        if (p <= -1.0)
            throw std::domain_error("differentiate: image exponent would fall to or below -1");
        out.push_back({t.coeff * t.exponent, p});
    }
    return PhasedPowerSeries(std::move(out));
}

PhasedPowerSeries multiply_by_power(const PhasedPowerSeries& s, double g) {
    if (!std::isfinite(g))
        throw std::invalid_argument("multiply_by_power: non-finite shift");
    std::vector<SeriesTerm> out;
    out.reserve(s.size());
    for (const auto& t : s.terms()) {
        const double p = t.exponent + g;
        if (p <= -1.0)
            throw std::domain_error("multiply_by_power: image exponent would fall to or below -1");
        out.push_back({t.coeff, p});
    }
    return PhasedPowerSeries(std::move(out));
}

PhasedPowerSeries caputo(const PhasedPowerSeries& s, double a) {
    check_frac_order(a, "caputo");
    std::vector<SeriesTerm> out;
    out.reserve(s.size());
    for (const auto& t : s.terms()) {
        if (is_zero_exponent(t.exponent)) continue;
        if (t.exponent < 0.0)
            throw std::domain_error("caputo: power rule undefined for exponents in (-1, 0)");
        out.push_back({t.coeff * gamma_ratio(t.exponent + 1.0, t.exponent - a + 1.0),
                       t.exponent - a});
    }
    return PhasedPowerSeries(std::move(out));
}

PhasedPowerSeries laguerre_derivative(const PhasedPowerSeries& s) {
    std::vector<SeriesTerm> out;
    out.reserve(s.size());
    for (const auto& t : s.terms()) {
        if (is_zero_exponent(t.exponent)) continue;
        const double p = t.exponent - 1.0;
        if (p <= -1.0)
            throw std::domain_error("laguerre_derivative: image exponent would fall to or below -1");
        out.push_back({-t.coeff * t.exponent * t.exponent, p});
    }
    return PhasedPowerSeries(std::move(out));
}

PhasedPowerSeries laguerre_power(const PhasedPowerSeries& s, int m) {
    if (m < 1 || m > 16)
        throw std::domain_error("laguerre_power: requires 1 <= m <= 16");
    PhasedPowerSeries out = s;
    for (int i = 0; i < m; ++i) out = laguerre_derivative(out);
    return out;
}

PhasedPowerSeries laguerre_power_direct(const PhasedPowerSeries& s, int m) {
    if (m < 1 || m > 16)
        throw std::domain_error("laguerre_power_direct: requires 1 <= m <= 16");
    PhasedPowerSeries out = s;
    for (int i = 0; i < m; ++i) out = differentiate(out);
    out = multiply_by_power(out, static_cast<double>(m));
    for (int i = 0; i < m; ++i) out = differentiate(out);
    if (m & 1) out = scale(out, -1.0);
    return out;
}

PhasedPowerSeries hyper_bessel_op(const PhasedPowerSeries& s, double a, double b, double nu) {
    check_frac_order(a, "hyper_bessel_op");
    check_frac_order(b, "hyper_bessel_op");
    if (!(nu > 0.0))
        throw std::domain_error("hyper_bessel_op: requires nu > 0");
    PhasedPowerSeries out = caputo(s, a);
    out = multiply_by_power(out, nu);
    out = caputo(out, b);
    return multiply_by_power(out, a - nu);
}

PhasedPowerSeries frac_laguerre_op(const PhasedPowerSeries& s, double a, double b, double nu) {
    return scale(hyper_bessel_op(s, a, b, nu), phase_minus_one(b));
}

PhasedPowerSeries exp_laguerre(int n, double y) {
    if (n < 0 || n > 30)
        throw std::domain_error("exp_laguerre: requires 0 <= n <= 30");
    PhasedPowerSeries sum = lower_basis(n);
    PhasedPowerSeries image = sum;
    double ym = 1.0;
    for (int m = 1; m <= n; ++m) {
        image = laguerre_derivative(image);
        ym *= y / m;
        sum = add(sum, scale(image, ym));
    }
    return sum;
}

PhasedPowerSeries apply(const OperatorDescriptor& op, const PhasedPowerSeries& s) {
    using Kind = OperatorDescriptor::Kind;
    switch (op.kind) {
    case Kind::Differentiate:      return differentiate(s);
    case Kind::MultiplyByPower:    return multiply_by_power(s, op.g);
    case Kind::Caputo:             return caputo(s, op.a);
    case Kind::LaguerreDerivative: return laguerre_derivative(s);
    case Kind::LaguerrePower:      return laguerre_power(s, op.m);
    case Kind::HyperBessel:        return hyper_bessel_op(s, op.a, op.b, op.nu);
    case Kind::FracLaguerre:       return frac_laguerre_op(s, op.a, op.b, op.nu);
    }
    throw std::logic_error("apply: unknown operator kind");
}

} // namespace lagcal
