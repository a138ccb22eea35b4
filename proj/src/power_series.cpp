#include "lagcal/power_series.hpp"

#include "lagcal/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lagcal {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kExponentMergeTol = 1e-12;

void validate_terms(const std::vector<SeriesTerm>& terms) {
    if (terms.size() > PhasedPowerSeries::kMaxTerms)
        throw std::invalid_argument("PhasedPowerSeries: more than 256 terms");
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) {
        if (!std::isfinite(t.exponent) || !std::isfinite(t.coeff.real()) ||
            !std::isfinite(t.coeff.imag()))
            throw std::invalid_argument("PhasedPowerSeries: non-finite term");
        if (t.exponent <= -1.0)
            throw std::invalid_argument("PhasedPowerSeries: exponent must be > -1");
        if (!(t.exponent > prev))
            throw std::invalid_argument("PhasedPowerSeries: exponents must be strictly increasing");
        prev = t.exponent;
    }
}

} // namespace

PhasedPowerSeries::PhasedPowerSeries(std::vector<SeriesTerm> terms)
    : terms_(std::move(terms)) {
    validate_terms(terms_);
}

PhasedPowerSeries PhasedPowerSeries::truncated(std::size_t count) const {
    if (count >= terms_.size()) return *this;
    return PhasedPowerSeries(std::vector<SeriesTerm>(terms_.begin(), terms_.begin() + count));
}

std::complex<double> PhasedPowerSeries::evaluate(double x) const {
    if (!(x > 0.0))
        throw std::domain_error("PhasedPowerSeries::evaluate: requires x > 0");
    std::complex<double> sum = 0.0;
    for (const auto& t : terms_) sum += t.coeff * std::pow(x, t.exponent);
    return sum;
}

std::complex<double> phase_minus_one(double g) {
    const double r = std::round(g);
    if (std::abs(g - r) < 1e-12) {
        const long long n = static_cast<long long>(r);
        return (n % 2 == 0) ? std::complex<double>(1.0, 0.0)
                            : std::complex<double>(-1.0, 0.0);
    }
    return std::polar(1.0, kPi * g);
}

PhasedPowerSeries add(const PhasedPowerSeries& a, const PhasedPowerSeries& b) {
    std::vector<SeriesTerm> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() || j < tb.size()) {
        if (j >= tb.size() || (i < ta.size() && ta[i].exponent < tb[j].exponent - kExponentMergeTol)) {
            out.push_back(ta[i++]);
        } else if (i >= ta.size() || tb[j].exponent < ta[i].exponent - kExponentMergeTol) {
            out.push_back(tb[j++]);
        } else {
            SeriesTerm merged{ta[i].coeff + tb[j].coeff, ta[i].exponent};
            ++i;
            ++j;
            if (merged.coeff != std::complex<double>(0.0, 0.0)) out.push_back(merged);
        }
    }
    return PhasedPowerSeries(std::move(out));
}

PhasedPowerSeries scale(const PhasedPowerSeries& s, std::complex<double> factor) {
    std::vector<SeriesTerm> out = s.terms();
    for (auto& t : out) t.coeff *= factor;
    return PhasedPowerSeries(std::move(out));
}

double max_term_deviation(const PhasedPowerSeries& a, const PhasedPowerSeries& b) {
    constexpr double align = 1e-9;
    double worst = 0.0;
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() || j < tb.size()) {
        if (j >= tb.size() || (i < ta.size() && ta[i].exponent < tb[j].exponent - align)) {
            worst = std::max(worst, std::abs(ta[i++].coeff));
        } else if (i >= ta.size() || tb[j].exponent < ta[i].exponent - align) {
            worst = std::max(worst, std::abs(tb[j++].coeff));
        } else {
            worst = std::max(worst, std::abs(ta[i].coeff - tb[j].coeff));
            ++i;
            ++j;
        }
    }
    return worst;
}

std::string serialize_series(const PhasedPowerSeries& s) {
    std::string out;
    char line[128];
    for (const auto& t : s.terms()) {
        std::snprintf(line, sizeof(line), "%.17g %.17g %.17g\n",
                      t.coeff.real(), t.coeff.imag(), t.exponent);
        out += line;
    }
    return out;
}

PhasedPowerSeries parse_series(const std::string& text) {
    std::vector<SeriesTerm> terms;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        double re = 0.0, im = 0.0, p = 0.0;
        if (!(ls >> re >> im >> p))
            throw std::invalid_argument("parse_series: malformed line: " + line);
        terms.push_back({{re, im}, p});
    }
    return PhasedPowerSeries(std::move(terms));
}

PhasedPowerSeries monomial(std::complex<double> c, double p) {
    return PhasedPowerSeries({SeriesTerm{c, p}});
}

PhasedPowerSeries lower_basis(int n) {
    if (n < 0 || n > 170)
        throw std::domain_error("lower_basis: requires 0 <= n <= 170");
    const double mag = (n <= 20) ? 1.0 / std::tgamma(n + 1.0)
                                 : std::exp(-std::lgamma(n + 1.0));
    const double sign = (n & 1) ? -1.0 : 1.0;
    return monomial(sign * mag, static_cast<double>(n));
}

PhasedPowerSeries tricomi_series(double lambda, int n_terms) {
    if (n_terms < 1 || n_terms > static_cast<int>(PhasedPowerSeries::kMaxTerms))
        throw std::invalid_argument("tricomi_series: bad term count");
    std::vector<SeriesTerm> terms;
    terms.reserve(n_terms);
    double c = 1.0;
    for (int r = 0; r < n_terms; ++r) {
        if (r > 0) c *= -lambda / (static_cast<double>(r) * r);
        terms.push_back({c, static_cast<double>(r)});
    }
    return PhasedPowerSeries(std::move(terms));
}

PhasedPowerSeries mittag_leffler_series(double alpha, double r, int n_terms) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error("mittag_leffler_series: requires 0 < alpha <= 1");
    if (n_terms < 1 || n_terms > static_cast<int>(PhasedPowerSeries::kMaxTerms))
        throw std::invalid_argument("mittag_leffler_series: bad term count");
    std::vector<SeriesTerm> terms;
    terms.reserve(n_terms);
    for (int k = 0; k < n_terms; ++k) {
        const double mag = std::exp(k * std::log(std::abs(r) > 0 ? std::abs(r) : 1.0)
                                    - std::lgamma(alpha * k + 1.0));
        double c = (k == 0) ? 1.0 : mag;
        if (k > 0) {
            if (r == 0.0) c = 0.0;
            double sign = (k & 1) ? -1.0 : 1.0; // from (-r)^k with r > 0
            if (r < 0.0 && (k & 1)) sign = -sign;
            c *= sign;
        }
        if (c != 0.0 || k == 0) terms.push_back({c, alpha * k});
    }
    return PhasedPowerSeries(std::move(terms));
}

PhasedPowerSeries hyper_bessel_w_series(double alpha, double beta, double nu,
                                        double scale_s, int n_terms) {
    if (!(alpha > 0.0) || alpha > 1.0 || !(beta > 0.0) || beta > 1.0)
        throw std::domain_error("hyper_bessel_w_series: requires alpha, beta in (0, 1]");
    if (!(nu > 0.0))
        throw std::domain_error("hyper_bessel_w_series: requires nu > 0");
    if (n_terms < 1 || n_terms > static_cast<int>(PhasedPowerSeries::kMaxTerms))
        throw std::invalid_argument("hyper_bessel_w_series: bad term count");
    std::vector<SeriesTerm> terms;
    terms.reserve(n_terms);
    double prod = 1.0;
    double spow = 1.0;
    for (int k = 0; k < n_terms; ++k) {
        if (k > 0) {
            prod *= gamma(beta * k + 1.0 - alpha) / gamma(beta * k + 1.0);
            spow *= scale_s;
        }
        const double c = prod * spow / gamma(beta * k + 1.0 - alpha + nu);
        if (c != 0.0 || k == 0) terms.push_back({c, beta * k});
    }
    return PhasedPowerSeries(std::move(terms));
}

PhasedPowerSeries laguerre_poly_series(int n, double y) {
    if (n < 0 || n > 170)
        throw std::domain_error("laguerre_poly_series: requires 0 <= n <= 170");
    std::vector<SeriesTerm> terms;
    terms.reserve(n + 1);
    for (int r = 0; r <= n; ++r) {
        if (y == 0.0 && r < n) continue;
        double mag_log = std::lgamma(n + 1.0) - 2.0 * std::lgamma(r + 1.0)
                         - std::lgamma(n - r + 1.0);
        if (n - r > 0) mag_log += (n - r) * std::log(std::abs(y));
        double sign = (r & 1) ? -1.0 : 1.0;
        if (y < 0.0 && ((n - r) & 1)) sign = -sign;
        terms.push_back({sign * std::exp(mag_log), static_cast<double>(r)});
    }
    return PhasedPowerSeries(std::move(terms));
}

PhasedPowerSeries frac_lower_basis(double idx, double alpha, double nu) {
    if (!(idx > -1.0))
        throw std::domain_error("frac_lower_basis: requires idx > -1");
    const std::complex<double> c = phase_minus_one(idx) / gamma(idx - alpha + nu + 1.0);
    return monomial(c, idx);
}

PhasedPowerSeries w_term_basis(int n, double alpha, double beta, double nu) {
    if (n < 0)
        throw std::domain_error("w_term_basis: requires n >= 0");
    double prod = 1.0;
    for (int i = 1; i <= n; ++i)
        prod *= gamma(beta * i + 1.0 - alpha) / gamma(beta * i + 1.0);
    const std::complex<double> c =
        prod * phase_minus_one(beta * n) / gamma(beta * n - alpha + nu + 1.0);
    return monomial(c, beta * n);
}

} // namespace lagcal
