#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace lagcal {

/// One term c * x^p.  Coefficients are complex so that fractional powers of
/// (-x) can be carried as a phase: the convention throughout is
/// (-1)^g := exp(i*pi*g) on the principal branch, which reduces to the exact
/// +/-1 when g is an integer.
struct SeriesTerm {
    std::complex<double> coeff;
    double exponent = 0.0;
};

/// Finite generalized power series sum_j c_j x^{p_j} with real exponents,
/// strictly increasing, each > -1, at most kMaxTerms terms.
/// Construction validates; all operations preserve the invariants or throw.
class PhasedPowerSeries {
public:
    static constexpr std::size_t kMaxTerms = 256;

    PhasedPowerSeries() = default;
    explicit PhasedPowerSeries(std::vector<SeriesTerm> terms);

    const std::vector<SeriesTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// First `count` terms (or all, if fewer).  Operators that shift the
    /// series lose their lowest-order image term relative to the untruncated
    /// function; comparisons should truncate the reference accordingly.
    PhasedPowerSeries truncated(std::size_t count) const;

    /// Pointwise value at x > 0.
    std::complex<double> evaluate(double x) const;

private:
    std::vector<SeriesTerm> terms_;
};

/// exp(i*pi*g): exact +1/-1 for integer g, principal-branch phase otherwise.
std::complex<double> phase_minus_one(double g);

/// Term-by-term sum; terms whose exponents agree within 1e-12 are merged,
/// merged coefficients that cancel to zero are dropped.
PhasedPowerSeries add(const PhasedPowerSeries& a, const PhasedPowerSeries& b);

PhasedPowerSeries scale(const PhasedPowerSeries& s, std::complex<double> factor);

/// Largest |c_a - c_b| over terms aligned by exponent (1e-9 alignment
/// tolerance); a term missing on one side counts with coefficient 0.
double max_term_deviation(const PhasedPowerSeries& a, const PhasedPowerSeries& b);

/// One line per term: "coeff_re coeff_im exponent", 17 significant digits.
std::string serialize_series(const PhasedPowerSeries& s);
PhasedPowerSeries parse_series(const std::string& text);

// ---- builders -----------------------------------------------------------

/// Single term c x^p.
PhasedPowerSeries monomial(std::complex<double> c, double p);

/// l_n(x) = (-x)^n / n!  as a one-term series (exact real sign).
PhasedPowerSeries lower_basis(int n);

/// Truncation of C0(lambda x) = sum (-1)^r (lambda x)^r / (r!)^2.
PhasedPowerSeries tricomi_series(double lambda, int n_terms);

/// Truncation of E_alpha(-r t^alpha) as a series in t.
PhasedPowerSeries mittag_leffler_series(double alpha, double r, int n_terms);

/// Truncation of W_{alpha,beta,nu}(scale * t^beta) as a series in t.
PhasedPowerSeries hyper_bessel_w_series(double alpha, double beta, double nu,
                                        double scale, int n_terms);

/// L_n(x, y) expanded in powers of x at fixed y.
PhasedPowerSeries laguerre_poly_series(int n, double y);

/// Fractional analogue of lower_basis: (-x)^idx / Gamma(idx - alpha + nu + 1)
/// with real idx > -1; the (-x)^idx phase follows phase_minus_one.
PhasedPowerSeries frac_lower_basis(double idx, double alpha, double nu);

/// n-th term of the W series as a basis function:
/// (prod_{i=1..n} Gamma(beta i+1-alpha)/Gamma(beta i+1))
///   * (-x)^{beta n} / Gamma(beta n - alpha + nu + 1).
PhasedPowerSeries w_term_basis(int n, double alpha, double beta, double nu);

} // namespace lagcal
