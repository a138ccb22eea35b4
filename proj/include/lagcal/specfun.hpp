#pragma once

#include <cstddef>

namespace lagcal {

/// Truncation control shared by all series evaluators.
///
/// Summation stops after max_terms terms or as soon as the next term is
/// smaller than rel_stop times the current partial sum.  Arguments larger
/// in magnitude than arg_bound are rejected up front: these series are
/// alternating with slowly shrinking terms there and a double-precision
/// partial sum would lose all significance.
struct SeriesEvalPolicy {
    int max_terms = 64;
    double rel_stop = 1e-16;
    double arg_bound = 30.0;

    /// Throws std::invalid_argument unless
    /// max_terms >= 8, 0 < rel_stop < 1e-6, arg_bound > 0.
    void validate() const;
};

/// Gamma function on the real line (Lanczos approximation, reflection for
/// z < 0.5).  Relative error is below 1e-12 on [0.5, 50].  Throws
/// std::domain_error at poles (z = 0, -1, -2, ...).
double gamma(double z);

/// log|Gamma(z)| for z > 0.  Thin wrapper kept next to gamma() so callers
/// needing ratios of large gammas have one place to look.
double log_gamma(double z);

/// C0(x) = sum_{r>=0} (-1)^r x^r / (r!)^2, the 0th-order Tricomi function;
/// equals J0(2*sqrt(x)) for x >= 0.  Requires |x| <= policy.arg_bound.
double tricomi_c0(double x, const SeriesEvalPolicy& policy = {});

/// Mittag-Leffler E_alpha(z) = sum_{k>=0} z^k / Gamma(alpha*k + 1) for
/// 0 < alpha <= 1, |z| <= policy.arg_bound.  Alternating parts are summed
/// with compensation; the policy bounds truncation.
double mittag_leffler(double alpha, double z, const SeriesEvalPolicy& policy = {});

/// W_{alpha,beta,nu}(s) = sum_{k>=0} c_k s^k / Gamma(beta*k + 1 - alpha + nu)
/// with c_k = prod_{i=1..k} Gamma(beta*i + 1 - alpha) / Gamma(beta*i + 1),
/// c_0 = 1.  This is the series in the argument s; time-dependent callers
/// substitute s = +/- t^beta themselves.  Requires alpha, beta in (0, 1],
/// nu > 0, |s| <= policy.arg_bound.  W_{1,1,1}(s) = C0(-s).
double hyper_bessel_w(double alpha, double beta, double nu, double s,
                      const SeriesEvalPolicy& policy = {});

/// Two-variable Laguerre polynomial
/// L_n(x, y) = n! sum_{r=0..n} (-1)^r x^r y^{n-r} / ((r!)^2 (n-r)!).
/// Exact factorial arithmetic for n <= 20, log-gamma form beyond; n <= 170.
double laguerre_poly(int n, double x, double y);

/// l_n(x) = (-x)^n / n!, the basis the Laguerre derivative lowers.
double lower_l(int n, double x);

} // namespace lagcal
