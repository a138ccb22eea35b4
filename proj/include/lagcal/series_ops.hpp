#pragma once

#include "lagcal/power_series.hpp"

namespace lagcal {

/// Term-wise operator algebra on PhasedPowerSeries.
///
/// Every operator here acts exactly on each term and therefore commutes with
/// truncation up to the lost boundary term: applying a lowering operator to
/// an N-term truncation reproduces the first N-1 terms of the image of the
/// full function.  Comparisons must truncate the reference series to match.

/// d/dx: (c, p) -> (c p, p - 1); terms with p = 0 are dropped.
/// Throws if an image exponent would be <= -1.
PhasedPowerSeries differentiate(const PhasedPowerSeries& s);

/// x^g *: (c, p) -> (c, p + g).  g may be negative as long as the image
/// exponents stay > -1.
PhasedPowerSeries multiply_by_power(const PhasedPowerSeries& s, double g);

/// Fractional derivative of order a in (0, 1], power rule
/// (c, p) -> (c Gamma(p+1)/Gamma(p-a+1), p - a); constants (p = 0) are
/// annihilated.  Exponents in (-1, 0) are rejected: the power rule does not
/// extend there.  a = 1 coincides with differentiate().
PhasedPowerSeries caputo(const PhasedPowerSeries& s, double a);

/// -d/dx x d/dx: (c, p) -> (-c p^2, p - 1); constants annihilated.
PhasedPowerSeries laguerre_derivative(const PhasedPowerSeries& s);

/// m-fold laguerre_derivative, 1 <= m <= 16.
PhasedPowerSeries laguerre_power(const PhasedPowerSeries& s, int m);

/// (-1)^m d^m/dx^m x^m d^m/dx^m evaluated literally, term by term.
/// Equals laguerre_power for every series; kept as an independent route so
/// the equality stays checkable.
PhasedPowerSeries laguerre_power_direct(const PhasedPowerSeries& s, int m);

/// x^{a-nu} d^b/dx^b (x^nu d^a/dx^a .) with a, b in (0, 1], nu > 0.
PhasedPowerSeries hyper_bessel_op(const PhasedPowerSeries& s, double a, double b, double nu);

/// (-1)^b x^{a-nu} d^b/dx^b (x^nu d^a/dx^a .), phase convention
/// (-1)^b = exp(i pi b).  Degenerates to laguerre_derivative at a = b = nu = 1.
PhasedPowerSeries frac_laguerre_op(const PhasedPowerSeries& s, double a, double b, double nu);

/// exp(y * L) applied to l_n(x) where L is the Laguerre derivative; the sum
/// terminates after n + 1 terms because L lowers degree by one.  Requires
/// 0 <= n <= 30.  Equals the expansion of the degree-n two-variable
/// Laguerre polynomial in x at fixed y.
PhasedPowerSeries exp_laguerre(int n, double y);

/// Symbolic handle for the operators above, for callers that select them at
/// runtime (identity suite, serialization tools).
struct OperatorDescriptor {
    enum class Kind {
        Differentiate,
        MultiplyByPower,
        Caputo,
        LaguerreDerivative,
        LaguerrePower,
        HyperBessel,
        FracLaguerre,
    };
    Kind kind = Kind::Differentiate;
    double g = 0.0;          // MultiplyByPower
    double a = 1.0;          // Caputo / HyperBessel / FracLaguerre
    double b = 1.0;          // HyperBessel / FracLaguerre
    double nu = 1.0;         // HyperBessel / FracLaguerre
    int m = 1;               // LaguerrePower
};

PhasedPowerSeries apply(const OperatorDescriptor& op, const PhasedPowerSeries& s);

} // namespace lagcal
