#pragma once

#include "lagcal/numops.hpp"
#include "lagcal/power_series.hpp"
#include "lagcal/specfun.hpp"

#include <string>
#include <vector>

namespace lagcal {

/// Separation-of-variables time factors f(t), each paired with the time
/// operator T for which T[f] = -r f holds identically:
///   Exponential   f = e^{-rt}          T = d/dt
///   Tricomi       f = C0(rt)           T = -(Laguerre derivative in t)
///   MittagLeffler f = E_a(-r t^a)      T = Caputo derivative of order a
///   HyperBesselW  f = W_{a,b,nu}(-r t^b), T = t^{a-nu} D^b (t^nu D^a .)
/// r > 0 is the usual regime; the identities above hold for any real r and
/// the residual engine accepts forced rates of either sign.
enum class ProfileKind { Exponential, Tricomi, MittagLeffler, HyperBesselW };

struct TemporalProfile {
    ProfileKind kind = ProfileKind::Tricomi;
    double r = 1.0;
    double alpha = 0.5; // MittagLeffler, HyperBesselW
    double beta = 0.5;  // HyperBesselW
    double nu = 1.0;    // HyperBesselW

    double value(double t, const SeriesEvalPolicy& policy = {}) const;
    std::vector<double> sample(const Grid1D& g, const SeriesEvalPolicy& policy = {}) const;

    /// Expansion of f in powers of t, n_terms terms.
    PhasedPowerSeries series(int n_terms) const;

    /// The paired operator T applied symbolically to a series in t.
    PhasedPowerSeries apply_time_op(const PhasedPowerSeries& s) const;

    /// The paired operator T evaluated numerically on samples over g
    /// (MittagLeffler with alpha = 1 falls back to the central first
    /// difference, matching Exponential).  Invalid nodes are NaN.
    std::vector<double> apply_time_op_fd(const std::vector<double>& f,
                                         const Grid1D& g) const;
};

enum class Family {
    BurgersClassic,    // u_t + (2u_x/u)u_x - u_xx = 0
    BurgersLaguerre,   // same with T = -(Laguerre d/dt)
    BurgersGeneralOt,  // same with a selectable profile/operator pair
    BurgersFractional, // same with T = Caputo(alpha)
    BurgersHyperBessel,// same with the three-parameter operator
    BurgersPowerN,     // nonlinearity (2u_x/u)^n u_x (or 2(u_x/u)^n u_x)
    BurgersHighOrder,  // T u + (u - (u_x^2+u_xxx)/u_xx) u_x + 2u_xx = 0
    KdVLaguerre,       // T u + (2u_xx/u)u_x - u_xxx = 0
    KdVGeneralOt,
    VarCoefBurgers,    // T u + k e^{-kx} u u_x - b(t) u_xx + r u = 0
    VarCoefGeneralOt,
};

/// How the PowerN nonlinearity is read.  Literal takes the displayed form
/// (2u_x/u)^n u_x; PaperCondition takes 2(u_x/u)^n u_x, the form consistent
/// with the stated algebraic condition r = 2k^{n+1} - k^2.  The numeric
/// dispersion oracle arbitrates between them.
enum class PowerParseMode { Literal, PaperCondition };

struct EquationSpec {
    Family family = Family::BurgersLaguerre;
    double alpha = 0.5;                       // fractional orders
    double beta = 0.5;
    double nu = 1.0;
    int power_n = 2;                          // PowerN
    PowerParseMode parse_mode = PowerParseMode::Literal;
    ProfileKind ot_profile = ProfileKind::Tricomi; // GeneralOt / HighOrder
    double coef_k = 1.0;                      // VarCoef a(x) = k e^{-kx}
    double coef_r = 1.0;                      // VarCoef rate (unconstrained)

    void validate() const;
};

/// u(x,t) = R e^{kx} f(t).
struct SolutionAnsatz {
    double amplitude = 1.0;   // R
    double wave_number = 1.0; // k, nonzero
    TemporalProfile profile;

    double value(double x, double t, const SeriesEvalPolicy& policy = {}) const;
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);
std::string profile_name(ProfileKind k);
ProfileKind profile_from_name(const std::string& name);

/// Closed-form rate: k^2 for the Burgers family (all time operators,
/// including the high-order nonlinearity), k^3 for KdV, the two PowerN
/// forms per parse mode, and the stored coef_r for the variable-coefficient
/// entries (any rate balances there).
double dispersion(const EquationSpec& eq, double k);

/// Profile the equation's time operator pairs with, at rate r.
TemporalProfile profile_for(const EquationSpec& eq, double r);

/// Ansatz with r = dispersion(eq, k).  Requires R != 0, k != 0; the
/// variable-coefficient families require R = 1 (the quadratic a u u_x term
/// scales as R^2 against the linear terms' R, so R^2 = R).
SolutionAnsatz build_solution(const EquationSpec& eq, double R, double k);

/// Root of the exact-time residual in r at a fixed probe point, using the
/// residual's affinity in r; a third trial point cross-checks affinity at
/// 1e-9.  Rejects the variable-coefficient families: their residual is
/// identically zero in r, so there is no root to find.
double solve_dispersion_numeric(const EquationSpec& eq, double k);

} // namespace lagcal
