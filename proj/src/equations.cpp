#include "lagcal/equations.hpp"

#include "lagcal/series_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace lagcal {

double TemporalProfile::value(double t, const SeriesEvalPolicy& policy) const {
    if (!(t >= 0.0))
        throw std::domain_error("TemporalProfile::value: requires t >= 0");
    switch (kind) {
    case ProfileKind::Exponential:
        return std::exp(-r * t);
    case ProfileKind::Tricomi:
        return tricomi_c0(r * t, policy);
    case ProfileKind::MittagLeffler:
        return mittag_leffler(alpha, -r * std::pow(t, alpha), policy);
    case ProfileKind::HyperBesselW:
        return hyper_bessel_w(alpha, beta, nu, -r * std::pow(t, beta), policy);
    }
    throw std::logic_error("TemporalProfile::value: unknown kind");
}

std::vector<double> TemporalProfile::sample(const Grid1D& g,
                                            const SeriesEvalPolicy& policy) const {
    std::vector<double> out(g.count);
    for (int j = 0; j < g.count; ++j) out[j] = value(g.node(j), policy);
    return out;
}

PhasedPowerSeries TemporalProfile::series(int n_terms) const {
    switch (kind) {
    case ProfileKind::Exponential:
        return mittag_leffler_series(1.0, r, n_terms);
    case ProfileKind::Tricomi:
        return tricomi_series(r, n_terms);
    case ProfileKind::MittagLeffler:
        return mittag_leffler_series(alpha, r, n_terms);
    case ProfileKind::HyperBesselW:
        return hyper_bessel_w_series(alpha, beta, nu, -r, n_terms);
    }
    throw std::logic_error("TemporalProfile::series: unknown kind");
}

PhasedPowerSeries TemporalProfile::apply_time_op(const PhasedPowerSeries& s) const {
    switch (kind) {
    case ProfileKind::Exponential:
        return differentiate(s);
    case ProfileKind::Tricomi:
        return scale(laguerre_derivative(s), -1.0);
    case ProfileKind::MittagLeffler:
        return caputo(s, alpha);
    case ProfileKind::HyperBesselW:
        return hyper_bessel_op(s, alpha, beta, nu);
    }
    throw std::logic_error("TemporalProfile::apply_time_op: unknown kind");
}

std::vector<double> TemporalProfile::apply_time_op_fd(const std::vector<double>& f,
                                                      const Grid1D& g) const {
    switch (kind) {
    case ProfileKind::Exponential:
        return fd_derivative(f, g.spacing(), 1);
    case ProfileKind::MittagLeffler:
        if (alpha ==  1.0) return fd_derivative(f, g.spacing(), 1);
        return caputo_l1(f, g, alpha);
    case ProfileKind::Tricomi: {
        std::vector<double> out = laguerre_time_fd(f, g);
        for (double& v : out) v = -v;
        return out;
    }
    case ProfileKind::HyperBesselW:
        return hyper_bessel_fd(f, g, alpha, beta, nu);
    }
    throw std::logic_error("TemporalProfile::apply_time_op_fd: unknown kind");
}

void EquationSpec::validate() const {
    switch (family) {
    case Family::BurgersFractional:
        if (!(alpha > 0.0) || alpha > 1.0)
            throw std::invalid_argument("EquationSpec: fractional order must be in (0, 1]");
        break;
    case Family::BurgersHyperBessel:
        if (!(alpha > 0.0) || alpha > 1.0 || !(beta > 0.0) || beta > 1.0)
            throw std::invalid_argument("EquationSpec: orders must be in (0, 1]");
        if (!(nu > 0.0))
            throw std::invalid_argument("EquationSpec: requires nu > 0");
        break;
    case Family::BurgersPowerN:
        if (power_n < 2)
            throw std::invalid_argument("EquationSpec: requires n >= 2");
        break;
    case Family::VarCoefBurgers:
    case Family::VarCoefGeneralOt:
        if (coef_k == 0.0 || !std::isfinite(coef_k))
            throw std::invalid_argument("EquationSpec: coefficient k must be finite and nonzero");
        if (!std::isfinite(coef_r))
            throw std::invalid_argument("EquationSpec: coefficient r must be finite");
        break;
    default:
        break;
    }
    if (family == Family::BurgersGeneralOt || family == Family::KdVGeneralOt ||
        family == Family::BurgersHighOrder || family == Family::VarCoefGeneralOt) {
        if (ot_profile == ProfileKind::MittagLeffler && (!(alpha > 0.0) || alpha > 1.0))
            throw std::invalid_argument("EquationSpec: fractional order must be in (0, 1]");
        if (ot_profile == ProfileKind::HyperBesselW &&
            (!(alpha > 0.0) || alpha > 1.0 || !(beta > 0.0) || beta > 1.0 || !(nu > 0.0)))
            throw std::invalid_argument("EquationSpec: operator parameters out of range");
    }
}

double SolutionAnsatz::value(double x, double t, const SeriesEvalPolicy& policy) const {
    return amplitude * std::exp(wave_number * x) * profile.value(t, policy);
}

std::string family_name(Family f) {
    switch (f) {
    case Family::BurgersClassic:     return "burgers-classic";
    case Family::BurgersLaguerre:    return "burgers-laguerre";
    case Family::BurgersGeneralOt:   return "burgers-general-ot";
    case Family::BurgersFractional:  return "burgers-fractional";
    case Family::BurgersHyperBessel: return "burgers-hyper-bessel";
    case Family::BurgersPowerN:      return "burgers-power-n";
    case Family::BurgersHighOrder:   return "burgers-high-order";
    case Family::KdVLaguerre:        return "kdv-laguerre";
    case Family::KdVGeneralOt:       return "kdv-general-ot";
    case Family::VarCoefBurgers:     return "varcoef-burgers";
    case Family::VarCoefGeneralOt:   return "varcoef-general-ot";
    }
    throw std::logic_error("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::BurgersClassic, Family::BurgersLaguerre,
                     Family::BurgersGeneralOt, Family::BurgersFractional,
                     Family::BurgersHyperBessel, Family::BurgersPowerN,
                     Family::BurgersHighOrder, Family::KdVLaguerre,
                     Family::KdVGeneralOt, Family::VarCoefBurgers,
                     Family::VarCoefGeneralOt}) {
        if (family_name(f) == name) return f;
    }
    throw std::invalid_argument("unknown equation: " + name);
}

std::string profile_name(ProfileKind k) {
    switch (k) {
    case ProfileKind::Exponential:   return "exponential";
    case ProfileKind::Tricomi:       return "tricomi";
    case ProfileKind::MittagLeffler: return "mlf";
    case ProfileKind::HyperBesselW:  return "hbw";
    }
    throw std::logic_error("profile_name: unknown kind");
}

ProfileKind profile_from_name(const std::string& name) {
    for (ProfileKind k : {ProfileKind::Exponential, ProfileKind::Tricomi,
                          ProfileKind::MittagLeffler, ProfileKind::HyperBesselW}) {
        if (profile_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown profile: " + name);
}

double dispersion(const EquationSpec& eq, double k) {
    eq.validate();
    if (k == 0.0 || !std::isfinite(k))
        throw std::invalid_argument("dispersion: requires k != 0");
    switch (eq.family) {
    case Family::BurgersClassic:
    case Family::BurgersLaguerre:
    case Family::BurgersGeneralOt:
    case Family::BurgersFractional:
    case Family::BurgersHyperBessel:
    case Family::BurgersHighOrder:
        return k * k;
    case Family::KdVLaguerre:
    case Family::KdVGeneralOt:
        return k * k * k;
    case Family::BurgersPowerN: {
        const double lead = (eq.parse_mode == PowerParseMode::Literal)
                                ? std::pow(2.0, eq.power_n) * std::pow(k, eq.power_n + 1)
                                : 2.0 * std::pow(k, eq.power_n + 1);
        return lead - k * k;
    }
    case Family::VarCoefBurgers:
    case Family::VarCoefGeneralOt:
        return eq.coef_r;
    }
    throw std::logic_error("dispersion: unknown family");
}

TemporalProfile profile_for(const EquationSpec& eq, double r) {
    TemporalProfile p;
    p.r = r;
    switch (eq.family) {
    case Family::BurgersClassic:
        p.kind = ProfileKind::Exponential;
        break;
    case Family::BurgersLaguerre:
    case Family::BurgersPowerN:
    case Family::KdVLaguerre:
    case Family::VarCoefBurgers:
        p.kind = ProfileKind::Tricomi;
        break;
    case Family::BurgersFractional:
        p.kind = ProfileKind::MittagLeffler;
        p.alpha = eq.alpha;
        break;
    case Family::BurgersHyperBessel:
        p.kind = ProfileKind::HyperBesselW;
        p.alpha = eq.alpha;
        p.beta = eq.beta;
        p.nu = eq.nu;
        break;
    case Family::BurgersGeneralOt:
    case Family::BurgersHighOrder:
    case Family::KdVGeneralOt:
    case Family::VarCoefGeneralOt:
        p.kind = eq.ot_profile;
        p.alpha = eq.alpha;
        p.beta = eq.beta;
        p.nu = eq.nu;
        break;
    }
    return p;
}

SolutionAnsatz build_solution(const EquationSpec& eq, double R, double k) {
    eq.validate();
    if (R == 0.0 || !std::isfinite(R))
        throw std::invalid_argument("build_solution: requires R != 0");
    if (k == 0.0 || !std::isfinite(k))
        throw std::invalid_argument("build_solution: requires k != 0");
    if ((eq.family == Family::VarCoefBurgers || eq.family == Family::VarCoefGeneralOt) &&
        R != 1.0)
        throw std::invalid_argument(
            "build_solution: variable-coefficient families require R = 1 "
            "(a u u_x scales as R^2 against the linear terms)");
    SolutionAnsatz ansatz;
    ansatz.amplitude = R;
    ansatz.wave_number = k;
    ansatz.profile = profile_for(eq, dispersion(eq, k));
    return ansatz;
}

} // namespace lagcal
