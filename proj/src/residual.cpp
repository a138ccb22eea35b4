#include "lagcal/residual.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lagcal {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kZeroMaskRel = 1e-6;

bool needs_third_derivative(Family f) {
    return f == Family::KdVLaguerre || f == Family::KdVGeneralOt ||
           f == Family::BurgersHighOrder;
}

bool is_var_coef(Family f) {
    return f == Family::VarCoefBurgers || f == Family::VarCoefGeneralOt;
}

double int_pow(double base, int n) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= base;
    return p;
}

struct NodeVals {
    double u = kNaN;
    double ux = kNaN;
    double uxx = kNaN;
    double uxxx = kNaN;
    double tt = kNaN; // time-operator term T[u]
    double x = 0.0;
    double b_t = 0.0; // VarCoef b(t)
};

struct NodeResult {
    double res = kNaN;
    double max_term = 0.0;
    bool finite = false;
    bool masked = false;
};

// Pointwise LHS assembly.  u_floor/uxx_floor are the division-mask
// thresholds (1e-6 times the grid max of the respective divisor).
NodeResult combine_terms(const EquationSpec& eq, const NodeVals& v,
                         double u_floor, double uxx_floor) {
    NodeResult out;
    const bool third = needs_third_derivative(eq.family);
    if (std::isnan(v.u) || std::isnan(v.ux) || std::isnan(v.uxx) ||
        std::isnan(v.tt) || (third && std::isnan(v.uxxx)))
        return out;
    out.finite = true;

    auto finish = [&out](double res, double a, double b, double c) {
        out.res = res;
        out.max_term = std::max(std::abs(a), std::max(std::abs(b), std::abs(c)));
    };

    switch (eq.family) {
    case Family::BurgersClassic:
    case Family::BurgersLaguerre:
    case Family::BurgersGeneralOt:
    case Family::BurgersFractional:
    case Family::BurgersHyperBessel: {
        if (std::abs(v.u) < u_floor) { out.masked = true; return out; }
        const double nl = 2.0 * v.ux * v.ux / v.u;
        finish(v.tt + nl - v.uxx, v.tt, nl, v.uxx);
        return out;
    }
    case Family::BurgersPowerN: {
        if (std::abs(v.u) < u_floor) { out.masked = true; return out; }
        const double ratio = v.ux / v.u;
        const double nl = (eq.parse_mode == PowerParseMode::Literal)
                              ? int_pow(2.0 * ratio, eq.power_n) * v.ux
                              : 2.0 * int_pow(ratio, eq.power_n) * v.ux;
        finish(v.tt + nl - v.uxx, v.tt, nl, v.uxx);
        return out;
    }
    case Family::BurgersHighOrder: {
        if (std::abs(v.uxx) < uxx_floor) { out.masked = true; return out; }
        const double nl = (v.u - (v.ux * v.ux + v.uxxx) / v.uxx) * v.ux;
        finish(v.tt + nl + 2.0 * v.uxx, v.tt, nl, 2.0 * v.uxx);
        return out;
    }
    case Family::KdVLaguerre:
    case Family::KdVGeneralOt: {
        if (std::abs(v.u) < u_floor) { out.masked = true; return out; }
        const double nl = (2.0 * v.uxx / v.u) * v.ux;
        finish(v.tt + nl - v.uxxx, v.tt, nl, v.uxxx);
        return out;
    }
    case Family::VarCoefBurgers:
    case Family::VarCoefGeneralOt: {
        const double a = eq.coef_k * std::exp(-eq.coef_k * v.x);
        const double quad = a * v.u * v.ux;
        const double diff = v.b_t * v.uxx;
        const double lin = eq.coef_r * v.u;
        out.res = v.tt + quad - diff + lin;
        out.max_term = std::max(std::max(std::abs(v.tt), std::abs(quad)),
                                std::max(std::abs(diff), std::abs(lin)));
        return out;
    }
    }
    throw std::logic_error("combine_terms: unknown family");
}

struct FieldSet {
    std::vector<double> u, ux, uxx, uxxx, tt;
    int nx = 0, nt = 0;
};

ResidualField assemble(const EquationSpec& eq, const FieldSet& f,
                       const Grid1D& gx, const Grid1D& gt,
                       const std::vector<double>& b_of_t) {
    const int nx = f.nx, nt = f.nt;
    const std::size_t total = static_cast<std::size_t>(nx) * nt;
    const bool third = needs_third_derivative(eq.family);

    double u_max = 0.0, uxx_max = 0.0;
    for (std::size_t s = 0; s < total; ++s) {
        if (std::isfinite(f.u[s])) u_max = std::max(u_max, std::abs(f.u[s]));
        if (std::isfinite(f.uxx[s])) uxx_max = std::max(uxx_max, std::abs(f.uxx[s]));
    }
    const double u_floor = kZeroMaskRel * u_max;
    const double uxx_floor = kZeroMaskRel * uxx_max;

    ResidualField out;
    out.grid_x = gx;
    out.grid_t = gt;
    out.values.assign(total, kNaN);

    std::size_t excluded = 0;
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < nt; ++j) {
            const std::size_t s = static_cast<std::size_t>(i) * nt + j;
            NodeVals v;
            v.u = f.u[s];
            v.ux = f.ux[s];
            v.uxx = f.uxx[s];
            v.uxxx = third ? f.uxxx[s] : 0.0;
            v.tt = f.tt[s];
            v.x = gx.node(i);
            v.b_t = b_of_t.empty() ? 0.0 : b_of_t[j];
            const NodeResult r = combine_terms(eq, v, u_floor, uxx_floor);
            if (!r.finite || r.masked) {
                ++excluded;
                continue;
            }
            out.values[s] = r.res;
            out.scale = std::max(out.scale, r.max_term);
        }
    }
    out.masked_fraction = static_cast<double>(excluded) / static_cast<double>(total);
    if (out.masked_fraction > 0.5)
        throw std::runtime_error("residual: more than half of the grid nodes are "
                                 "masked or lack stencil support");
    return out;
}

std::vector<double> sample_b_of_t(const EquationSpec& eq, const Grid1D& gt,
                                  const SeriesEvalPolicy& policy) {
    if (!is_var_coef(eq.family)) return {};
    return profile_for(eq, eq.coef_r).sample(gt, policy);
}

FieldSet fd_fields(const EquationSpec& eq, const SampledField& u,
                   const TemporalProfile& profile) {
    const Grid1D& gx = u.grid_x;
    const Grid1D& gt = u.grid_t;
    const bool third = needs_third_derivative(eq.family);
    if (third && gx.count < 7)
        throw std::invalid_argument("residual: third derivative needs >= 7 spatial nodes");

    FieldSet f;
    f.nx = gx.count;
    f.nt = gt.count;
    const std::size_t total = static_cast<std::size_t>(f.nx) * f.nt;
    f.u = u.values;
    f.ux.assign(total, kNaN);
    f.uxx.assign(total, kNaN);
    if (third) f.uxxx.assign(total, kNaN);
    f.tt.assign(total, kNaN);

    // spatial sweeps, one x-slice per time node
    std::vector<double> slice(f.nx);
    const double hx = gx.spacing();
    for (int j = 0; j < f.nt; ++j) {
        for (int i = 0; i < f.nx; ++i) slice[i] = u.at(i, j);
        const std::vector<double> d1 = fd_derivative(slice, hx, 1);
        const std::vector<double> d2 = fd_derivative(slice, hx, 2);
        std::vector<double> d3;
        if (third) d3 = fd_derivative(slice, hx, 3);
        for (int i = 0; i < f.nx; ++i) {
            const std::size_t s = static_cast<std::size_t>(i) * f.nt + j;
            f.ux[s] = d1[i];
            f.uxx[s] = d2[i];
            if (third) f.uxxx[s] = d3[i];
        }
    }

    // temporal sweep, one t-slice per space node
    std::vector<double> row(f.nt);
    for (int i = 0; i < f.nx; ++i) {
        for (int j = 0; j < f.nt; ++j) row[j] = u.at(i, j);
        const std::vector<double> t = profile.apply_time_op_fd(row, gt);
        for (int j = 0; j < f.nt; ++j)
            f.tt[static_cast<std::size_t>(i) * f.nt + j] = t[j];
    }
    return f;
}

} // namespace

std::string mode_name(ResidualMode m) {
    return m == ResidualMode::ExactTime ? "exact-time" : "fd";
}

ResidualMode mode_from_name(const std::string& name) {
    if (name == "exact-time") return ResidualMode::ExactTime;
    if (name == "fd") return ResidualMode::Fd;
    throw std::invalid_argument("unknown residual mode: " + name);
}

ResidualField residual(const EquationSpec& eq, const SolutionAnsatz& ansatz,
                       const Grid1D& grid_x, const Grid1D& grid_t,
                       ResidualMode mode, const SeriesEvalPolicy& policy) {
    eq.validate();
    if (ansatz.wave_number == 0.0)
        throw std::invalid_argument("residual: requires k != 0");
    const std::vector<double> b_of_t = sample_b_of_t(eq, grid_t, policy);

    if (mode == ResidualMode::Fd) {
        SampledField u;
        u.grid_x = grid_x;
        u.grid_t = grid_t;
        u.values.resize(static_cast<std::size_t>(grid_x.count) * grid_t.count);
        const std::vector<double> f = ansatz.profile.sample(grid_t, policy);
        for (int i = 0; i < grid_x.count; ++i) {
            const double ex = ansatz.amplitude * std::exp(ansatz.wave_number * grid_x.node(i));
            for (int j = 0; j < grid_t.count; ++j) u.at(i, j) = ex * f[j];
        }
        return assemble(eq, fd_fields(eq, u, ansatz.profile), grid_x, grid_t, b_of_t);
    }

    // exact-time: analytic spatial derivatives of e^{kx}, time term -r u
    const double k = ansatz.wave_number;
    const double r = ansatz.profile.r;
    FieldSet f;
    f.nx = grid_x.count;
    f.nt = grid_t.count;
    const std::size_t total = static_cast<std::size_t>(f.nx) * f.nt;
    f.u.resize(total);
    f.ux.resize(total);
    f.uxx.resize(total);
    if (needs_third_derivative(eq.family)) f.uxxx.resize(total);
    f.tt.resize(total);
    const std::vector<double> prof = ansatz.profile.sample(grid_t, policy);
    for (int i = 0; i < f.nx; ++i) {
        const double ex = ansatz.amplitude * std::exp(k * grid_x.node(i));
        for (int j = 0; j < f.nt; ++j) {
            const std::size_t s = static_cast<std::size_t>(i) * f.nt + j;
            const double u = ex * prof[j];
            f.u[s] = u;
            f.ux[s] = k * u;
            f.uxx[s] = k * k * u;
            if (!f.uxxx.empty()) f.uxxx[s] = k * k * k * u;
            f.tt[s] = -r * u;
        }
    }
    return assemble(eq, f, grid_x, grid_t, b_of_t);
}

ResidualField residual(const EquationSpec& eq, const SampledField& u) {
    eq.validate();
    u.validate();
    const std::vector<double> b_of_t = sample_b_of_t(eq, u.grid_t, {});
    const TemporalProfile op_profile = profile_for(eq, 1.0);
    return assemble(eq, fd_fields(eq, u, op_profile), u.grid_x, u.grid_t, b_of_t);
}

ResidualReport verify(const EquationSpec& eq, const SolutionAnsatz& ansatz,
                      const Grid1D& grid_x, const Grid1D& grid_t,
                      double tol, ResidualMode mode,
                      const SeriesEvalPolicy& policy) {
    if (!(tol > 0.0))
        throw std::invalid_argument("verify: requires tol > 0");
    const ResidualField field = residual(eq, ansatz, grid_x, grid_t, mode, policy);

    double max_abs = 0.0;
    double sq_sum = 0.0;
    std::size_t used = 0;
    for (double v : field.values) {
        if (!std::isfinite(v)) continue;
        max_abs = std::max(max_abs, std::abs(v));
        sq_sum += v * v;
        ++used;
    }

    ResidualReport rep;
    rep.equation = family_name(eq.family);
    rep.params_json = equation_params_json(eq);
    rep.amplitude = ansatz.amplitude;
    rep.wave_number = ansatz.wave_number;
    rep.rate = ansatz.profile.r;
    rep.mode = mode;
    rep.grid_x = grid_x;
    rep.grid_t = grid_t;
    rep.max_abs = max_abs;
    rep.rms = used ? std::sqrt(sq_sum / used) : 0.0;
    if (field.scale > 0.0)
        rep.normalized = max_abs / field.scale;
    else
        rep.normalized = (max_abs == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
    rep.masked_fraction = field.masked_fraction;
    rep.tolerance = tol;
    rep.pass = rep.normalized <= tol;
    return rep;
}

std::string equation_params_json(const EquationSpec& eq) {
    nlohmann::json j = nlohmann::json::object();
    switch (eq.family) {
    case Family::BurgersFractional:
        j["alpha"] = eq.alpha;
        break;
    case Family::BurgersHyperBessel:
        j["alpha"] = eq.alpha;
        j["beta"] = eq.beta;
        j["nu"] = eq.nu;
        break;
    case Family::BurgersPowerN:
        j["n"] = eq.power_n;
        j["parse_mode"] =
            eq.parse_mode == PowerParseMode::Literal ? "literal" : "paper_condition";
        break;
    case Family::BurgersGeneralOt:
    case Family::KdVGeneralOt:
    case Family::BurgersHighOrder:
        j["profile"] = profile_name(eq.ot_profile);
        if (eq.ot_profile == ProfileKind::MittagLeffler) j["alpha"] = eq.alpha;
        if (eq.ot_profile == ProfileKind::HyperBesselW) {
            j["alpha"] = eq.alpha;
            j["beta"] = eq.beta;
            j["nu"] = eq.nu;
        }
        break;
    case Family::VarCoefBurgers:
        j["coef_k"] = eq.coef_k;
        j["coef_r"] = eq.coef_r;
        break;
    case Family::VarCoefGeneralOt:
        j["coef_k"] = eq.coef_k;
        j["coef_r"] = eq.coef_r;
        j["profile"] = profile_name(eq.ot_profile);
        if (eq.ot_profile == ProfileKind::MittagLeffler) j["alpha"] = eq.alpha;
        if (eq.ot_profile == ProfileKind::HyperBesselW) {
            j["alpha"] = eq.alpha;
            j["beta"] = eq.beta;
            j["nu"] = eq.nu;
        }
        break;
    default:
        break;
    }
    return j.dump();
}

std::string report_to_json(const ResidualReport& rep) {
    nlohmann::json j;
    j["equation"] = rep.equation;
    j["params"] = nlohmann::json::parse(rep.params_json);
    j["R"] = rep.amplitude;
    j["k"] = rep.wave_number;
    j["r"] = rep.rate;
    j["mode"] = mode_name(rep.mode);
    j["grid"] = {
        {"x_min", rep.grid_x.start}, {"x_max", rep.grid_x.stop}, {"nx", rep.grid_x.count},
        {"t_min", rep.grid_t.start}, {"t_max", rep.grid_t.stop}, {"nt", rep.grid_t.count},
    };
    j["max_abs"] = rep.max_abs;
    j["rms"] = rep.rms;
    j["normalized"] = rep.normalized;
    j["masked_fraction"] = rep.masked_fraction;
    j["tolerance"] = rep.tolerance;
    j["pass"] = rep.pass;
    return j.dump(2);
}

double solve_dispersion_numeric(const EquationSpec& eq, double k) {
    eq.validate();
    if (k == 0.0 || !std::isfinite(k))
        throw std::invalid_argument("solve_dispersion_numeric: requires k != 0");
    if (is_var_coef(eq.family))
        throw std::invalid_argument(
            "solve_dispersion_numeric: the variable-coefficient residual vanishes "
            "for every rate; there is no root to solve for");

    const double x_probe = 0.5;
    const double t_probe = 0.25;
    const double phi = profile_for(eq, 1.0).value(t_probe);
    if (std::abs(phi) < 1e-9)
        throw std::runtime_error("solve_dispersion_numeric: probe point is masked");

    const double u = std::exp(k * x_probe) * phi;
    NodeVals v;
    v.u = u;
    v.ux = k * u;
    v.uxx = k * k * u;
    v.uxxx = k * k * k * u;
    v.x = x_probe;

    auto res_at = [&](double r) {
        NodeVals w = v;
        w.tt = -r * u;
        const NodeResult nr = combine_terms(eq, w, 1e-9 * std::abs(u), 1e-9 * std::abs(u));
        if (!nr.finite || nr.masked)
            throw std::runtime_error("solve_dispersion_numeric: probe point is masked");
        return nr.res;
    };

    const double r1 = 0.75, r2 = 1.25, r3 = 2.0;
    const double f1 = res_at(r1);
    const double f2 = res_at(r2);
    const double slope = (f2 - f1) / (r2 - r1);
    const double ref = std::max({std::abs(f1), std::abs(f2), std::abs(u), 1.0});
    if (std::abs(slope) < 1e-12 * ref)
        throw std::runtime_error("solve_dispersion_numeric: residual is not affine in r "
                                 "(zero slope at the probe point)");
    const double root = r1 - f1 / slope;
    const double predicted = f1 + slope * (r3 - r1);
    const double f3 = res_at(r3);
    if (std::abs(f3 - predicted) > 1e-9 * std::max(ref, std::abs(f3)))
        throw std::runtime_error("solve_dispersion_numeric: residual is not affine in r");
    return root;
}

} // namespace lagcal
