#pragma once

#include "lagcal/equations.hpp"
#include "lagcal/numops.hpp"

#include <string>

namespace lagcal {

/// `ExactTime` replaces the time-operator term by -r u through the profile's
/// eigen-contract and uses the analytic spatial derivatives of e^{kx};
/// it isolates the spatial algebra at round-off accuracy.  `Fd` evaluates
/// every term with the numops stencils and trusts nothing.
enum class ResidualMode { ExactTime, Fd };

std::string mode_name(ResidualMode m);
ResidualMode mode_from_name(const std::string& name);

/// Pointwise equation left-hand side.  NaN marks nodes without a residual:
/// stencil boundaries and nodes excluded by the division mask
/// (|u| < 1e-6 max|u|; |u_xx| < 1e-6 max|u_xx| where u_xx divides).
struct ResidualField {
    Grid1D grid_x;
    Grid1D grid_t;
    std::vector<double> values;
    double scale = 0.0;           // max over used nodes of the largest |term|
    double masked_fraction = 0.0; // excluded nodes / total nodes
};

/// Residual of the separable ansatz on the tensor grid.
ResidualField residual(const EquationSpec& eq, const SolutionAnsatz& ansatz,
                       const Grid1D& grid_x, const Grid1D& grid_t,
                       ResidualMode mode, const SeriesEvalPolicy& policy = {});

/// Residual of an arbitrary sampled field; fd mode only (nothing else is
/// known about u).  The time operator is the one paired with the equation.
ResidualField residual(const EquationSpec& eq, const SampledField& u);

struct ResidualReport {
    std::string equation;
    std::string params_json; // equation-specific parameters, JSON object
    double amplitude = 1.0;
    double wave_number = 1.0;
    double rate = 1.0;
    ResidualMode mode = ResidualMode::ExactTime;
    Grid1D grid_x;
    Grid1D grid_t;
    double max_abs = 0.0;
    double rms = 0.0;
    double normalized = 0.0;
    double masked_fraction = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

ResidualReport verify(const EquationSpec& eq, const SolutionAnsatz& ansatz,
                      const Grid1D& grid_x, const Grid1D& grid_t,
                      double tol, ResidualMode mode,
                      const SeriesEvalPolicy& policy = {});

std::string report_to_json(const ResidualReport& report);

/// JSON fragment describing eq's own parameters (empty object for the
/// parameter-free families).
std::string equation_params_json(const EquationSpec& eq);

} // namespace lagcal
