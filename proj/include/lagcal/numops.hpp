#pragma once

#include <vector>

namespace lagcal {

/// Uniform grid with count >= 9 nodes.  Grids feeding the L1 fractional
/// schemes must start at 0; spatial grids may cover any finite range.
struct Grid1D {
    double start = 0.0;
    double stop = 1.0;
    int count = 9;

    Grid1D() = default;
    Grid1D(double start_, double stop_, int count_);

    double spacing() const { return (stop - start) / (count - 1); }
    double node(int i) const { return start + spacing() * i; }
};

/// u sampled on the tensor grid, x-major: values[i * grid_t.count + j]
/// holds u(x_i, t_j).
struct SampledField {
    Grid1D grid_x;
    Grid1D grid_t;
    std::vector<double> values;

    double& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid_t.count + j]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid_t.count + j]; }

    /// Throws unless dimensions match the grids and every value is finite.
    void validate() const;
};

/// Second-order central differences of the given order (1, 2, or 3; order 3
/// uses the 5-point stencil).  Nodes without a full stencil are NaN: one
/// node at each end for orders 1-2, two for order 3.  Requires >= 5 samples
/// for orders 1-2, >= 7 for order 3.
std::vector<double> fd_derivative(const std::vector<double>& samples, double h, int order);

/// -u_t - t * u_tt on the grid, central stencils; first and last node NaN.
std::vector<double> laguerre_time_fd(const std::vector<double>& u_t_slice,
                                     const Grid1D& t_grid);

/// L1 discretization of the fractional derivative of order alpha in (0,1)
/// on a uniform grid starting at 0.  Node 0 is NaN, nodes 1..N are the L1
/// values; accuracy order 2-alpha on C^2 data.
std::vector<double> caputo_l1(const std::vector<double>& samples,
                              const Grid1D& t_grid, double alpha);

/// t^{alpha-nu} * S_beta( t^nu * S_alpha(samples) ) where S_g is the L1
/// scheme for g in (0,1) and the central first difference for g = 1.
/// The inner product t^nu * S_alpha is exactly 0 at t = 0.  Invalid nodes
/// propagate as NaN.
std::vector<double> hyper_bessel_fd(const std::vector<double>& samples,
                                    const Grid1D& t_grid,
                                    double alpha, double beta, double nu);

} // namespace lagcal
