#include "lagcal/numops.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lagcal {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> central_first(const std::vector<double>& u, double h) {
    const std::size_t n = u.size();
    std::vector<double> out(n, kNaN);
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (u[i + 1] - u[i - 1]) / (2.0 * h);
    return out;
}

std::vector<double> central_second(const std::vector<double>& u, double h) {
    const std::size_t n = u.size();
    std::vector<double> out(n, kNaN);
    for (std::size_t i = 1; i + 1 < n; ++i)
        out[i] = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
    return out;
}

std::vector<double> central_third(const std::vector<double>& u, double h) {
    const std::size_t n = u.size();
    std::vector<double> out(n, kNaN);
    for (std::size_t i = 2; i + 2 < n; ++i)
        out[i] = (-u[i - 2] + 2.0 * u[i - 1] - 2.0 * u[i + 1] + u[i + 2]) / (2.0 * h * h * h);
    return out;
}

// L1 scheme core; node 0 left untouched by the caller's initialization.
void l1_fill(const std::vector<double>& u, double h, double alpha, std::vector<double>& out) {
    const std::size_t n = u.size();
    const double pref = std::pow(h, -alpha) / std::tgamma(2.0 - alpha);
    std::vector<double> b(n);
    for (std::size_t j = 0; j < n; ++j)
        b[j] = std::pow(j + 1.0, 1.0 - alpha) - std::pow(static_cast<double>(j), 1.0 - alpha);
    for (std::size_t k = 1; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < k; ++j) acc += b[j] * (u[k - j] - u[k - j - 1]);
        out[k] = pref * acc;
    }
}

} // namespace

Grid1D::Grid1D(double start_, double stop_, int count_)
    : start(start_), stop(stop_), count(count_) {
    if (!(stop > start))
        throw std::invalid_argument("Grid1D: requires stop > start");
    if (count < 9)
        throw std::invalid_argument("Grid1D: requires count >= 9");
    if (!std::isfinite(start) || !std::isfinite(stop))
        throw std::invalid_argument("Grid1D: endpoints must be finite");
}

void SampledField::validate() const {
    const std::size_t expected =
        static_cast<std::size_t>(grid_x.count) * static_cast<std::size_t>(grid_t.count);
    if (values.size() != expected)
        throw std::invalid_argument("SampledField: value count does not match grids");
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("SampledField: non-finite sample");
}

std::vector<double> fd_derivative(const std::vector<double>& samples, double h, int order) {
    if (!(h > 0.0))
        throw std::invalid_argument("fd_derivative: requires h > 0");
    if (order < 1 || order > 3)
        throw std::invalid_argument("fd_derivative: order must be 1, 2, or 3");
    const std::size_t need = (order == 3) ? 7 : 5;
    if (samples.size() < need)
        throw std::invalid_argument("fd_derivative: too few samples");
    switch (order) {
    case 1: return central_first(samples, h);
    case 2: return central_second(samples, h);
    default: return central_third(samples, h);
    }
}

std::vector<double> laguerre_time_fd(const std::vector<double>& u_t_slice,
                                     const Grid1D& t_grid) {
    if (u_t_slice.size() != static_cast<std::size_t>(t_grid.count))
        throw std::invalid_argument("laguerre_time_fd: sample count does not match grid");
    const double h = t_grid.spacing();
    const std::vector<double> d1 = central_first(u_t_slice, h);
    const std::vector<double> d2 = central_second(u_t_slice, h);
    std::vector<double> out(u_t_slice.size(), kNaN);
    for (std::size_t j = 1; j + 1 < out.size(); ++j)
        out[j] = -d1[j] - t_grid.node(static_cast<int>(j)) * d2[j];
    return out;
}

std::vector<double> caputo_l1(const std::vector<double>& samples,
                              const Grid1D& t_grid, double alpha) {
    if (samples.size() != static_cast<std::size_t>(t_grid.count))
        throw std::invalid_argument("caputo_l1: sample count does not match grid");
    if (t_grid.start != 0.0)
        throw std::invalid_argument("caputo_l1: grid must start at 0");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("caputo_l1: requires alpha in (0,1)");
    std::vector<double> out(samples.size(), kNaN);
    l1_fill(samples, t_grid.spacing(), alpha, out);
    return out;
}

std::vector<double> hyper_bessel_fd(const std::vector<double>& samples,
                                    const Grid1D& t_grid,
                                    double alpha, double beta, double nu) {
    if (samples.size() != static_cast<std::size_t>(t_grid.count))
        throw std::invalid_argument("hyper_bessel_fd: sample count does not match grid");
    if (t_grid.start != 0.0)
        throw std::invalid_argument("hyper_bessel_fd: grid must start at 0");
    if (!(alpha > 0.0) || alpha > 1.0 || !(beta > 0.0) || beta > 1.0)
        throw std::invalid_argument("hyper_bessel_fd: requires alpha, beta in (0, 1]");
    if (!(nu > 0.0))
        throw std::invalid_argument("hyper_bessel_fd: requires nu > 0");
    const double h = t_grid.spacing();

    std::vector<double> inner;
    if (alpha == 1.0) {
        inner = central_first(samples, h);
    } else {
        inner.assign(samples.size(), kNaN);
        l1_fill(samples, h, alpha, inner);
    }

    std::vector<double> mid(samples.size(), kNaN);
    mid[0] = 0.0; // t^nu vanishes at t = 0 regardless of the inner value
    for (std::size_t j = 1; j < mid.size(); ++j)
        mid[j] = std::pow(t_grid.node(static_cast<int>(j)), nu) * inner[j];

    std::vector<double> outer;
    if (beta == 1.0) {
        outer = central_first(mid, h);
    } else {
        outer.assign(mid.size(), kNaN);
        l1_fill(mid, h, beta, outer);
    }

    std::vector<double> out(samples.size(), kNaN);
    for (std::size_t j = 1; j < out.size(); ++j)
        out[j] = std::pow(t_grid.node(static_cast<int>(j)), alpha - nu) * outer[j];
    return out;
}

} // namespace lagcal
