#pragma once

#include <cstddef>
#include <vector>

namespace mink::num {

// Builds the grid a = s_0 < ... < s_{n-1} = b with n = round((b-a)/step) + 1
// (at least 2) equally spaced points; the effective spacing is (b-a)/(n-1).
std::vector<double> make_grid(double a, double b, double step);

// Weights w_j such that sum_j w_j f(nodes_j) approximates the derivative of
// order deriv_order of f at x0, exact for polynomials of degree
// nodes.size()-1. Arbitrary distinct nodes (uniform spacing not required).
std::vector<double> fd_weights(double x0, const std::vector<double>& nodes,
                               int deriv_order);

// Derivative of sampled values on a strictly increasing grid using moving
// stencils of `width` nodes (fourth-order accurate at the default width on
// smooth grids; shorter all-point stencils when fewer samples exist).
// Near the ends the stencils become one-sided, which amplifies roundoff;
// quantities cascaded through several derivative levels develop a thin
// boundary layer of reduced accuracy there. order is 1 or 2.
std::vector<double> derivative(const std::vector<double>& s,
                               const std::vector<double>& f, int order = 1,
                               std::size_t width = 5);

// Cumulative antiderivative F with F[0] = 0, computed by integrating the
// local cubic interpolant over each interval with two-point Gauss quadrature.
// Exact on cubics; fourth-order accurate on smooth grids, uniform or not.
std::vector<double> cumulative_integral(const std::vector<double>& s,
                                        const std::vector<double>& f);

// Default relative tolerance for declaring a sampled quantity constant.
inline constexpr double kConstancyTol = 1e-4;

struct Constancy {
    bool constant = false;
    double residual = 0.0; // (max - min) / (1 + median |f|)
    double value = 0.0;    // median of f, the representative constant
};

Constancy constancy(const std::vector<double>& f,
                    double rel_tol = kConstancyTol);

} // namespace mink::num
