#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cva/model.hpp"

// uncorrelating transform and localization. the pricing PDE is solved in
//   y = log(S) - (rho/sigma) V,
// which removes the instantaneous correlation between the spot and variance
// brownians; rho_bar = sqrt(1 - rho^2) is the residual diffusion loading.
// the y-domain is a uniform grid anchored so that y0 = log(s0) - (rho/sigma) v0
// falls exactly on a grid point.

namespace cva {

struct YGrid {
    int n_y = 0;
    int i0 = 0;        // index of the anchor point
    double y0 = 0.0;   // log(s0) - (rho/sigma) v0
    double dy = 0.0;
    Eigen::VectorXd points;  // points[i] = y0 + (i - i0) dy

    double y_min() const { return points[0]; }
    double y_max() const { return points[n_y - 1]; }
};

YGrid build_y_grid(const BatesParams& params, const OptionSpec& spec, const NumericsConfig& cfg);

// trapezoidal quadrature of the jump-size density in y-space. jumps enter the
// log-spot additively with law N(alpha, beta2); offsets are snapped
// to integer multiples of dy so the jump convolution only reads grid values.
struct JumpQuadrature {
    std::vector<int> offsets;   // grid offsets; log-jump size x_j = offsets[j] * dy
    Eigen::VectorXd x;          // offsets[j] * dy
    Eigen::VectorXd weights;    // probability mass per offset
    double total_weight = 0.0;  // sum of weights (<= 1)
    double compensator = 0.0;   // lambda E[J] = lambda (e^(alpha + beta2/2) - 1)
};

JumpQuadrature build_jump_quadrature(const BatesParams& params, const YGrid& grid,
                                     const NumericsConfig& cfg);

// drift of y at variance v, jump compensator included:
//   mu_y(v) = r - eta - lambda E[J] - v/2 - (rho/sigma) kappa (theta - v)
double y_drift(const BatesParams& params, double v);

}  // namespace cva
