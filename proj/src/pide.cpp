#include "cva/pide.hpp"

#include <cmath>

namespace cva {

void pide_step_into(const Eigen::VectorXd& values_in, double v, double h, const YGrid& grid,
                    const JumpQuadrature& quad, const BatesParams& params, PideWorkspace& ws,
                    Eigen::VectorXd& out) {
    const Eigen::Index n = values_in.size();
    if (n != grid.n_y) throw std::invalid_argument("pide_step: values/grid size mismatch");
    if (!values_in.allFinite()) throw std::invalid_argument("pide_step: non-finite input values");
    if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("pide_step: bad variance");
    if (!(h > 0.0)) throw std::invalid_argument("pide_step: step size must be > 0");

    const double dy = grid.dy;
    const double mu = y_drift(params, v);
    const double rb = params.rho_bar();
    const double diff = 0.5 * rb * rb * v;

    // rhs: input values plus the explicit (compensated) jump term
    ws.rhs = values_in;
    if (params.lambda > 0.0 && quad.offsets.size() > 0) {
        jump_convolution(values_in, quad, ws.conv);
        ws.rhs += (h * params.lambda) * ws.conv;
    }

    // implicit advection-diffusion: (I - h A) out = rhs
    const double cd = h * diff / (dy * dy);
    const double ca = h * mu / (2.0 * dy);
    ws.lower.setConstant(n, -(cd - ca));
    ws.diag.setConstant(n, 1.0 + 2.0 * cd);
    ws.upper.setConstant(n, -(cd + ca));

    // zero second derivative at the ends: one-sided first differences
    ws.diag[0] = 1.0 + 2.0 * ca;
    ws.upper[0] = -2.0 * ca;
    ws.diag[n - 1] = 1.0 - 2.0 * ca;
    ws.lower[n - 1] = 2.0 * ca;

    thomas_solve_in_place(ws.lower, ws.diag, ws.upper, ws.rhs);
    out = std::exp(-params.r * h) * ws.rhs;
}

Eigen::VectorXd pide_step(const Eigen::VectorXd& values_in, double v, double h, const YGrid& grid,
                          const JumpQuadrature& quad, const BatesParams& params) {
    PideWorkspace ws;
    Eigen::VectorXd out;
    pide_step_into(values_in, v, h, grid, quad, params, ws, out);
    return out;
}

}  // namespace cva
