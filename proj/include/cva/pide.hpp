#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "cva/grid.hpp"
#include "cva/model.hpp"

// one backward IMEX step of the per-node pricing equation in y at frozen
// variance v:
//   du/ds + mu_y(v) du/dy + (1/2) rho_bar^2 v d2u/dy2
//         + lambda * integral [u(y + x) - u(y)] p_J(x) dx = 0,
// followed by a discount factor e^(-r h). advection and diffusion are solved
// implicitly (one tridiagonal system), the jump convolution is evaluated
// explicitly on the input values, compensated with the same truncated mass so
// that constants pass through the operator exactly. at both domain ends the
// second derivative is extrapolated to zero, which turns the first derivative
// into its one-sided difference and keeps the system tridiagonal.

namespace cva {

// tridiagonal solve (Thomas algorithm), no pivoting: diag[i] x[i-1 -> lower,
// i+1 -> upper]. coefficients are consumed by value; rhs is overwritten with
// the solution.
template <typename Vec>
void thomas_solve_in_place(Vec& lower, Vec& diag, Vec& upper, Vec& rhs) {
    using Scalar = typename Vec::Scalar;
    const Eigen::Index n = diag.size();
    for (Eigen::Index i = 1; i < n; ++i) {
        const Scalar w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for (Eigen::Index i = n - 2; i >= 0; --i) {
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    }
}

// compensated jump convolution: out[i] = sum_j w_j u[clamp(i + off_j)]
// - total_weight * u[i]; indices beyond the grid read the boundary value.
template <typename Vec>
void jump_convolution(const Vec& u, const JumpQuadrature& quad, Vec& out) {
    using Scalar = typename Vec::Scalar;
    const Eigen::Index n = u.size();
    out.setZero(n);
    for (std::size_t j = 0; j < quad.offsets.size(); ++j) {
        const Scalar w = static_cast<Scalar>(quad.weights[static_cast<Eigen::Index>(j)]);
        const Eigen::Index off = quad.offsets[j];
        if (off >= n) {
            out.array() += w * u[n - 1];
        } else if (off <= -n) {
            out.array() += w * u[0];
        } else if (off >= 0) {
            out.head(n - off) += w * u.tail(n - off);
            if (off > 0) out.tail(off).array() += w * u[n - 1];
        } else {
            out.tail(n + off) += w * u.head(n + off);
            out.head(-off).array() += w * u[0];
        }
    }
    out -= static_cast<Scalar>(quad.total_weight) * u;
}

// scratch space reused across steps so the backward induction does not
// allocate per node
struct PideWorkspace {
    Eigen::VectorXd lower, diag, upper, rhs, conv;
};

void pide_step_into(const Eigen::VectorXd& values_in, double v, double h, const YGrid& grid,
                    const JumpQuadrature& quad, const BatesParams& params, PideWorkspace& ws,
                    Eigen::VectorXd& out);

Eigen::VectorXd pide_step(const Eigen::VectorXd& values_in, double v, double h, const YGrid& grid,
                          const JumpQuadrature& quad, const BatesParams& params);

}  // namespace cva
