#include "cva/grid.hpp"

#include <cmath>

namespace cva {

double y_drift(const BatesParams& params, double v) {
    return params.r - params.eta - params.jump_compensator() - 0.5 * v -
           (params.rho / params.sigma) * params.kappa * (params.theta - v);
}

YGrid build_y_grid(const BatesParams& params, const OptionSpec& spec, const NumericsConfig& cfg) {
    params.validate();
    spec.validate();
    cfg.validate();

    YGrid grid;
    grid.n_y = cfg.n_y;
    grid.i0 = (cfg.n_y - 1) / 2;
    grid.y0 = std::log(params.s0) - (params.rho / params.sigma) * params.v0;

    // diffusion half-width plus a buffer for the jump part of the path
    const double T = spec.maturity;
    const double diff_sd = std::sqrt(std::max(params.theta, params.v0) * T);
    const double jump_reach = std::sqrt(params.beta2) * std::max(1.0, params.lambda * T);
    const double half_width = cfg.y_halfwidth_sds * diff_sd + cfg.jump_trunc_sds * jump_reach;

    grid.dy = 2.0 * half_width / (cfg.n_y - 1);
    grid.points.resize(cfg.n_y);
    for (int i = 0; i < cfg.n_y; ++i) grid.points[i] = grid.y0 + (i - grid.i0) * grid.dy;
    return grid;
}

JumpQuadrature build_jump_quadrature(const BatesParams& params, const YGrid& grid,
                                     const NumericsConfig& cfg) {
    JumpQuadrature quad;
    quad.compensator = params.jump_compensator();
    if (params.lambda == 0.0) {
        quad.x.resize(0);
        quad.weights.resize(0);
        return quad;  // zero intensity: the jump term vanishes entirely
    }

    const double m = params.alpha;  // mean of log(1+J)
    const double sd = std::sqrt(params.beta2);
    const double dy = grid.dy;

    const long j_lo = static_cast<long>(std::ceil((m - cfg.jump_trunc_sds * sd) / dy));
    const long j_hi = static_cast<long>(std::floor((m + cfg.jump_trunc_sds * sd) / dy));

    if (sd < dy || j_hi - j_lo < 1) {
        // the grid cannot resolve the density; collapse to a point mass at the
        // nearest representable jump size (the degenerate beta2 -> 0 limit)
        quad.offsets = {static_cast<int>(std::lround(m / dy))};
        quad.x.resize(1);
        quad.x[0] = quad.offsets[0] * dy;
        quad.weights.resize(1);
        quad.weights[0] = 1.0;
        quad.total_weight = 1.0;
        return quad;
    }

    const long count = j_hi - j_lo + 1;
    quad.offsets.resize(count);
    quad.x.resize(count);
    quad.weights.resize(count);
    const double norm = dy / (sd * std::sqrt(2.0 * M_PI));
    for (long j = 0; j < count; ++j) {
        const long off = j_lo + j;
        const double x = off * dy;
        const double z = (x - m) / sd;
        double w = norm * std::exp(-0.5 * z * z);
        if (j == 0 || j == count - 1) w *= 0.5;  // trapezoid end weights
        quad.offsets[j] = static_cast<int>(off);
        quad.x[j] = x;
        quad.weights[j] = w;
    }
    quad.total_weight = quad.weights.sum();
    if (quad.total_weight > 1.0) {
        // at coarse spacing the discretized normal mass can overshoot one by a
        // few ulps (theta-function correction); rescale to keep it a mass
        quad.weights *= 1.0 / quad.total_weight;
        quad.total_weight = 1.0;
    }
    return quad;
}

}  // namespace cva
