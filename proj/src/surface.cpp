#include "cva/surface.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cva {

namespace {

// payoff slice at a node: psi(exp(y_i + (rho/sigma) v))
void payoff_slice(const OptionSpec& spec, const Eigen::ArrayXd& s_base, double shift,
                  Eigen::VectorXd& out) {
    const double factor = std::exp(shift);
    if (spec.kind == OptionKind::put) {
        out = (spec.strike - factor * s_base).cwiseMax(0.0).matrix();
    } else {
        out = (factor * s_base - spec.strike).cwiseMax(0.0).matrix();
    }
}

}  // namespace

PriceSurface price_surface(const BatesParams& params, const OptionSpec& spec, const VolTree& tree,
                           const YGrid& grid, const JumpQuadrature& quad) {
    params.validate();
    spec.validate();
    if (tree.n_steps < 1 || tree.v.empty()) throw std::invalid_argument("price_surface: tree not built");
    if (grid.n_y != grid.points.size()) throw std::invalid_argument("price_surface: grid not built");

    PriceSurface surf;
    surf.params = params;
    surf.spec = spec;
    surf.tree = tree;
    surf.grid = grid;
    surf.values.resize(tree.node_count());

    const int N = tree.n_steps;
    const double h = tree.h;
    const double vol_shift = params.rho / params.sigma;
    const Eigen::ArrayXd s_base = grid.points.array().exp();
    const bool american = spec.exercise == ExerciseStyle::american;

    // terminal condition
    for (int k = 0; k <= N; ++k) {
        payoff_slice(spec, s_base, vol_shift * tree.value(N, k), surf.values[VolTree::node_index(N, k)]);
    }

    PideWorkspace ws;
    Eigen::VectorXd blend(grid.n_y), exercise(grid.n_y);
    for (int n = N - 1; n >= 0; --n) {
        for (int k = 0; k <= n; ++k) {
            const std::size_t idx = VolTree::node_index(n, k);
            const double p = tree.p_up[idx];
            const Eigen::VectorXd& up = surf.values[VolTree::node_index(n + 1, tree.k_up[idx])];
            const Eigen::VectorXd& down = surf.values[VolTree::node_index(n + 1, tree.k_down[idx])];
            blend = p * up + (1.0 - p) * down;
            pide_step_into(blend, tree.v[idx], h, grid, quad, params, ws, surf.values[idx]);
            if (american) {
                payoff_slice(spec, s_base, vol_shift * tree.v[idx], exercise);
                surf.values[idx] = surf.values[idx].cwiseMax(exercise);
            }
        }
    }
    return surf;
}

double read_price(const PriceSurface& surface, int n, double s, int k) {
    if (n < 0 || n > surface.tree.n_steps || k < 0 || k > n)
        throw std::out_of_range("read_price: node out of range");
    if (!(s > 0.0)) throw std::invalid_argument("read_price: spot must be > 0");

    const Eigen::VectorXd& slice = surface.values[VolTree::node_index(n, k)];
    const YGrid& grid = surface.grid;
    const double y = std::log(s) - (surface.params.rho / surface.params.sigma) * surface.tree.value(n, k);
    if (y <= grid.y_min()) return slice[0];
    if (y >= grid.y_max()) return slice[grid.n_y - 1];
    const double t = (y - grid.y_min()) / grid.dy;
    const int i = std::min(static_cast<int>(t), grid.n_y - 2);
    const double f = t - i;
    return (1.0 - f) * slice[i] + f * slice[i + 1];
}

void dump_t0_slice_csv(const PriceSurface& surface, std::ostream& out) {
    out << "spot,value\n";
    const double shift = (surface.params.rho / surface.params.sigma) * surface.tree.value(0, 0);
    char buf[80];
    const Eigen::VectorXd& slice = surface.values[0];
    for (int i = 0; i < surface.grid.n_y; ++i) {
        const double s = std::exp(surface.grid.points[i] + shift);
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f\n", s, slice[i]);
        out << buf;
    }
}

}  // namespace cva
