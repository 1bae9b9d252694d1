#include "cva/cva.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "cva/pide.hpp"

namespace cva {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

CvaResult cva_quadrature(const ExposureProfile& profile, const DefaultModel& model, double r) {
    model.validate();
    const Eigen::Index m = profile.times.size();
    if (m < 2) throw std::invalid_argument("cva_quadrature: profile must cover at least two times");
    if (profile.ee.size() != m) throw std::invalid_argument("cva_quadrature: ee/times size mismatch");

    const auto t0 = std::chrono::steady_clock::now();
    const double h = profile.times[1] - profile.times[0];
    const double loss = 1.0 - model.recovery;

    // quadrature coefficients c_n = (1-R) w_n D(0,t_n) PD'(t_n)
    Eigen::VectorXd coef(m);
    for (Eigen::Index n = 0; n < m; ++n) {
        const double w = (n == 0 || n == m - 1) ? 0.5 * h : h;
        coef[n] = loss * w * discount(r, profile.times[n]) * default_density(model, profile.times[n]);
    }

    CvaResult res;
    res.method = Method::htfd_htmc;
    res.cva = coef.dot(profile.ee);

    if (profile.exposures.size() > 0 && profile.n_paths > 1) {
        // per-path quadrature, then the standard error of the path mean
        Eigen::VectorXd per_path = profile.exposures.transpose() * coef;
        const double mean = per_path.mean();
        const double var = (per_path.array() - mean).square().sum() / (profile.n_paths - 1);
        res.ci_halfwidth = z_95 * std::sqrt(var / profile.n_paths);
    } else {
        // no pathwise information: fall back to per-time errors treated as
        // independent (understates the width when times are correlated)
        res.ci_halfwidth = z_95 * std::sqrt(coef.array().square().matrix().dot(profile.se.array().square().matrix()));
    }
    res.runtime_seconds = seconds_since(t0);
    return res;
}

CvaResult cva_coupled_pide(const BatesParams& params, const OptionSpec& spec,
                           const DefaultModel& model, const VolTree& tree, const YGrid& grid,
                           const JumpQuadrature& quad, const PriceSurface& surface) {
    model.validate();
    if (surface.tree.n_steps != tree.n_steps) throw std::invalid_argument("cva_coupled_pide: surface/tree step mismatch");
    if (surface.grid.n_y != grid.n_y || surface.grid.dy != grid.dy)
        throw std::invalid_argument("cva_coupled_pide: surface/grid mismatch");
    if (static_cast<std::size_t>(surface.values.size()) != tree.node_count())
        throw std::invalid_argument("cva_coupled_pide: surface not computed on this tree");

    const auto t0 = std::chrono::steady_clock::now();
    const int N = tree.n_steps;
    const double h = tree.h;
    const double loss = 1.0 - model.recovery;

    // rolling two levels of the adjustment, terminal condition C(T) = 0
    std::vector<Eigen::VectorXd> next(N + 1), current(N + 1);
    for (int k = 0; k <= N; ++k) next[k] = Eigen::VectorXd::Zero(grid.n_y);

    PideWorkspace ws;
    Eigen::VectorXd blend(grid.n_y);
    for (int n = N - 1; n >= 0; --n) {
        const double source_scale = h * loss * default_density(model, n * h);
        for (int k = 0; k <= n; ++k) {
            const std::size_t idx = VolTree::node_index(n, k);
            const double p = tree.p_up[idx];
            blend = p * next[tree.k_up[idx]] + (1.0 - p) * next[tree.k_down[idx]];
            pide_step_into(blend, tree.v[idx], h, grid, quad, params, ws, current[k]);
            current[k] += source_scale * surface.values[idx].cwiseMax(0.0);
        }
        std::swap(next, current);
    }

    CvaResult res;
    res.method = Method::c_htfd;
    res.cva = next[0][grid.i0];
    res.runtime_seconds = seconds_since(t0);
    return res;
}

CvaResult run_method(Method method, const RunConfig& cfg, int workers) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    VolTree tree = build_tree(cfg.params, cfg.numerics.n_time, cfg.option.maturity);
    YGrid grid = build_y_grid(cfg.params, cfg.option, cfg.numerics);
    JumpQuadrature quad = build_jump_quadrature(cfg.params, grid, cfg.numerics);
    PriceSurface surface = price_surface(cfg.params, cfg.option, tree, grid, quad);

    CvaResult res;
    if (method == Method::c_htfd) {
        res = cva_coupled_pide(cfg.params, cfg.option, cfg.credit, tree, grid, quad, surface);
    } else {
        PathBatch batch = simulate_paths(tree, cfg.params, cfg.numerics, workers);
        ExposureProfile profile = expected_exposure(batch, surface);
        res = cva_quadrature(profile, cfg.credit, cfg.params.r);
    }
    res.config_label = cfg.label;
    res.runtime_seconds = seconds_since(t0);
    return res;
}

}  // namespace cva
