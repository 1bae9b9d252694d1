#include "cva/htmc.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cva/grid.hpp"
#include "cva/rng.hpp"

namespace cva {

namespace {

int resolve_workers(int workers, int jobs) {
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    return std::min(workers, jobs);
}

// static chunking over [0, jobs); chunk boundaries depend only on the worker
// count, and each job writes its own slot, so outputs are reduction-free
template <typename Fn>
void parallel_for(int jobs, int workers, const Fn& fn) {
    workers = resolve_workers(workers, jobs);
    if (workers <= 1) {
        for (int i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (jobs + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int lo = w * chunk;
        const int hi = std::min(jobs, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

PathBatch simulate_paths(const VolTree& tree, const BatesParams& params, const NumericsConfig& cfg,
                         int workers) {
    params.validate();
    cfg.validate();
    if (tree.n_steps != cfg.n_time) throw std::invalid_argument("simulate_paths: tree/config step mismatch");

    const int N = tree.n_steps;
    const double h = tree.h;
    const double rb = params.rho_bar();
    const double jump_mean = params.alpha;
    const double jump_sd = std::sqrt(params.beta2);
    const double poisson_mean = params.lambda * h;
    const double y0 = std::log(params.s0) - (params.rho / params.sigma) * params.v0;

    PathBatch batch;
    batch.n_paths = cfg.n_paths;
    batch.n_steps = N;
    batch.seed = cfg.seed;
    batch.node_index.resize(N + 1, cfg.n_paths);
    batch.y.resize(N + 1, cfg.n_paths);

    parallel_for(cfg.n_paths, workers, [&](int j) {
        auto gen = rng::stream_rng(cfg.seed, static_cast<std::uint64_t>(j));
        int k = 0;
        double y = y0;
        batch.node_index(0, j) = 0;
        batch.y(0, j) = y0;
        for (int n = 0; n < N; ++n) {
            const std::size_t idx = VolTree::node_index(n, k);
            const double v = tree.v[idx];

            // fixed draw order: tree move, diffusion normal, jump count, jump sizes
            const double u_move = rng::uniform01(gen);
            k = u_move < tree.p_up[idx] ? tree.k_up[idx] : tree.k_down[idx];

            double dy_step = y_drift(params, v) * h + rb * std::sqrt(h * v) * rng::normal(gen);
            if (params.lambda > 0.0) {
                const int jumps = rng::poisson(gen, poisson_mean);
                for (int i = 0; i < jumps; ++i) dy_step += jump_mean + jump_sd * rng::normal(gen);
            }
            y += dy_step;
            batch.node_index(n + 1, j) = k;
            batch.y(n + 1, j) = y;
        }
    });
    return batch;
}

ExposureProfile expected_exposure(const PathBatch& batch, const PriceSurface& surface) {
    const int N = surface.tree.n_steps;
    if (batch.n_steps != N) throw std::invalid_argument("expected_exposure: path/surface step mismatch");
    if (batch.n_paths < 1) throw std::invalid_argument("expected_exposure: empty batch");

    ExposureProfile profile;
    profile.n_paths = batch.n_paths;
    profile.times.resize(N + 1);
    for (int n = 0; n <= N; ++n) profile.times[n] = n * surface.tree.h;
    profile.exposures.resize(N + 1, batch.n_paths);

    const double vol_shift = surface.params.rho / surface.params.sigma;
    for (int n = 0; n <= N; ++n) {
        for (int j = 0; j < batch.n_paths; ++j) {
            const int k = batch.node_index(n, j);
            const double s = std::exp(batch.y(n, j) + vol_shift * surface.tree.value(n, k));
            profile.exposures(n, j) = std::max(read_price(surface, n, s, k), 0.0);
        }
    }

    profile.ee = profile.exposures.rowwise().mean();
    profile.se.resize(N + 1);
    if (batch.n_paths == 1) {
        profile.se.setZero();
    } else {
        for (int n = 0; n <= N; ++n) {
            const double var =
                (profile.exposures.row(n).array() - profile.ee[n]).square().sum() / (batch.n_paths - 1);
            profile.se[n] = std::sqrt(var / batch.n_paths);
        }
    }
    return profile;
}

void dump_exposure_csv(const ExposureProfile& profile, std::ostream& out) {
    out << "t,ee,se\n";
    char buf[96];
    for (Eigen::Index n = 0; n < profile.times.size(); ++n) {
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f\n", profile.times[n], profile.ee[n], profile.se[n]);
        out << buf;
    }
}

}  // namespace cva
