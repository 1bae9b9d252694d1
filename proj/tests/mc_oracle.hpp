#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "cva/model.hpp"
#include "cva/rng.hpp"
#include "cva/surface.hpp"
#include "cva/tree.hpp"

// independent plain-Euler Monte Carlo of the spot/variance dynamics, used as
// a cross-check oracle for the lattice pricer. log-spot Euler with the exact
// compound-Poisson jump law per step, full-truncation Euler for the variance.

namespace oracle {

struct McEstimate {
    double mean = 0.0;
    double se = 0.0;
};

struct EulerPath {
    // per time level: log-spot and variance
    std::vector<double> x;
    std::vector<double> v;
};

inline EulerPath euler_path(const cva::BatesParams& p, double maturity, int n_steps,
                            std::uint64_t seed, std::uint64_t stream) {
    auto gen = cva::rng::stream_rng(seed, stream);
    const double dt = maturity / n_steps;
    const double sqdt = std::sqrt(dt);
    const double comp = p.jump_compensator();
    const double rb = p.rho_bar();
    const double jump_sd = std::sqrt(p.beta2);
    const double pois_mean = p.lambda * dt;

    EulerPath path;
    path.x.resize(n_steps + 1);
    path.v.resize(n_steps + 1);
    path.x[0] = std::log(p.s0);
    path.v[0] = p.v0;
    double x = path.x[0], v = p.v0;
    for (int n = 0; n < n_steps; ++n) {
        const double vp = std::max(v, 0.0);
        const double z1 = cva::rng::normal(gen);
        const double z2 = cva::rng::normal(gen);
        const double zv = p.rho * z1 + rb * z2;
        double dx = (p.r - p.eta - comp - 0.5 * vp) * dt + std::sqrt(vp) * sqdt * z1;
        if (p.lambda > 0.0) {
            const int jumps = cva::rng::poisson(gen, pois_mean);
            for (int i = 0; i < jumps; ++i) dx += p.alpha + jump_sd * cva::rng::normal(gen);
        }
        x += dx;
        v += p.kappa * (p.theta - vp) * dt + p.sigma * std::sqrt(vp) * sqdt * zv;
        path.x[n + 1] = x;
        path.v[n + 1] = v;
    }
    return path;
}

// discounted European option value by direct simulation of the dynamics
inline McEstimate euler_price(const cva::BatesParams& p, const cva::OptionSpec& spec,
                              long n_paths, int n_steps, std::uint64_t seed) {
    double sum = 0.0, sum2 = 0.0;
    for (long j = 0; j < n_paths; ++j) {
        EulerPath path = euler_path(p, spec.maturity, n_steps, seed, static_cast<std::uint64_t>(j));
        const double pay = cva::payoff(spec, std::exp(path.x.back()));
        sum += pay;
        sum2 += pay * pay;
    }
    const double mean = sum / n_paths;
    const double var = (sum2 - n_paths * mean * mean) / (n_paths - 1);
    const double disc = std::exp(-p.r * spec.maturity);
    return {disc * mean, disc * std::sqrt(var / n_paths)};
}

// exposure profile oracle: simulate the dynamics directly, then read the same
// price surface at the nearest variance node of each level
inline void euler_exposure(const cva::PriceSurface& surface, long n_paths, std::uint64_t seed,
                           std::vector<double>& ee, std::vector<double>& se) {
    const cva::VolTree& tree = surface.tree;
    const cva::BatesParams& p = surface.params;
    const int N = tree.n_steps;
    ee.assign(N + 1, 0.0);
    se.assign(N + 1, 0.0);
    std::vector<double> sum(N + 1, 0.0), sum2(N + 1, 0.0);
    for (long j = 0; j < n_paths; ++j) {
        EulerPath path = euler_path(p, N * tree.h, N, seed, static_cast<std::uint64_t>(j));
        for (int n = 0; n <= N; ++n) {
            // nearest tree value at this level (level values are nondecreasing in k)
            const double* lo = &tree.v[cva::VolTree::node_index(n, 0)];
            const double* hi = lo + n + 1;
            const double vq = std::max(path.v[n], 0.0);
            const double* it = std::lower_bound(lo, hi, vq);
            int k = static_cast<int>(it - lo);
            if (k > 0 && (k == n + 1 || vq - lo[k - 1] < lo[k] - vq)) --k;
            const double exp_pos =
                std::max(cva::read_price(surface, n, std::exp(path.x[n]), k), 0.0);
            sum[n] += exp_pos;
            sum2[n] += exp_pos * exp_pos;
        }
    }
    for (int n = 0; n <= N; ++n) {
        ee[n] = sum[n] / n_paths;
        const double var = (sum2[n] - n_paths * ee[n] * ee[n]) / (n_paths - 1);
        se[n] = std::sqrt(std::max(var, 0.0) / n_paths);
    }
}

}  // namespace oracle
