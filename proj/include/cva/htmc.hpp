#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <ostream>

#include "cva/model.hpp"
#include "cva/surface.hpp"
#include "cva/tree.hpp"

// hybrid Monte Carlo: the variance path walks the tree (bernoulli moves
// between the multiple-jump targets), the transformed log-spot follows the
// Euler recursion
//   Y_{n+1} = Y_n + mu_y(v_n) h + rho_bar sqrt(h v_n) Z + sum of jump sizes,
// with the per-step jump count Poisson(lambda h) and jump sizes
// N(alpha, beta2). exposures are read off a price surface and
// averaged per time level.

namespace cva {

struct PathBatch {
    int n_paths = 0;
    int n_steps = 0;
    std::uint64_t seed = 0;
    // column j is path j; row n is time nh
    Eigen::MatrixXi node_index;  // (n_steps+1) x n_paths
    Eigen::MatrixXd y;           // (n_steps+1) x n_paths
};

// workers = 0 picks the hardware concurrency; results are byte-identical for
// any worker count at fixed seed
PathBatch simulate_paths(const VolTree& tree, const BatesParams& params, const NumericsConfig& cfg,
                         int workers = 0);

struct ExposureProfile {
    Eigen::VectorXd times;  // 0, h, ..., Nh
    Eigen::VectorXd ee;     // mean positive exposure per time
    Eigen::VectorXd se;     // standard error of ee
    int n_paths = 0;
    // per-path positive exposures, row n / column j; kept so CVA confidence
    // intervals can be propagated along whole paths
    Eigen::MatrixXd exposures;
};

ExposureProfile expected_exposure(const PathBatch& batch, const PriceSurface& surface);

// csv: t,ee,se with one row per time level
void dump_exposure_csv(const ExposureProfile& profile, std::ostream& out);

}  // namespace cva
