#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "cva/model.hpp"

// recombining binomial tree for the square-root variance process
//   dV = kappa (theta - V) dt + sigma sqrt(V) dZ.
// node values are v[n][k] = (sqrt(V0) + (sigma/2)(2k - n) sqrt(h))^2, clamped
// to zero when the inner expression goes negative, so no Feller-type
// restriction is needed. each node connects to a pair of (possibly multiple)
// jump targets on the next level chosen so that the clamped up-probability
// matches the first local moment E[V_{n+1}] = v + kappa (theta - v) h.

namespace cva {

struct VolTree {
    int n_steps = 0;  // N
    double h = 0.0;   // step size, maturity / N

    // lower-triangular storage, node (n, k) with 0 <= k <= n at n(n+1)/2 + k
    std::vector<double> v;       // levels 0..N
    std::vector<int> k_down;     // levels 0..N-1
    std::vector<int> k_up;       // levels 0..N-1
    std::vector<double> p_up;    // levels 0..N-1

    static std::size_t node_index(int n, int k) {
        return static_cast<std::size_t>(n) * (n + 1) / 2 + static_cast<std::size_t>(k);
    }
    std::size_t node_count() const {
        return static_cast<std::size_t>(n_steps + 1) * (n_steps + 2) / 2;
    }
    double value(int n, int k) const { return v[node_index(n, k)]; }
};

VolTree build_tree(const BatesParams& params, int n_steps, double maturity);

// multiple-jump targets of node (n, k): (k_d, k_u) with k_d in [0, k] and
// k_u in [k+1, n+1]; out-of-range indices are rejected
std::pair<int, int> jump_targets(const VolTree& tree, int n, int k);

// clamped up-probability of node (n, k)
double transition_prob(const VolTree& tree, int n, int k);

// one-step conditional mean target v + kappa (theta - v) h
double drift_target(const BatesParams& params, double v, double h);

// debug dump: n,k,v,k_d,k_u,p_up (targets/probability empty on the last level)
void dump_tree_csv(const VolTree& tree, std::ostream& out);

}  // namespace cva
