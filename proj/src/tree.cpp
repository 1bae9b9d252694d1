#include "cva/tree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cva {

double drift_target(const BatesParams& params, double v, double h) {
    return v + params.kappa * (params.theta - v) * h;
}

VolTree build_tree(const BatesParams& params, int n_steps, double maturity) {
    params.validate();
    if (n_steps < 1) throw std::invalid_argument("n_steps: must be >= 1");
    if (!(maturity > 0.0)) throw std::invalid_argument("maturity: must be > 0");

    VolTree tree;
    tree.n_steps = n_steps;
    tree.h = maturity / n_steps;
    tree.v.resize(tree.node_count());

    const double sqrt_v0 = std::sqrt(params.v0);
    const double half_sigma_sqrt_h = 0.5 * params.sigma * std::sqrt(tree.h);
    for (int n = 0; n <= n_steps; ++n) {
        for (int k = 0; k <= n; ++k) {
            double root = sqrt_v0 + half_sigma_sqrt_h * (2 * k - n);
            tree.v[VolTree::node_index(n, k)] = root > 0.0 ? root * root : 0.0;
        }
    }

    const std::size_t branch_nodes = VolTree::node_index(n_steps, 0);
    tree.k_down.resize(branch_nodes);
    tree.k_up.resize(branch_nodes);
    tree.p_up.resize(branch_nodes);

    for (int n = 0; n < n_steps; ++n) {
        const double* next = &tree.v[VolTree::node_index(n + 1, 0)];
        for (int k = 0; k <= n; ++k) {
            const std::size_t idx = VolTree::node_index(n, k);
            const double m = drift_target(params, tree.v[idx], tree.h);

            // next-level values are nondecreasing in the index, so the target
            // sets are suffixes/prefixes; scan and fall back to the nearest
            // admissible index when the defining set is empty.
            int kd = 0;
            for (int j = k; j >= 0; --j) {
                if (m >= next[j]) { kd = j; break; }
            }
            int ku = n + 1;
            for (int j = k + 1; j <= n + 1; ++j) {
                if (m <= next[j]) { ku = j; break; }
            }

            const double vd = next[kd];
            const double vu = next[ku];
            double p;
            if (vu == vd) {
                p = 1.0;  // coincident (zero-clamped) children; fixed convention
            } else {
                p = (m - vd) / (vu - vd);
                p = std::clamp(p, 0.0, 1.0);
            }
            tree.k_down[idx] = kd;
            tree.k_up[idx] = ku;
            tree.p_up[idx] = p;
        }
    }
    return tree;
}

namespace {

void check_branch_node(const VolTree& tree, int n, int k) {
    if (n < 0 || n >= tree.n_steps || k < 0 || k > n)
        throw std::out_of_range("tree node (" + std::to_string(n) + ", " + std::to_string(k) + ") out of range");
}

}  // namespace

std::pair<int, int> jump_targets(const VolTree& tree, int n, int k) {
    check_branch_node(tree, n, k);
    const std::size_t idx = VolTree::node_index(n, k);
    return {tree.k_down[idx], tree.k_up[idx]};
}

double transition_prob(const VolTree& tree, int n, int k) {
    check_branch_node(tree, n, k);
    return tree.p_up[VolTree::node_index(n, k)];
}

void dump_tree_csv(const VolTree& tree, std::ostream& out) {
    out << "n,k,v,k_d,k_u,p_up\n";
    char buf[128];
    for (int n = 0; n <= tree.n_steps; ++n) {
        for (int k = 0; k <= n; ++k) {
            const std::size_t idx = VolTree::node_index(n, k);
            if (n < tree.n_steps) {
                std::snprintf(buf, sizeof(buf), "%d,%d,%.12g,%d,%d,%.12g\n", n, k, tree.v[idx],
                              tree.k_down[idx], tree.k_up[idx], tree.p_up[idx]);
            } else {
                std::snprintf(buf, sizeof(buf), "%d,%d,%.12g,,,\n", n, k, tree.v[idx]);
            }
            out << buf;
        }
    }
}

}  // namespace cva
