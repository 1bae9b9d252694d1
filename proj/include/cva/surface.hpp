#pragma once

#include <Eigen/Dense>
#include <ostream>
#include <vector>

#include "cva/grid.hpp"
#include "cva/model.hpp"
#include "cva/pide.hpp"
#include "cva/tree.hpp"

// option values on the full (time, variance-node, y) lattice, produced by
// backward induction over the variance tree. at each node the terminal data
// for the one-step equation is the probability blend of the two child slices
// (the step is linear, so blending before solving is exact), followed by one
// IMEX step at the node's frozen variance; american contracts are stepped as
// bermudan with exercise at every time level. the surface maps back to spot
// space through S = exp(y + (rho/sigma) v).

namespace cva {

struct PriceSurface {
    BatesParams params;
    OptionSpec spec;
    VolTree tree;
    YGrid grid;
    // node-indexed like the tree: values[VolTree::node_index(n, k)][i]
    std::vector<Eigen::VectorXd> values;

    // value at (t = 0, s0, v0)
    double price0() const { return values[0][grid.i0]; }
};

PriceSurface price_surface(const BatesParams& params, const OptionSpec& spec, const VolTree& tree,
                           const YGrid& grid, const JumpQuadrature& quad);

// linear interpolation in y at fixed node (n, k); queries beyond the domain
// clamp to the boundary value
double read_price(const PriceSurface& surface, int n, double s, int k);

// t = 0 value slice against spot: spot,value
void dump_t0_slice_csv(const PriceSurface& surface, std::ostream& out);

}  // namespace cva
