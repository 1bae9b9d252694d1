#pragma once

#include <optional>
#include <string>

#include "cva/config.hpp"
#include "cva/htmc.hpp"
#include "cva/model.hpp"
#include "cva/surface.hpp"

// credit valuation adjustment of a long option position against a
// counterparty with constant hazard delta and recovery R:
//   CVA = (1 - R) * integral over [0, T] of D(0,s) EE(s) dPD(s),
// estimated either by trapezoidal quadrature of a Monte Carlo exposure
// profile, or by solving the adjustment's own backward equation
//   dC/dt + L C + (1 - R) max(V, 0) PD'(t) = 0,   C(T) = 0,
// on the same tree/grid machinery as the pricer, coupled to the previously
// computed value surface through the source term.

namespace cva {

struct CvaResult {
    Method method = Method::c_htfd;
    std::string config_label = "custom";
    double cva = 0.0;
    std::optional<double> ci_halfwidth;  // 95% half-width; present iff MC-based
    double runtime_seconds = 0.0;
};

// two-sided 95% normal quantile
inline constexpr double z_95 = 1.959963984540054;

// trapezoidal quadrature of the discounted exposure against the default
// density. the point estimate uses the per-time means; the confidence
// interval is propagated pathwise (per-path quadrature, then a standard
// error) when the profile carries per-path exposures, because exposures at
// different times along the same path are strongly correlated.
CvaResult cva_quadrature(const ExposureProfile& profile, const DefaultModel& model, double r);

// backward solve of the adjustment equation with source
// (1 - R) max(W, 0) delta e^(-delta t), evaluated at each step's left
// endpoint, over the same tree/grid as the surface
CvaResult cva_coupled_pide(const BatesParams& params, const OptionSpec& spec,
                           const DefaultModel& model, const VolTree& tree, const YGrid& grid,
                           const JumpQuadrature& quad, const PriceSurface& surface);

// full pipeline for one method on one scenario, wall-clock timed
CvaResult run_method(Method method, const RunConfig& cfg, int workers = 0);

}  // namespace cva
