#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// model, contract, default and numerical-configuration types shared by all engines.
//
// dynamics: stochastic-volatility jump-diffusion for the spot,
//   dS/S = (r - eta) dt + sqrt(V) dZ_S + dH,   dV = kappa (theta - V) dt + sigma sqrt(V) dZ_V,
// with corr(dZ_S, dZ_V) = rho and H a compound Poisson process of intensity lambda whose
// jump factors satisfy log(1+J) ~ N(alpha, beta2), so E[1+J] = exp(alpha + beta2/2) and the
// risk-neutral drift compensator is lambda (e^(alpha + beta2/2) - 1).
// counterparty default: first jump of a Poisson clock with constant hazard delta, independent
// of the market; PD(t) = 1 - exp(-delta t), recovery fraction R.

namespace cva {

struct BatesParams {
    double s0 = 0.0;      // initial spot
    double v0 = 0.0;      // initial variance
    double r = 0.0;       // risk-free rate
    double eta = 0.0;     // dividend yield
    double kappa = 0.0;   // variance mean-reversion speed
    double theta = 0.0;   // long-run variance
    double sigma = 0.0;   // vol of vol
    double rho = 0.0;     // spot-variance correlation
    double lambda = 0.0;  // jump intensity
    double alpha = 0.0;   // mean of log(1+J)
    double beta2 = 0.0;   // variance of log(1+J)

    // sqrt(1 - rho^2), the volatility loading left on the spot once the
    // variance-driving brownian is projected out.
    double rho_bar() const { return std::sqrt(1.0 - rho * rho); }

    // drift compensator of the jump part, lambda (E[1+J] - 1)
    double jump_compensator() const { return lambda * std::expm1(alpha + 0.5 * beta2); }

    void validate() const;
    bool operator==(const BatesParams&) const = default;
};

enum class OptionKind { put, call };
enum class ExerciseStyle { european, american };

struct OptionSpec {
    OptionKind kind = OptionKind::put;
    ExerciseStyle exercise = ExerciseStyle::european;
    double strike = 0.0;    // K
    double maturity = 0.0;  // T, years

    void validate() const;
    bool operator==(const OptionSpec&) const = default;
};

// intrinsic value psi(s)
double payoff(const OptionSpec& spec, double s);

struct DefaultModel {
    double delta = 0.0;     // constant hazard rate
    double recovery = 0.0;  // R, fraction recovered on default

    void validate() const;
    bool operator==(const DefaultModel&) const = default;
};

// PD(t) = 1 - exp(-delta t)
double default_probability(const DefaultModel& model, double t);
// dPD/dt = delta exp(-delta t)
double default_density(const DefaultModel& model, double t);

// deterministic flat-rate discount factor D(0,t) = e^(-r t)
inline double discount(double r, double t) { return std::exp(-r * t); }

struct NumericsConfig {
    int n_time = 0;               // time steps N, h = T/N
    int n_y = 0;                  // y-grid points
    int n_paths = 0;              // Monte Carlo paths
    double y_halfwidth_sds = 6.0; // localization half-width, in diffusion sds
    double jump_trunc_sds = 6.0;  // jump-integral truncation, in jump sds
    std::uint64_t seed = 12345;   // RNG seed

    void validate() const;
    bool operator==(const NumericsConfig&) const = default;
};

// the benchmark scenario used throughout the test battery: put/call on a
// single name, K=100, T=1, with the spot varied over {80, 100, 120}.
struct BaseCase {
    BatesParams params;           // s0 = 100 by default
    std::vector<double> spots;    // {80, 100, 120}
    OptionSpec put_european;
    OptionSpec put_american;
    DefaultModel credit;
};

BaseCase benchmark_base_case();

}  // namespace cva
