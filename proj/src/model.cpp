#include "cva/model.hpp"

namespace cva {

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& why) {
    throw std::invalid_argument(key + ": " + why);
}

}  // namespace

void BatesParams::validate() const {
    if (!(s0 > 0.0)) fail("s0", "must be > 0");
    if (!(v0 >= 0.0)) fail("v0", "must be >= 0");
    if (!(kappa > 0.0)) fail("kappa", "must be > 0");
    if (!(theta > 0.0)) fail("theta", "must be > 0");
    if (!(sigma > 0.0)) fail("sigma", "must be > 0");
    if (!(lambda >= 0.0)) fail("lambda", "must be >= 0");
    if (!(beta2 >= 0.0)) fail("beta2", "must be >= 0");
    if (!(rho > -1.0 && rho < 1.0)) fail("rho", "must lie in (-1, 1)");
    // note: the Feller condition 2 kappa theta >= sigma^2 is deliberately not
    // required; the variance tree handles v = 0 by clamping.
}

void OptionSpec::validate() const {
    if (!(strike > 0.0)) fail("strike", "must be > 0");
    if (!(maturity > 0.0)) fail("maturity", "must be > 0");
}

double payoff(const OptionSpec& spec, double s) {
    if (!(s >= 0.0)) throw std::invalid_argument("payoff: spot must be >= 0");
    if (spec.kind == OptionKind::put) return std::max(spec.strike - s, 0.0);
    return std::max(s - spec.strike, 0.0);
}

void DefaultModel::validate() const {
    if (!(delta >= 0.0)) fail("delta", "must be >= 0");
    if (!(recovery >= 0.0 && recovery <= 1.0)) fail("recovery", "must lie in [0, 1]");
}

double default_probability(const DefaultModel& model, double t) {
    if (t < 0.0) throw std::invalid_argument("default_probability: t must be >= 0");
    return -std::expm1(-model.delta * t);
}

double default_density(const DefaultModel& model, double t) {
    if (t < 0.0) throw std::invalid_argument("default_density: t must be >= 0");
    return model.delta * std::exp(-model.delta * t);
}

void NumericsConfig::validate() const {
    if (n_time < 2) fail("n_time", "must be >= 2");
    if (n_y < 3) fail("n_y", "must be >= 3");
    if (n_paths < 1) fail("n_paths", "must be >= 1");
    if (!(y_halfwidth_sds > 0.0)) fail("y_halfwidth_sds", "must be > 0");
    if (!(jump_trunc_sds > 0.0)) fail("jump_trunc_sds", "must be > 0");
}

BaseCase benchmark_base_case() {
    BaseCase bc;
    bc.params.s0 = 100.0;
    bc.params.v0 = 0.01;
    bc.params.r = 0.03;
    bc.params.eta = 0.0;
    bc.params.kappa = 2.0;
    bc.params.theta = 0.01;
    bc.params.sigma = 0.2;
    bc.params.rho = 0.5;
    bc.params.lambda = 0.1;
    bc.params.alpha = 0.1;
    bc.params.beta2 = 0.1;
    bc.spots = {80.0, 100.0, 120.0};
    bc.put_european = {OptionKind::put, ExerciseStyle::european, 100.0, 1.0};
    bc.put_american = {OptionKind::put, ExerciseStyle::american, 100.0, 1.0};
    bc.credit = {0.03, 0.4};
    return bc;
}

}  // namespace cva
