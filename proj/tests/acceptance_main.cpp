// acceptance gate: six go/no-go criteria for the CVA engine, each printed as
// a single PASS/FAIL line. the process exit code is the number of failed
// criteria. tolerances are pinned constants; they are part of the contract
// and must not be adjusted to make a failing build pass.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cva/bench.hpp"
#include "cva/config.hpp"
#include "cva/cva.hpp"
#include "cva/grid.hpp"
#include "cva/htmc.hpp"
#include "cva/model.hpp"
#include "cva/surface.hpp"
#include "cva/tree.hpp"
#include "mc_oracle.hpp"

namespace {

using namespace cva;

constexpr double kCvaTol = 0.0015;          // absolute, per benchmark cell
constexpr double kCellRuntimeCap = 120.0;   // seconds per benchmark cell
constexpr double kCiInflationCap = 1.5;     // vs reference interval widths
constexpr double kMomentTol = 1e-13;        // tree first-moment identity
constexpr double kForwardTol = 0.25;        // linear-payoff forward reproduction

const std::array<double, 3> kSpots = {80.0, 100.0, 120.0};

// reference values at the finest resolution (config D)
const std::array<double, 3> kEuropeanCva = {0.323724, 0.060359, 0.005589};
const std::array<double, 3> kAmericanCva = {0.339054, 0.062145, 0.005740};
// reference 95% interval half-widths per spot (the wider, american, column)
const std::array<double, 3> kReferenceCi = {0.003019, 0.001732, 0.000877};

RunConfig scenario(const std::string& label, double s0, ExerciseStyle exercise) {
    RunConfig cfg = default_config();
    cfg.label = label;
    cfg.params.s0 = s0;
    cfg.option.exercise = exercise;
    const auto preset = label_preset(label);
    cfg.numerics.n_time = preset->n_time;
    cfg.numerics.n_y = preset->n_y;
    cfg.numerics.n_paths = preset->n_paths;
    cfg.validate();
    return cfg;
}

struct CellResult {
    double cva = 0.0;
    double ci = 0.0;
    double runtime = 0.0;
};

// deterministic estimator over the battery; results are cached per criterion
CellResult run_fd(const std::string& label, double s0, ExerciseStyle ex) {
    const CvaResult res = run_method(Method::c_htfd, scenario(label, s0, ex));
    return {res.cva, 0.0, res.runtime_seconds};
}

CellResult run_mc(const std::string& label, double s0, ExerciseStyle ex) {
    const CvaResult res = run_method(Method::htfd_htmc, scenario(label, s0, ex));
    return {res.cva, res.ci_halfwidth.value_or(0.0), res.runtime_seconds};
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

// criterion 1: european benchmark reproduction at config D, within the
// per-cell budget
bool criterion_european(std::string& detail, std::array<CellResult, 3>& out) {
    bool ok = true;
    std::ostringstream msg;
    for (std::size_t i = 0; i < kSpots.size(); ++i) {
        out[i] = run_fd("D", kSpots[i], ExerciseStyle::european);
        const double err = std::abs(out[i].cva - kEuropeanCva[i]);
        if (err > kCvaTol) {
            ok = false;
            msg << " S0=" << kSpots[i] << " cva=" << fmt(out[i].cva) << " ref="
                << fmt(kEuropeanCva[i]) << " |err|=" << fmt(err) << ";";
        }
        if (out[i].runtime > kCellRuntimeCap) {
            ok = false;
            msg << " S0=" << kSpots[i] << " runtime " << fmt(out[i].runtime) << "s over budget;";
        }
    }
    detail = ok ? "three spots within 0.0015 of the reference, under 120 s each" : msg.str();
    return ok;
}

// criterion 2: american benchmark reproduction at config D
bool criterion_american(std::string& detail, std::array<CellResult, 3>& out) {
    bool ok = true;
    std::ostringstream msg;
    for (std::size_t i = 0; i < kSpots.size(); ++i) {
        out[i] = run_fd("D", kSpots[i], ExerciseStyle::american);
        const double err = std::abs(out[i].cva - kAmericanCva[i]);
        if (err > kCvaTol) {
            ok = false;
            msg << " S0=" << kSpots[i] << " cva=" << fmt(out[i].cva) << " ref="
                << fmt(kAmericanCva[i]) << " |err|=" << fmt(err) << ";";
        }
        if (out[i].runtime > kCellRuntimeCap) {
            ok = false;
            msg << " S0=" << kSpots[i] << " runtime " << fmt(out[i].runtime) << "s over budget;";
        }
    }
    detail = ok ? "three spots within 0.0015 of the reference, under 120 s each" : msg.str();
    return ok;
}

// criterion 3: refining the resolution ladder shrinks successive european
// increments at every spot
bool criterion_ladder(std::string& detail, const std::array<CellResult, 3>& level_d) {
    bool ok = true;
    std::ostringstream msg;
    for (std::size_t i = 0; i < kSpots.size(); ++i) {
        std::vector<double> values;
        for (const char* label : {"A", "B", "C"}) {
            values.push_back(run_fd(label, kSpots[i], ExerciseStyle::european).cva);
        }
        values.push_back(level_d[i].cva);
        const double d1 = std::abs(values[1] - values[0]);
        const double d2 = std::abs(values[2] - values[1]);
        const double d3 = std::abs(values[3] - values[2]);
        if (!(d2 < d1 && d3 < d2)) {
            ok = false;
            msg << " S0=" << kSpots[i] << " increments " << fmt(d1) << " -> " << fmt(d2)
                << " -> " << fmt(d3) << " not strictly shrinking;";
        }
    }
    detail = ok ? "successive A->B->C->D increments strictly shrink at all three spots"
                : msg.str();
    return ok;
}

// criterion 4: the monte carlo estimator brackets the deterministic one
// within its own interval, with interval widths comparable to the reference
bool criterion_mc(std::string& detail, const std::array<CellResult, 3>& fd_eu,
                  const std::array<CellResult, 3>& fd_am) {
    bool ok = true;
    std::ostringstream msg;
    for (int ex = 0; ex < 2; ++ex) {
        const ExerciseStyle style = ex == 0 ? ExerciseStyle::european : ExerciseStyle::american;
        const auto& fd = ex == 0 ? fd_eu : fd_am;
        for (std::size_t i = 0; i < kSpots.size(); ++i) {
            const CellResult mc = run_mc("D", kSpots[i], style);
            const double gap = std::abs(mc.cva - fd[i].cva);
            const char* tag = ex == 0 ? "eu" : "am";
            if (gap > mc.ci) {
                ok = false;
                msg << " " << tag << " S0=" << kSpots[i] << " |mc-fd|=" << fmt(gap)
                    << " > ci=" << fmt(mc.ci) << ";";
            }
            if (mc.ci > kCiInflationCap * kReferenceCi[i]) {
                ok = false;
                msg << " " << tag << " S0=" << kSpots[i] << " ci=" << fmt(mc.ci)
                    << " wider than " << fmt(kCiInflationCap * kReferenceCi[i]) << ";";
            }
        }
    }
    detail = ok ? "all six cells inside their own 95% interval, widths within 1.5x reference"
                : msg.str();
    return ok;
}

// criterion 5: the deterministic pricer agrees with a from-scratch Euler
// simulation of the dynamics (1e6 paths, 250 steps) at every spot
bool criterion_price_oracle(std::string& detail) {
    bool ok = true;
    std::ostringstream msg;
    for (double s0 : kSpots) {
        RunConfig cfg = scenario("D", s0, ExerciseStyle::european);
        const VolTree tree = build_tree(cfg.params, cfg.numerics.n_time, cfg.option.maturity);
        const YGrid grid = build_y_grid(cfg.params, cfg.option, cfg.numerics);
        const JumpQuadrature quad = build_jump_quadrature(cfg.params, grid, cfg.numerics);
        const double price = price_surface(cfg.params, cfg.option, tree, grid, quad).price0();
        const oracle::McEstimate mc =
            oracle::euler_price(cfg.params, cfg.option, 1000000, 250, 20240817);
        const double gap = std::abs(price - mc.mean);
        if (gap > 3.0 * mc.se) {
            ok = false;
            msg << " S0=" << s0 << " price=" << fmt(price) << " mc=" << fmt(mc.mean)
                << " |gap|=" << fmt(gap) << " > 3se=" << fmt(3.0 * mc.se) << ";";
        }
    }
    detail = ok ? "lattice price within 3 standard errors of an independent Euler simulation"
                : msg.str();
    return ok;
}

// criterion 6: structural invariants that must hold exactly or to stated
// tolerances
bool criterion_invariants(std::string& detail, const std::array<CellResult, 3>& fd_eu,
                          const std::array<CellResult, 3>& fd_am) {
    std::ostringstream msg;
    bool ok = true;
    auto fail = [&](const std::string& what) {
        ok = false;
        msg << " " << what << ";";
    };

    // full recovery or no hazard kill the adjustment entirely
    {
        RunConfig cfg = scenario("A", 100.0, ExerciseStyle::european);
        cfg.credit.recovery = 1.0;
        if (run_method(Method::c_htfd, cfg).cva != 0.0) fail("R=1 must zero the fd adjustment");
        if (run_method(Method::htfd_htmc, cfg).cva != 0.0) fail("R=1 must zero the mc adjustment");
        cfg.credit.recovery = 0.4;
        cfg.credit.delta = 0.0;
        if (run_method(Method::c_htfd, cfg).cva != 0.0)
            fail("delta=0 must zero the fd adjustment");
        if (run_method(Method::htfd_htmc, cfg).cva != 0.0)
            fail("delta=0 must zero the mc adjustment");
    }

    // loss-fraction linearity
    {
        RunConfig cfg = scenario("A", 100.0, ExerciseStyle::european);
        cfg.credit.recovery = 0.4;
        const double a = run_method(Method::c_htfd, cfg).cva;
        cfg.credit.recovery = 0.7;
        const double b = run_method(Method::c_htfd, cfg).cva;
        if (std::abs(a - 2.0 * b) > 1e-12 * std::max(1.0, std::abs(a)))
            fail("adjustment not linear in (1-R)");
    }

    // tree first-moment identity at every non-degenerate node
    {
        const BatesParams p = benchmark_base_case().params;
        const VolTree tree = build_tree(p, 125, 1.0);
        for (int n = 0; n < tree.n_steps && ok; ++n) {
            for (int k = 0; k <= n; ++k) {
                const auto [kd, ku] = jump_targets(tree, n, k);
                const double vd = tree.value(n + 1, kd), vu = tree.value(n + 1, ku);
                if (vu == vd) continue;
                const double m = drift_target(p, tree.value(n, k), tree.h);
                const double raw = (m - vd) / (vu - vd);
                if (raw < 0.0 || raw > 1.0) continue;
                const double pr = transition_prob(tree, n, k);
                if (std::abs(pr * vu + (1.0 - pr) * vd - m) > kMomentTol) {
                    fail("tree first moment broken at node");
                    break;
                }
            }
        }
    }

    // martingale checks: simulated discounted spot, and the lattice forward
    {
        const BatesParams p = benchmark_base_case().params;
        NumericsConfig num;
        num.n_time = 125;
        num.n_y = 350;
        num.n_paths = 100000;
        const VolTree tree = build_tree(p, num.n_time, 1.0);
        const PathBatch batch = simulate_paths(tree, p, num, 0);
        const double shift = p.rho / p.sigma;
        double sum = 0.0, sum2 = 0.0;
        for (int j = 0; j < num.n_paths; ++j) {
            const double s =
                std::exp(batch.y(num.n_time, j) + shift * tree.value(num.n_time, batch.node_index(num.n_time, j)));
            sum += s;
            sum2 += s * s;
        }
        const double mean = sum / num.n_paths;
        const double sd = std::sqrt((sum2 - num.n_paths * mean * mean) / (num.n_paths - 1));
        const double se = sd / std::sqrt(static_cast<double>(num.n_paths));
        const double disc = std::exp(-(p.r - p.eta) * 1.0);
        if (std::abs(disc * mean - p.s0) > 3.0 * disc * se)
            fail("simulated discounted spot drifts off the martingale");

        OptionSpec linear{OptionKind::call, ExerciseStyle::european, 1e-12, 1.0};
        const YGrid grid = build_y_grid(p, linear, num);
        const JumpQuadrature quad = build_jump_quadrature(p, grid, num);
        const double forward = price_surface(p, linear, tree, grid, quad).price0();
        if (std::abs(forward - p.s0) > kForwardTol)
            fail("lattice forward off by " + fmt(std::abs(forward - p.s0)));

        // exposure profile nonnegativity on the same lattice
        NumericsConfig small = num;
        small.n_paths = 6000;
        const PathBatch exp_batch = simulate_paths(tree, p, small, 0);
        const OptionSpec put = benchmark_base_case().put_european;
        const YGrid pgrid = build_y_grid(p, put, small);
        const JumpQuadrature pquad = build_jump_quadrature(p, pgrid, small);
        const PriceSurface psurf = price_surface(p, put, tree, pgrid, pquad);
        const ExposureProfile profile = expected_exposure(exp_batch, psurf);
        if (profile.ee.minCoeff() < 0.0 || profile.se.minCoeff() < 0.0)
            fail("exposure profile not nonnegative");
    }

    // ordering of the benchmark cells themselves
    for (std::size_t i = 0; i < kSpots.size(); ++i) {
        if (fd_am[i].cva < fd_eu[i].cva - 1e-12)
            fail("american adjustment below european at a spot");
        if (i > 0 && !(fd_eu[i].cva < fd_eu[i - 1].cva))
            fail("european adjustment not decreasing in the spot");
        if (i > 0 && !(fd_am[i].cva < fd_am[i - 1].cva))
            fail("american adjustment not decreasing in the spot");
    }

    // bit-level reproducibility across worker counts and repeated runs
    {
        const BatesParams p = benchmark_base_case().params;
        NumericsConfig num;
        num.n_time = 75;
        num.n_y = 150;
        num.n_paths = 2000;
        const VolTree tree = build_tree(p, num.n_time, 1.0);
        const PathBatch one = simulate_paths(tree, p, num, 1);
        const PathBatch three = simulate_paths(tree, p, num, 3);
        if (one.y != three.y || one.node_index != three.node_index)
            fail("path draws depend on the worker count");
        const RunConfig cfg = scenario("A", 100.0, ExerciseStyle::european);
        const CvaResult r1 = run_method(Method::htfd_htmc, cfg);
        const CvaResult r2 = run_method(Method::htfd_htmc, cfg);
        if (r1.cva != r2.cva) fail("mc adjustment not reproducible at a fixed seed");
    }

    detail = ok ? "degenerate credit, linearity, tree moments, martingales, exposure sign, "
                  "ordering and reproducibility all hold"
                : msg.str();
    return ok;
}

}  // namespace

int main() {
    int failures = 0;
    std::array<CellResult, 3> fd_eu{}, fd_am{};
    std::string detail;

    struct Line {
        const char* name;
        bool ok;
        std::string detail;
    };
    std::vector<Line> lines;

    {
        const bool ok = criterion_european(detail, fd_eu);
        lines.push_back({"criterion 1: european benchmark cells (config D)", ok, detail});
    }
    {
        const bool ok = criterion_american(detail, fd_am);
        lines.push_back({"criterion 2: american benchmark cells (config D)", ok, detail});
    }
    {
        const bool ok = criterion_ladder(detail, fd_eu);
        lines.push_back({"criterion 3: resolution ladder contraction", ok, detail});
    }
    {
        const bool ok = criterion_mc(detail, fd_eu, fd_am);
        lines.push_back({"criterion 4: monte carlo estimator consistency", ok, detail});
    }
    {
        const bool ok = criterion_price_oracle(detail);
        lines.push_back({"criterion 5: independent pricing oracle", ok, detail});
    }
    {
        const bool ok = criterion_invariants(detail, fd_eu, fd_am);
        lines.push_back({"criterion 6: structural invariants", ok, detail});
    }

    for (const Line& line : lines) {
        if (!line.ok) ++failures;
        std::printf("%s: %s - %s\n", line.ok ? "PASS" : "FAIL", line.name, line.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(lines.size()) - failures,
                lines.size());
    return failures;
}
