#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cva/bench.hpp"
#include "cva/config.hpp"
#include "cva/cva.hpp"
#include "cva/htmc.hpp"
#include "cva/surface.hpp"

// cva-bench: counterparty credit adjustment for equity options under a
// stochastic-volatility jump-diffusion, via a hybrid tree / finite-difference
// pricer with either a Monte Carlo exposure quadrature (htfd-htmc) or a
// coupled backward solve (c-htfd).
//
// subcommands:
//   price  risk-free option value for a scenario
//   cva    credit valuation adjustment for a scenario
//   table  benchmark battery: spots {80,100,120} x labels A-D x methods
//   init   write a default configuration file

namespace {

struct CommonArgs {
    std::string config_path;
    std::string method;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

cva::RunConfig load(const CommonArgs& args) {
    if (args.config_path.empty()) throw std::invalid_argument("--config is required");
    cva::RunConfig cfg = cva::load_config(args.config_path);
    if (args.seed) cfg.numerics.seed = *args.seed;
    if (!args.method.empty()) {
        auto m = cva::method_from_string(args.method);
        if (!m) throw std::invalid_argument("method: must be c-htfd or htfd-htmc, got '" + args.method + "'");
        cfg.methods = {*m};
    }
    return cfg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out.good()) throw std::runtime_error("failed writing output file: " + path);
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_method) {
    cmd->add_option("--config", args.config_path, "configuration file (key = value lines)");
    if (with_method) cmd->add_option("--method", args.method, "c-htfd or htfd-htmc")->check(CLI::IsMember({"c-htfd", "htfd-htmc"}));
    cmd->add_option("--seed", args.seed, "RNG seed override");
    cmd->add_option("--out", args.out_path, "output csv path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CVA engine for options under stochastic volatility with jumps"};
    app.require_subcommand(1);

    CommonArgs price_args, cva_args, table_args, init_args;
    std::string tree_dump_path, exposure_path;

    CLI::App* price_cmd = app.add_subcommand("price", "risk-free option value");
    add_common(price_cmd, price_args, false);
    price_cmd->add_option("--dump-tree", tree_dump_path, "write the variance-tree debug csv");

    CLI::App* cva_cmd = app.add_subcommand("cva", "credit valuation adjustment");
    add_common(cva_cmd, cva_args, true);
    cva_cmd->add_option("--exposure", exposure_path, "write the exposure profile csv (MC method)");

    CLI::App* table_cmd = app.add_subcommand("table", "benchmark battery over spots and resolutions");
    add_common(table_cmd, table_args, true);

    CLI::App* init_cmd = app.add_subcommand("init", "write a default configuration file");
    init_cmd->add_option("--out", init_args.out_path, "config path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*price_cmd) {
            cva::RunConfig cfg = load(price_args);
            cva::VolTree tree = cva::build_tree(cfg.params, cfg.numerics.n_time, cfg.option.maturity);
            cva::YGrid grid = cva::build_y_grid(cfg.params, cfg.option, cfg.numerics);
            cva::JumpQuadrature quad = cva::build_jump_quadrature(cfg.params, grid, cfg.numerics);
            cva::PriceSurface surface = cva::price_surface(cfg.params, cfg.option, tree, grid, quad);
            std::printf("price = %.6f\n", surface.price0());
            if (!price_args.out_path.empty()) {
                std::ofstream out(price_args.out_path);
                if (!out) throw std::runtime_error("cannot open output file: " + price_args.out_path);
                cva::dump_t0_slice_csv(surface, out);
            }
            if (!tree_dump_path.empty()) {
                std::ofstream out(tree_dump_path);
                if (!out) throw std::runtime_error("cannot open output file: " + tree_dump_path);
                cva::dump_tree_csv(tree, out);
            }
        } else if (*cva_cmd) {
            cva::RunConfig cfg = load(cva_args);
            std::vector<cva::TableRow> rows;
            for (cva::Method method : cfg.methods) {
                cva::CvaResult res = cva::run_method(method, cfg);
                rows.push_back({method, cfg.label, cfg.params.s0, cfg.option.exercise, res.cva,
                                res.ci_halfwidth, res.runtime_seconds});
            }
            std::cout << cva::table_to_text(rows);
            if (!cva_args.out_path.empty()) write_file(cva_args.out_path, cva::table_to_csv(rows));
            if (!exposure_path.empty()) {
                bool mc = false;
                for (cva::Method m : cfg.methods) mc = mc || m == cva::Method::htfd_htmc;
                if (!mc) throw std::invalid_argument("--exposure requires the htfd-htmc method");
                cva::emit_exposure(cfg, exposure_path);
            }
        } else if (*table_cmd) {
            cva::RunConfig cfg = load(table_args);
            std::vector<cva::TableRow> rows =
                cva::run_table(cfg, cfg.methods, cva::battery_labels(), {80.0, 100.0, 120.0});
            std::cout << cva::table_to_text(rows);
            if (!table_args.out_path.empty()) write_file(table_args.out_path, cva::table_to_csv(rows));
        } else if (*init_cmd) {
            std::string text = cva::serialize_config(cva::default_config());
            if (init_args.out_path.empty()) {
                std::cout << text;
            } else {
                write_file(init_args.out_path, text);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
