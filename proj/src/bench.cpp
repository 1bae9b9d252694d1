#include "cva/bench.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cva {

namespace {

std::string fmt6(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

std::string fmt_ci(const std::optional<double>& ci) {
    return ci ? fmt6(*ci) : std::string();
}

std::string exercise_name(ExerciseStyle ex) {
    return ex == ExerciseStyle::european ? "european" : "american";
}

}  // namespace

std::vector<TableRow> run_table(const RunConfig& base, const std::vector<Method>& methods,
                                const std::vector<std::string>& labels,
                                const std::vector<double>& spots, int workers) {
    std::vector<TableRow> rows;
    for (Method method : methods) {
        for (const std::string& label : labels) {
            auto preset = label_preset(label);
            if (!preset) throw std::invalid_argument("label: unknown resolution label '" + label + "'");
            for (double s0 : spots) {
                RunConfig cfg = base;
                cfg.label = label;
                cfg.numerics.n_time = preset->n_time;
                cfg.numerics.n_y = preset->n_y;
                cfg.numerics.n_paths = preset->n_paths;
                cfg.params.s0 = s0;
                CvaResult res = run_method(method, cfg, workers);
                rows.push_back({method, label, s0, cfg.option.exercise, res.cva, res.ci_halfwidth,
                                res.runtime_seconds});
            }
        }
    }
    return rows;
}

std::string result_csv_header() { return "method,config,S0,exercise,cva,ci,runtime"; }

std::string result_csv_row(const TableRow& row) {
    std::ostringstream out;
    out << to_string(row.method) << ',' << row.label << ',' << fmt6(row.s0) << ','
        << exercise_name(row.exercise) << ',' << fmt6(row.cva) << ',' << fmt_ci(row.ci_halfwidth)
        << ',' << fmt6(row.runtime_seconds);
    return out.str();
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << result_csv_header() << '\n';
    for (const auto& row : rows) out << result_csv_row(row) << '\n';
    return out.str();
}

std::string table_to_text(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-10s %-6s %8s %-9s %12s %12s %10s\n", "method", "config",
                  "S0", "exercise", "cva", "ci", "runtime_s");
    out << buf;
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%-10s %-6s %8.2f %-9s %12.6f %12s %10.3f\n",
                      to_string(row.method).c_str(), row.label.c_str(), row.s0,
                      exercise_name(row.exercise).c_str(), row.cva,
                      row.ci_halfwidth ? fmt6(*row.ci_halfwidth).c_str() : "-",
                      row.runtime_seconds);
        out << buf;
    }
    return out.str();
}

void emit_exposure(const RunConfig& cfg, const std::string& path, int workers) {
    cfg.validate();
    VolTree tree = build_tree(cfg.params, cfg.numerics.n_time, cfg.option.maturity);
    YGrid grid = build_y_grid(cfg.params, cfg.option, cfg.numerics);
    JumpQuadrature quad = build_jump_quadrature(cfg.params, grid, cfg.numerics);
    PriceSurface surface = price_surface(cfg.params, cfg.option, tree, grid, quad);
    PathBatch batch = simulate_paths(tree, cfg.params, cfg.numerics, workers);
    ExposureProfile profile = expected_exposure(batch, surface);

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    dump_exposure_csv(profile, out);
    if (!out.good()) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace cva
