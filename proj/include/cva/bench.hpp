#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cva/config.hpp"
#include "cva/cva.hpp"

// benchmark harness: sweeps a scenario over spot levels, resolution labels and
// methods, producing machine-readable CSV and an aligned text table. rows are
// ordered deterministically by (method, label, spot) regardless of execution
// order.

namespace cva {

struct TableRow {
    Method method = Method::c_htfd;
    std::string label;
    double s0 = 0.0;
    ExerciseStyle exercise = ExerciseStyle::european;
    double cva = 0.0;
    std::optional<double> ci_halfwidth;
    double runtime_seconds = 0.0;
};

// runs every (method, label, spot) cell on the base scenario; empty input
// lists yield an empty table
std::vector<TableRow> run_table(const RunConfig& base, const std::vector<Method>& methods,
                                const std::vector<std::string>& labels,
                                const std::vector<double>& spots, int workers = 0);

// header: method,config,S0,exercise,cva,ci,runtime
std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_text(const std::vector<TableRow>& rows);

std::string result_csv_header();
std::string result_csv_row(const TableRow& row);

// runs the MC pipeline for the scenario and writes the exposure profile CSV
void emit_exposure(const RunConfig& cfg, const std::string& path, int workers = 0);

}  // namespace cva
