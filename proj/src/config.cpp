#include "cva/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace cva {

std::string to_string(Method m) {
    return m == Method::c_htfd ? "c-htfd" : "htfd-htmc";
}

std::optional<Method> method_from_string(const std::string& s) {
    if (s == "c-htfd") return Method::c_htfd;
    if (s == "htfd-htmc") return Method::htfd_htmc;
    return std::nullopt;
}

std::optional<LabelPreset> label_preset(const std::string& label) {
    if (label == "A") return LabelPreset{50, 100, 1500};
    if (label == "B") return LabelPreset{75, 150, 2000};
    if (label == "C") return LabelPreset{100, 250, 3300};
    if (label == "D") return LabelPreset{125, 350, 6000};
    return std::nullopt;
}

std::vector<std::string> battery_labels() { return {"A", "B", "C", "D"}; }

void RunConfig::validate() const {
    params.validate();
    option.validate();
    credit.validate();
    numerics.validate();
    if (label != "custom") {
        auto preset = label_preset(label);
        if (!preset) throw std::invalid_argument("label: must be A, B, C, D or custom");
        if (numerics.n_time != preset->n_time) throw std::invalid_argument("n_time: inconsistent with label " + label);
        if (numerics.n_y != preset->n_y) throw std::invalid_argument("n_y: inconsistent with label " + label);
        if (numerics.n_paths != preset->n_paths) throw std::invalid_argument("n_paths: inconsistent with label " + label);
    }
    if (methods.empty()) throw std::invalid_argument("methods: must name at least one method");
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
    throw std::invalid_argument(key + ": " + why);
}

struct Raw {
    std::map<std::string, std::string> kv;

    bool has(const std::string& k) const { return kv.count(k) != 0; }

    std::string take_string(const std::string& k) {
        auto it = kv.find(k);
        if (it == kv.end()) bad_key(k, "missing required key");
        std::string v = it->second;
        kv.erase(it);
        return v;
    }

    double take_double(const std::string& k) {
        std::string v = take_string(k);
        try {
            size_t pos = 0;
            double x = std::stod(v, &pos);
            if (pos != v.size()) bad_key(k, "not a number: '" + v + "'");
            return x;
        } catch (const std::invalid_argument&) {
            bad_key(k, "not a number: '" + v + "'");
        } catch (const std::out_of_range&) {
            bad_key(k, "out of range: '" + v + "'");
        }
    }

    int take_int(const std::string& k) {
        double x = take_double(k);
        int i = static_cast<int>(x);
        if (static_cast<double>(i) != x) bad_key(k, "not an integer");
        return i;
    }

    std::uint64_t take_u64(const std::string& k) {
        std::string v = take_string(k);
        try {
            size_t pos = 0;
            unsigned long long x = std::stoull(v, &pos);
            if (pos != v.size()) bad_key(k, "not an unsigned integer: '" + v + "'");
            return static_cast<std::uint64_t>(x);
        } catch (const std::exception&) {
            bad_key(k, "not an unsigned integer: '" + v + "'");
        }
    }
};

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    Raw raw;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("malformed line (expected key = value): '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw std::invalid_argument("malformed line (empty key): '" + line + "'");
        if (raw.kv.count(key)) bad_key(key, "duplicate key");
        raw.kv[key] = val;
    }

    RunConfig cfg;
    cfg.params.s0 = raw.take_double("s0");
    cfg.params.v0 = raw.take_double("v0");
    cfg.params.r = raw.take_double("r");
    cfg.params.eta = raw.take_double("eta");
    cfg.params.kappa = raw.take_double("kappa");
    cfg.params.theta = raw.take_double("theta");
    cfg.params.sigma = raw.take_double("sigma");
    cfg.params.rho = raw.take_double("rho");
    cfg.params.lambda = raw.take_double("lambda");
    cfg.params.alpha = raw.take_double("alpha");
    cfg.params.beta2 = raw.take_double("beta2");

    std::string kind = raw.take_string("kind");
    if (kind == "put") cfg.option.kind = OptionKind::put;
    else if (kind == "call") cfg.option.kind = OptionKind::call;
    else bad_key("kind", "must be put or call, got '" + kind + "'");

    std::string ex = raw.take_string("exercise");
    if (ex == "european") cfg.option.exercise = ExerciseStyle::european;
    else if (ex == "american") cfg.option.exercise = ExerciseStyle::american;
    else bad_key("exercise", "must be european or american, got '" + ex + "'");

    cfg.option.strike = raw.take_double("strike");
    cfg.option.maturity = raw.take_double("maturity");
    cfg.credit.delta = raw.take_double("delta");
    cfg.credit.recovery = raw.take_double("recovery");

    cfg.label = raw.has("label") ? raw.take_string("label") : "custom";
    auto preset = label_preset(cfg.label);
    if (!preset && cfg.label != "custom") bad_key("label", "must be A, B, C, D or custom, got '" + cfg.label + "'");
    if (preset) {
        // resolution keys may be repeated in the file but must agree with the label
        cfg.numerics.n_time = preset->n_time;
        cfg.numerics.n_y = preset->n_y;
        cfg.numerics.n_paths = preset->n_paths;
        if (raw.has("n_time") && raw.take_int("n_time") != preset->n_time) bad_key("n_time", "inconsistent with label " + cfg.label);
        if (raw.has("n_y") && raw.take_int("n_y") != preset->n_y) bad_key("n_y", "inconsistent with label " + cfg.label);
        if (raw.has("n_paths") && raw.take_int("n_paths") != preset->n_paths) bad_key("n_paths", "inconsistent with label " + cfg.label);
    } else {
        cfg.numerics.n_time = raw.take_int("n_time");
        cfg.numerics.n_y = raw.take_int("n_y");
        cfg.numerics.n_paths = raw.take_int("n_paths");
    }
    if (raw.has("y_halfwidth_sds")) cfg.numerics.y_halfwidth_sds = raw.take_double("y_halfwidth_sds");
    if (raw.has("jump_trunc_sds")) cfg.numerics.jump_trunc_sds = raw.take_double("jump_trunc_sds");
    if (raw.has("seed")) cfg.numerics.seed = raw.take_u64("seed");

    if (raw.has("methods")) {
        std::string ms = raw.take_string("methods");
        std::istringstream msin(ms);
        std::string tok;
        while (std::getline(msin, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) continue;
            auto m = method_from_string(tok);
            if (!m) bad_key("methods", "unknown method '" + tok + "'");
            cfg.methods.push_back(*m);
        }
        if (cfg.methods.empty()) bad_key("methods", "must name at least one method");
    } else {
        cfg.methods = {Method::c_htfd, Method::htfd_htmc};
    }

    if (!raw.kv.empty()) bad_key(raw.kv.begin()->first, "unknown key");

    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "# scenario\n";
    out << "s0 = " << fmt_double(cfg.params.s0) << "\n";
    out << "v0 = " << fmt_double(cfg.params.v0) << "\n";
    out << "r = " << fmt_double(cfg.params.r) << "\n";
    out << "eta = " << fmt_double(cfg.params.eta) << "\n";
    out << "kappa = " << fmt_double(cfg.params.kappa) << "\n";
    out << "theta = " << fmt_double(cfg.params.theta) << "\n";
    out << "sigma = " << fmt_double(cfg.params.sigma) << "\n";
    out << "rho = " << fmt_double(cfg.params.rho) << "\n";
    out << "lambda = " << fmt_double(cfg.params.lambda) << "\n";
    out << "alpha = " << fmt_double(cfg.params.alpha) << "\n";
    out << "beta2 = " << fmt_double(cfg.params.beta2) << "\n";
    out << "kind = " << (cfg.option.kind == OptionKind::put ? "put" : "call") << "\n";
    out << "exercise = " << (cfg.option.exercise == ExerciseStyle::european ? "european" : "american") << "\n";
    out << "strike = " << fmt_double(cfg.option.strike) << "\n";
    out << "maturity = " << fmt_double(cfg.option.maturity) << "\n";
    out << "delta = " << fmt_double(cfg.credit.delta) << "\n";
    out << "recovery = " << fmt_double(cfg.credit.recovery) << "\n";
    out << "# numerics\n";
    out << "label = " << cfg.label << "\n";
    out << "n_time = " << cfg.numerics.n_time << "\n";
    out << "n_y = " << cfg.numerics.n_y << "\n";
    out << "n_paths = " << cfg.numerics.n_paths << "\n";
    out << "y_halfwidth_sds = " << fmt_double(cfg.numerics.y_halfwidth_sds) << "\n";
    out << "jump_trunc_sds = " << fmt_double(cfg.numerics.jump_trunc_sds) << "\n";
    out << "seed = " << cfg.numerics.seed << "\n";
    out << "methods = ";
    for (size_t i = 0; i < cfg.methods.size(); ++i) {
        if (i) out << ",";
        out << to_string(cfg.methods[i]);
    }
    out << "\n";
    return out.str();
}

RunConfig default_config() {
    RunConfig cfg;
    BaseCase bc = benchmark_base_case();
    cfg.params = bc.params;
    cfg.option = bc.put_european;
    cfg.credit = bc.credit;
    cfg.label = "D";
    LabelPreset d = *label_preset("D");
    cfg.numerics.n_time = d.n_time;
    cfg.numerics.n_y = d.n_y;
    cfg.numerics.n_paths = d.n_paths;
    cfg.methods = {Method::c_htfd, Method::htfd_htmc};
    return cfg;
}

}  // namespace cva
