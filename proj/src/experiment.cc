// Copyright 2026 The brokergraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "brokergraph/experiment.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace brokergraph {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) a++;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) b--;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); i++) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    for (auto &line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(std::move(line));
    }
    return out;
}

template <typename T>
T parse_number(std::string_view text, std::string_view field) {
    std::string t = trim(text);
    T value{};
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError("invalid value '" + t + "' for " + std::string(field));
    }
    return value;
}

double parse_real(std::string_view text, std::string_view field) {
    std::string t = trim(text);
    try {
        size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception &) {
        throw ConfigError("invalid value '" + t + "' for " + std::string(field));
    }
}

size_t parse_count(std::string_view text, std::string_view field) {
    return parse_number<size_t>(text, field);
}

bool is_json(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

void apply_profile_key(ProfileSpec &spec, const std::string &key, const std::string &value) {
    if (key == "preset") {
        spec.preset = value;
    } else if (key == "tau_h") {
        spec.tau_h = parse_number<Nanos>(value, key);
    } else if (key == "tau_o") {
        spec.tau_o = parse_number<Nanos>(value, key);
    } else if (key == "tau_m") {
        spec.tau_m = parse_number<Nanos>(value, key);
    } else if (key == "tau_cnot") {
        spec.tau_cnot = parse_number<Nanos>(value, key);
    } else if (key == "tau_rf") {
        spec.tau_rf = parse_number<Nanos>(value, key);
    } else if (key == "p") {
        spec.p = parse_real(value, key);
    } else {
        throw ConfigError("unknown profile key '" + key + "'");
    }
}

void apply_experiment_key(ExperimentConfig &c, const std::string &key, const std::string &value) {
    try {
        if (key == "graph") {
            c.graph_path = value;
        } else if (key == "edges") {
            c.edges = value;
        } else if (key == "strategy") {
            c.strategy = parse_strategy_selection(value);
        } else if (key == "trials") {
            c.trials = parse_count(value, key);
        } else if (key == "seed") {
            c.seed = parse_number<uint64_t>(value, key);
        } else if (key == "parallel_mode") {
            c.parallel_mode = parse_parallel_mode(value);
        } else if (key == "format") {
            c.format = parse_output_format(value);
        } else if (key == "workers") {
            c.workers = parse_count(value, key);
        } else if (key == "retry_cap") {
            c.retry_cap = parse_count(value, key);
        } else {
            throw ConfigError("unknown experiment key '" + key + "'");
        }
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

std::string json_scalar(const json &v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_double(v.get<double>());
    return v.dump();
}

ExperimentConfig parse_json_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed JSON config: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("JSON config must be an object");
    ExperimentConfig c;
    for (const auto &[section, body] : doc.items()) {
        if (!body.is_object()) throw ConfigError("section '" + section + "' must be an object");
        for (const auto &[key, value] : body.items()) {
            if (section == "profile") {
                apply_profile_key(c.profile, key, json_scalar(value));
            } else if (section == "experiment") {
                apply_experiment_key(c, key, json_scalar(value));
            } else {
                throw ConfigError("unknown section '" + section + "'");
            }
        }
    }
    return c;
}

std::string csv_line(const std::vector<std::string> &fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); i++) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

/// Rows of a CSV file with the given header; throws on any mismatch.
std::vector<std::vector<std::string>> read_csv(std::string_view text, const std::string &header) {
    std::vector<std::vector<std::string>> rows;
    bool seen_header = false;
    size_t width = split(header, ',').size();
    for (const auto &line : lines_of(text)) {
        if (trim(line).empty()) continue;
        if (!seen_header) {
            if (line != header) throw ConfigError("unexpected CSV header '" + line + "'");
            seen_header = true;
            continue;
        }
        auto fields = split(line, ',');
        if (fields.size() != width) throw ConfigError("CSV row has wrong width: " + line);
        rows.push_back(std::move(fields));
    }
    if (!seen_header) throw ConfigError("CSV header missing");
    return rows;
}

json parse_json_doc(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
}

const std::string kSimulationHeader = "strategy,trials,seed,mean_time_ns,stderr_ns,mean_attempts,verified_fraction";
const std::string kPredictionHeader = "tau_sequential_ns,tau_star_ns,threshold_ratio,star_over_sequential,chosen_strategy";
const std::string kSweepHeader =
    "p,ratio,threshold,tau_sequential_ns,tau_star_ns,mc_sequential_mean_ns,mc_sequential_stderr_ns,mc_star_mean_ns,"
    "mc_star_stderr_ns,closed_form_choice,mc_choice";

}  // namespace

std::string_view parallel_mode_name(ParallelMode m) {
    return m == ParallelMode::kExact ? "exact" : "paper-approx";
}

ParallelMode parse_parallel_mode(std::string_view name) {
    if (name == "exact") return ParallelMode::kExact;
    if (name == "paper-approx" || name == "paper_approx") return ParallelMode::kPaperApprox;
    throw ConfigError("unknown parallel mode '" + std::string(name) + "'");
}

StrategySelection parse_strategy_selection(std::string_view name) {
    if (name == "auto") return StrategySelection::kAuto;
    try {
        return parse_strategy(name) == Strategy::kSequentialBipartite ? StrategySelection::kSequential
                                                                       : StrategySelection::kStar;
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

std::string_view strategy_selection_name(StrategySelection s) {
    switch (s) {
        case StrategySelection::kAuto:
            return "auto";
        case StrategySelection::kSequential:
            return "sequential";
        default:
            return "star";
    }
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") return OutputFormat::kCsv;
    if (name == "json") return OutputFormat::kJson;
    throw ConfigError("unknown output format '" + std::string(name) + "'");
}

TimingProfile ProfileSpec::resolve() const {
    TimingProfile t;
    bool have_base = false;
    if (preset) {
        try {
            t = brokergraph::preset(*preset);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
        have_base = true;
    }
    auto take = [&](const auto &field, auto &dest, const char *name) {
        if (field) {
            dest = *field;
        } else if (!have_base) {
            throw ConfigError(std::string("profile is missing ") + name);
        }
    };
    take(tau_h, t.tau_h, "tau_h");
    take(tau_o, t.tau_o, "tau_o");
    take(tau_m, t.tau_m, "tau_m");
    take(tau_cnot, t.tau_cnot, "tau_cnot");
    if (tau_rf) t.tau_rf = *tau_rf;
    take(p, t.p, "p");
    try {
        t.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return t;
}

ExperimentConfig parse_config(std::string_view text) {
    if (is_json(text)) return parse_json_config(text);
    ExperimentConfig c;
    std::string section;
    size_t line_no = 0;
    for (const auto &raw : lines_of(text)) {
        line_no++;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": bad section header");
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            if (section != "profile" && section != "experiment") {
                throw ConfigError("unknown section '" + section + "'");
            }
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        if (section == "profile") {
            apply_profile_key(c.profile, key, value);
        } else if (section == "experiment") {
            apply_experiment_key(c, key, value);
        } else {
            throw ConfigError("line " + std::to_string(line_no) + ": key outside a section");
        }
    }
    return c;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
    if (!out) throw std::runtime_error("failed writing " + path);
}

ExperimentConfig load_config(const std::string &path) {
    return parse_config(read_file(path));
}

AdornedGraph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::set<Edge> seen;
    size_t n = 0;
    for (const auto &raw : lines_of(text)) {
        std::string line = raw.substr(0, raw.find('#'));
        for (const auto &chunk : split(line, ',')) {
            std::istringstream in(chunk);
            std::vector<std::string> tokens;
            std::string tok;
            while (in >> tok) tokens.push_back(tok);
            if (tokens.empty()) continue;
            if (tokens.size() != 2) throw ConfigError("edge needs two vertices: '" + trim(chunk) + "'");
            size_t a = parse_count(tokens[0], "vertex");
            size_t b = parse_count(tokens[1], "vertex");
            if (a == b) throw ConfigError("self loop on vertex " + std::to_string(a));
            Edge e = a < b ? Edge{a, b} : Edge{b, a};
            if (!seen.insert(e).second) {
                throw ConfigError("duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
            }
            edges.push_back(e);
            n = std::max(n, e.second + 1);
        }
    }
    if (edges.empty()) throw ConfigError("edge list is empty");
    return AdornedGraph::from_edges(n, edges);
}

AdornedGraph load_edge_list(const std::string &path) {
    return parse_edge_list(read_file(path));
}

AdornedGraph config_target(const ExperimentConfig &config) {
    if (config.graph_path) return load_edge_list(*config.graph_path);
    if (config.edges) return parse_edge_list(*config.edges);
    return AdornedGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("cannot format number");
    return std::string(buf, ptr);
}

SimulationRow simulation_row(Strategy s, const MonteCarloResult &r) {
    return SimulationRow{std::string(strategy_name(s)), r.trials,          r.seed,
                         r.time.mean,                   r.time.std_error,  r.attempts.mean,
                         r.verified_fraction};
}

PredictionRow prediction_row(const TimingProfile &profile) {
    PredictionRow row;
    row.tau_sequential_ns = expected_time_sequential(profile);
    row.tau_star_ns = expected_time_star(profile);
    row.threshold_ratio = threshold_ratio(profile.p);
    row.star_over_sequential = row.tau_star_ns / row.tau_sequential_ns;
    row.chosen_strategy = std::string(strategy_name(choose_strategy(profile)));
    return row;
}

std::string simulation_csv(const std::vector<SimulationRow> &rows) {
    std::string out = kSimulationHeader + "\n";
    for (const auto &r : rows) {
        out += csv_line({r.strategy, std::to_string(r.trials), std::to_string(r.seed), format_double(r.mean_time_ns),
                         format_double(r.stderr_ns), format_double(r.mean_attempts),
                         format_double(r.verified_fraction)});
    }
    return out;
}

std::vector<SimulationRow> parse_simulation_csv(std::string_view text) {
    std::vector<SimulationRow> rows;
    for (const auto &f : read_csv(text, kSimulationHeader)) {
        rows.push_back(SimulationRow{f[0], parse_count(f[1], "trials"), parse_number<uint64_t>(f[2], "seed"),
                                     parse_real(f[3], "mean_time_ns"), parse_real(f[4], "stderr_ns"),
                                     parse_real(f[5], "mean_attempts"), parse_real(f[6], "verified_fraction")});
    }
    return rows;
}

std::string simulation_json(const std::vector<SimulationRow> &rows) {
    json arr = json::array();
    for (const auto &r : rows) {
        arr.push_back({{"strategy", r.strategy},
                       {"trials", r.trials},
                       {"seed", r.seed},
                       {"mean_time_ns", r.mean_time_ns},
                       {"stderr_ns", r.stderr_ns},
                       {"mean_attempts", r.mean_attempts},
                       {"verified_fraction", r.verified_fraction}});
    }
    return json{{"results", arr}}.dump(2) + "\n";
}

std::vector<SimulationRow> parse_simulation_json(std::string_view text) {
    json doc = parse_json_doc(text);
    std::vector<SimulationRow> rows;
    try {
        for (const auto &r : doc.at("results")) {
            rows.push_back(SimulationRow{r.at("strategy").get<std::string>(), r.at("trials").get<size_t>(),
                                         r.at("seed").get<uint64_t>(), r.at("mean_time_ns").get<double>(),
                                         r.at("stderr_ns").get<double>(), r.at("mean_attempts").get<double>(),
                                         r.at("verified_fraction").get<double>()});
        }
    } catch (const json::exception &e) {
        throw ConfigError(std::string("bad results JSON: ") + e.what());
    }
    return rows;
}

std::string prediction_csv(const PredictionRow &r) {
    return kPredictionHeader + "\n" +
           csv_line({format_double(r.tau_sequential_ns), format_double(r.tau_star_ns), format_double(r.threshold_ratio),
                     format_double(r.star_over_sequential), r.chosen_strategy});
}

PredictionRow parse_prediction_csv(std::string_view text) {
    auto rows = read_csv(text, kPredictionHeader);
    if (rows.size() != 1) throw ConfigError("prediction file must hold exactly one row");
    const auto &f = rows[0];
    return PredictionRow{parse_real(f[0], "tau_sequential_ns"), parse_real(f[1], "tau_star_ns"),
                         parse_real(f[2], "threshold_ratio"), parse_real(f[3], "star_over_sequential"), f[4]};
}

std::string prediction_json(const PredictionRow &r) {
    json doc = {{"tau_sequential_ns", r.tau_sequential_ns},
                {"tau_star_ns", r.tau_star_ns},
                {"threshold_ratio", r.threshold_ratio},
                {"star_over_sequential", r.star_over_sequential},
                {"chosen_strategy", r.chosen_strategy}};
    return doc.dump(2) + "\n";
}

PredictionRow parse_prediction_json(std::string_view text) {
    json d = parse_json_doc(text);
    try {
        return PredictionRow{d.at("tau_sequential_ns").get<double>(), d.at("tau_star_ns").get<double>(),
                             d.at("threshold_ratio").get<double>(), d.at("star_over_sequential").get<double>(),
                             d.at("chosen_strategy").get<std::string>()};
    } catch (const json::exception &e) {
        throw ConfigError(std::string("bad predictions JSON: ") + e.what());
    }
}

TimingProfile sweep_profile(double p, double ratio, Nanos tau_h) {
    TimingProfile t;
    t.tau_h = tau_h;
    t.tau_o = tau_h;
    t.tau_m = 0;
    t.tau_rf = 0;
    t.tau_cnot = static_cast<Nanos>(std::llround(ratio * static_cast<double>(tau_h)));
    t.p = p;
    return t;
}

std::vector<SweepRow> run_sweep(const SweepConfig &config) {
    if (config.p_values.empty() || config.ratios.empty()) throw ConfigError("sweep ranges must be nonempty");
    for (double p : config.p_values) {
        if (!(p > 0.0 && p <= 1.0)) throw ConfigError("sweep p values must lie in (0, 1]");
    }
    for (double r : config.ratios) {
        if (r < 0) throw ConfigError("sweep ratios must be non-negative");
    }
    BuildPlan seq = plan_growth(config.target, Strategy::kSequentialBipartite);
    BuildPlan star = plan_growth(config.target, Strategy::kMultipartiteStar);
    MonteCarloOptions mc;
    mc.workers = config.workers;
    mc.trial.parallel_mode = config.parallel_mode;

    std::vector<SweepRow> rows;
    for (double p : config.p_values) {
        TimingProfile base = sweep_profile(p, config.ratios.front(), config.tau_h);
        MonteCarloResult seq_mc = run_monte_carlo(seq, base, config.trials, config.seed, mc);
        MonteCarloResult star_mc = run_monte_carlo(star, base, config.trials, config.seed, mc);
        for (double ratio : config.ratios) {
            TimingProfile t = sweep_profile(p, ratio, config.tau_h);
            double transfer = static_cast<double>(t.transfer_ns());
            SweepRow row;
            row.p = p;
            row.ratio = ratio;
            row.threshold = threshold_ratio(p);
            row.tau_sequential_ns = expected_time_sequential(t);
            row.tau_star_ns = expected_time_star(t);
            row.mc_sequential_mean_ns = seq_mc.build_time.mean + transfer * static_cast<double>(seq.rounds.size());
            row.mc_sequential_stderr_ns = seq_mc.build_time.std_error;
            row.mc_star_mean_ns = star_mc.build_time.mean + transfer * static_cast<double>(star.rounds.size());
            row.mc_star_stderr_ns = star_mc.build_time.std_error;
            row.closed_form_choice = std::string(strategy_name(choose_strategy(t)));
            row.mc_choice = std::string(strategy_name(row.mc_star_mean_ns <= row.mc_sequential_mean_ns
                                                          ? Strategy::kMultipartiteStar
                                                          : Strategy::kSequentialBipartite));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::string out = kSweepHeader + "\n";
    for (const auto &r : rows) {
        out += csv_line({format_double(r.p), format_double(r.ratio), format_double(r.threshold),
                         format_double(r.tau_sequential_ns), format_double(r.tau_star_ns),
                         format_double(r.mc_sequential_mean_ns), format_double(r.mc_sequential_stderr_ns),
                         format_double(r.mc_star_mean_ns), format_double(r.mc_star_stderr_ns), r.closed_form_choice,
                         r.mc_choice});
    }
    return out;
}

std::vector<SweepRow> parse_sweep_csv(std::string_view text) {
    std::vector<SweepRow> rows;
    for (const auto &f : read_csv(text, kSweepHeader)) {
        SweepRow r;
        r.p = parse_real(f[0], "p");
        r.ratio = parse_real(f[1], "ratio");
        r.threshold = parse_real(f[2], "threshold");
        r.tau_sequential_ns = parse_real(f[3], "tau_sequential_ns");
        r.tau_star_ns = parse_real(f[4], "tau_star_ns");
        r.mc_sequential_mean_ns = parse_real(f[5], "mc_sequential_mean_ns");
        r.mc_sequential_stderr_ns = parse_real(f[6], "mc_sequential_stderr_ns");
        r.mc_star_mean_ns = parse_real(f[7], "mc_star_mean_ns");
        r.mc_star_stderr_ns = parse_real(f[8], "mc_star_stderr_ns");
        r.closed_form_choice = f[9];
        r.mc_choice = f[10];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<SweepRow> sweep_bracket_violations(const std::vector<SweepRow> &rows) {
    std::vector<SweepRow> bad;
    for (const auto &r : rows) {
        if (r.ratio < r.threshold && r.mc_choice != "sequential") bad.push_back(r);
        if (r.ratio > r.threshold && r.mc_choice != "star") bad.push_back(r);
    }
    return bad;
}

std::vector<double> parse_value_list(std::string_view text) {
    std::vector<double> out;
    std::string t = trim(text);
    if (t.empty()) throw ConfigError("empty value list");
    if (t.find(':') != std::string::npos) {
        auto parts = split(t, ':');
        if (parts.size() != 3) throw ConfigError("range must be lo:hi:step");
        double lo = parse_real(parts[0], "range start");
        double hi = parse_real(parts[1], "range end");
        double step = parse_real(parts[2], "range step");
        if (!(step > 0) || hi < lo) throw ConfigError("range must satisfy lo <= hi and step > 0");
        size_t count = static_cast<size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (size_t i = 0; i < count; i++) {
            out.push_back(std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12);
        }
        return out;
    }
    for (const auto &part : split(t, ',')) out.push_back(parse_real(part, "value list"));
    return out;
}

}  // namespace brokergraph
