// Copyright 2026 The chshb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chshb/cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "chshb/bounds.h"
#include "chshb/error.h"
#include "chshb/experiment.h"
#include "chshb/membership.h"
#include "chshb/observables.h"
#include "chshb/table.h"

namespace chshb {

namespace {

constexpr double kCheckTolerance = 1e-9;

struct CommonOptions {
    std::string format = "csv";
    std::string out_path;
    bool degrees = false;
    uint64_t seed = 1;
};

struct TraceOptions {
    int points = 181;
    double epsilon = 0;
    int64_t shots = 0;
    std::string branch = "upper";
    std::vector<double> xis;
};

struct ClassifyOptions {
    std::vector<double> values;
    std::string file;
};

struct SimulateOptions {
    double theta = 0;
    double epsilon = 0;
    int64_t shots = 100000;
    std::string branch = "upper";
};

struct ScanOptions {
    std::vector<double> thetas;
    int points = 19;
    int64_t states = 10000;
    std::string mix = "pure";
};

struct EigenOptions {
    std::vector<double> thetas;
    int points = 181;
};

/// A command's table plus whether its internal checks passed.
struct CommandResult {
    Table table;
    bool checks_passed = true;
    std::string failure;
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

double to_radians(double v, const CommonOptions &common) {
    return common.degrees ? v * std::numbers::pi / 180.0 : v;
}

Branch parse_branch(const std::string &s) {
    return s == "lower" ? Branch::Lower : Branch::Upper;
}

std::vector<double> grid_or_thetas(const std::vector<double> &thetas, int points, const CommonOptions &common) {
    if (thetas.empty()) {
        return theta_grid(points);
    }
    std::vector<double> out;
    for (double t : thetas) {
        out.push_back(to_radians(t, common));
    }
    return out;
}

void add_common(CLI::App *cmd, CommonOptions &common) {
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", common.out_path, "Write the table to PATH instead of stdout");
    cmd->add_flag("--degrees", common.degrees, "Interpret angle arguments in degrees");
}

bool within_bounds(double value, double lower, double upper) {
    return value >= lower - kCheckTolerance && value <= upper + kCheckTolerance;
}

CommandResult cmd_trace_bound(const TraceOptions &opt, const CommonOptions &common) {
    Branch branch = parse_branch(opt.branch);
    ShotPlan plan{opt.shots, common.seed, 0};
    std::vector<ExperimentRecord> records = trace_bound(opt.points, branch, NoiseModel{opt.epsilon}, plan);
    bool sampled = opt.shots > 0;

    CommandResult result;
    Table &t = result.table;
    t.columns = {"theta", "xi_upper", "xi_lower", "bound_upper", "bound_lower", "chsh_ideal"};
    if (sampled) {
        t.columns.insert(t.columns.end(), {"chsh_est", "chsh_err"});
    }
    t.columns.push_back("ch_ideal");
    if (sampled) {
        t.columns.insert(t.columns.end(), {"ch_est", "ch_err"});
    }
    t.columns.push_back("epsilon");
    std::vector<double> xis;
    for (size_t k = 0; k < opt.xis.size(); k++) {
        xis.push_back(to_radians(opt.xis[k], common));
        t.columns.push_back("chsh_xi_" + std::to_string(k));
    }

    for (const ExperimentRecord &r : records) {
        QuantumBound bound = quantum_bound(r.theta);
        std::vector<Cell> row = {r.theta, bound.xi_upper, bound.xi_lower, r.bound_upper, r.bound_lower, r.chsh_ideal};
        if (sampled) {
            row.insert(row.end(), {r.sampled->chsh.value, r.sampled->chsh.std_error});
        }
        row.push_back(r.ch_ideal);
        if (sampled) {
            row.insert(row.end(), {r.sampled->ch.value, r.sampled->ch.std_error});
        }
        row.push_back(r.epsilon);
        MeasurementSettings settings = make_settings(r.theta);
        for (double xi : xis) {
            double v = chsh_value(settings, frontier_state(xi));
            row.push_back(v);
            if (!within_bounds(v, r.bound_lower, r.bound_upper)) {
                result.checks_passed = false;
                result.failure = "fixed-xi curve leaves the quantum bound at theta=" + format_double(r.theta);
            }
        }
        if (!within_bounds(r.chsh_ideal, r.bound_lower, r.bound_upper)) {
            result.checks_passed = false;
            result.failure = "ideal CHSH value leaves the quantum bound at theta=" + format_double(r.theta);
        }
        t.rows.push_back(std::move(row));
    }
    return result;
}

std::vector<CorrelationQuadruple> read_quadruples(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::vector<CorrelationQuadruple> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream ls(line);
        ls.imbue(std::locale::classic());
        std::vector<double> values;
        std::string token;
        while (ls >> token) {
            double v = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc() || ptr != token.data() + token.size()) {
                throw UsageError(path + ":" + std::to_string(line_no) + ": not a number: " + token);
            }
            values.push_back(v);
        }
        if (values.empty()) {
            continue;
        }
        if (values.size() != 4) {
            throw UsageError(path + ":" + std::to_string(line_no) + ": expected 4 values, got " +
                             std::to_string(values.size()));
        }
        out.push_back({{values[0], values[1], values[2], values[3]}});
    }
    return out;
}

CommandResult cmd_classify(const ClassifyOptions &opt) {
    std::vector<CorrelationQuadruple> quadruples;
    if (!opt.file.empty()) {
        quadruples = read_quadruples(opt.file);
    } else if (opt.values.size() == 4) {
        quadruples.push_back({{opt.values[0], opt.values[1], opt.values[2], opt.values[3]}});
    } else {
        throw UsageError("classify needs exactly four correlations or --file");
    }

    CommandResult result;
    Table &t = result.table;
    t.columns = {"x0", "x1", "x2", "x3", "label"};
    for (const char *kind : {"chsh", "arcsin"}) {
        for (const char *sign : {"p", "m"}) {
            for (int i = 0; i < 4; i++) {
                t.columns.push_back(std::string(kind) + "_" + sign + std::to_string(i));
            }
        }
    }
    for (const CorrelationQuadruple &q : quadruples) {
        RegionLabel label = classify(q);
        std::vector<Cell> row = {q[0], q[1], q[2], q[3], std::string(region_name(label))};
        for (auto combination : {chsh_combination, arcsin_combination}) {
            for (double sign : {1.0, -1.0}) {
                for (int i = 0; i < 4; i++) {
                    row.push_back(sign * combination(q, i));
                }
            }
        }
        t.rows.push_back(std::move(row));
    }
    return result;
}

CommandResult cmd_simulate(const SimulateOptions &opt, const CommonOptions &common) {
    double theta = to_radians(opt.theta, common);
    ShotPlan plan{opt.shots, common.seed, 0};
    ExperimentRecord r = run_point(theta, parse_branch(opt.branch), NoiseModel{opt.epsilon}, plan);

    CommandResult result;
    Table &t = result.table;
    t.columns = {"theta", "branch", "xi", "bound_upper", "bound_lower", "chsh_ideal", "ch_ideal", "epsilon", "shots"};
    std::vector<Cell> row = {r.theta,     std::string(opt.branch == "lower" ? "lower" : "upper"),
                             r.xi,        r.bound_upper,
                             r.bound_lower, r.chsh_ideal,
                             r.ch_ideal,  r.epsilon,
                             opt.shots};
    if (r.sampled) {
        const SampledStatistics &s = *r.sampled;
        t.columns.insert(t.columns.end(), {"chsh_est", "chsh_err", "ch_est", "ch_err"});
        row.insert(row.end(), {s.chsh.value, s.chsh.std_error, s.ch.value, s.ch.std_error});
        CorrelationQuadruple estimated;
        for (int pair = 0; pair < kSettingPairs; pair++) {
            t.columns.push_back("x" + std::to_string(pair) + "_est");
            t.columns.push_back("x" + std::to_string(pair) + "_err");
            row.push_back(s.correlations[pair].value);
            row.push_back(s.correlations[pair].std_error);
            estimated[pair] = s.correlations[pair].value;
        }
        // Statistical overshoot beyond the quantum bound, in units of the CHSH standard error.
        double excess = std::max(s.chsh.value - r.bound_upper, r.bound_lower - s.chsh.value);
        t.columns.push_back("excess_sigma");
        row.push_back(s.chsh.std_error > 0 ? std::max(0.0, excess / s.chsh.std_error) : (excess > kCheckTolerance ? std::numeric_limits<double>::infinity() : 0.0));
        t.columns.push_back("label_est");
        row.push_back(std::string(region_name(classify(estimated))));
    }
    t.rows.push_back(std::move(row));
    if (!within_bounds(r.chsh_ideal, r.bound_lower, r.bound_upper)) {
        result.checks_passed = false;
        result.failure = "ideal CHSH value leaves the quantum bound";
    }
    return result;
}

StateMix parse_mix(const std::string &s) {
    if (s == "mixed") {
        return StateMix::Mixed;
    }
    if (s == "both") {
        return StateMix::Both;
    }
    return StateMix::Pure;
}

CommandResult cmd_scan(const ScanOptions &opt, const CommonOptions &common) {
    std::vector<double> thetas = grid_or_thetas(opt.thetas, opt.points, common);
    CommandResult result;
    Table &t = result.table;
    t.columns = {"theta", "scan_min", "scan_max", "bound_lower", "bound_upper", "gap_lower", "gap_upper", "n_states"};
    for (size_t k = 0; k < thetas.size(); k++) {
        RngStream rng(common.seed, k);
        ScanResult scan = random_scan(thetas[k], opt.states, parse_mix(opt.mix), rng);
        QuantumBound bound = quantum_bound(thetas[k]);
        double gap_upper = bound.upper - scan.max;
        double gap_lower = scan.min - bound.lower;
        t.rows.push_back({thetas[k], scan.min, scan.max, bound.lower, bound.upper, gap_lower, gap_upper, scan.n_states});
        if (gap_upper < -kCheckTolerance || gap_lower < -kCheckTolerance) {
            result.checks_passed = false;
            result.failure = "random state exceeds the quantum bound at theta=" + format_double(thetas[k]);
        }
    }
    return result;
}

CommandResult cmd_eigen_check(const EigenOptions &opt, const CommonOptions &common) {
    std::vector<double> thetas = grid_or_thetas(opt.thetas, opt.points, common);
    CommandResult result;
    Table &t = result.table;
    t.columns = {"theta", "f_upper", "eigen_max", "f_lower", "eigen_min", "abs_diff"};
    double worst = 0;
    for (double theta : thetas) {
        QuantumBound bound = quantum_bound(theta);
        EigenExtrema eig = hermitian_eigen_extrema(chsh_operator(make_settings(theta)).matrix);
        double diff = std::max(std::abs(bound.upper - eig.max), std::abs(bound.lower - eig.min));
        worst = std::max(worst, diff);
        t.rows.push_back({theta, bound.upper, eig.max, bound.lower, eig.min, diff});
    }
    if (worst > kCheckTolerance) {
        result.checks_passed = false;
        result.failure = "analytical bound and eigenvalue extremes differ by " + format_double(worst);
    }
    return result;
}

int emit(const CommandResult &result, const CommonOptions &common, std::ostream &out, std::ostream &err) {
    OutputFormat format = common.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (common.out_path.empty()) {
        write_table(result.table, format, out);
    } else {
        std::ofstream file(common.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << common.out_path << "\n";
            return kExitUsage;
        }
        write_table(result.table, format, file);
    }
    if (!result.checks_passed) {
        err << "check failed: " << result.failure << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

bool is_usage_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::ThetaOutOfRange:
        case ErrorCode::EntryOutOfRange:
        case ErrorCode::EpsilonOutOfRange:
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::InvalidRank:
        case ErrorCode::InvalidArgument:
        case ErrorCode::EmptyCounts:
            return true;
        default:
            return false;
    }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Bounds of two-qubit CHSH correlations: analytic bound, membership tests, experiment simulation"};
    app.name("chshb");
    app.require_subcommand(1);

    CommonOptions common;
    TraceOptions trace;
    ClassifyOptions cls;
    SimulateOptions sim;
    ScanOptions scan;
    EigenOptions eig;

    auto *trace_cmd = app.add_subcommand("trace-bound", "Tabulate the analytic bound and the prepared-state CHSH over a theta grid");
    add_common(trace_cmd, common);
    trace_cmd->add_option("--points", trace.points, "Number of theta grid nodes over [0, pi]")->check(CLI::Range(2, 1000000));
    trace_cmd->add_option("--epsilon", trace.epsilon, "Werner noise weight")->check(CLI::Range(0.0, 1.0));
    trace_cmd->add_option("--shots", trace.shots, "Shots per setting pair (0 = analytic only)")->check(CLI::NonNegativeNumber);
    trace_cmd->add_option("--seed", common.seed, "Master seed");
    trace_cmd->add_option("--branch", trace.branch, "Bound branch to prepare")->check(CLI::IsMember({"upper", "lower"}));
    trace_cmd->add_option("--xi", trace.xis, "Add a fixed-xi frontier-state curve (repeatable)");

    auto *classify_cmd = app.add_subcommand("classify", "Classify correlation quadruples (<AB>, <Ab>, <aB>, <ab>)");
    add_common(classify_cmd, common);
    classify_cmd->add_option("values", cls.values, "Four correlations")->expected(0, 4);
    classify_cmd->add_option("--file", cls.file, "File with one whitespace-separated quadruple per line");

    auto *sim_cmd = app.add_subcommand("simulate", "Simulate one Bell test of the bound-tracing experiment");
    add_common(sim_cmd, common);
    sim_cmd->add_option("--theta", sim.theta, "Measurement parameter theta")->required();
    sim_cmd->add_option("--epsilon", sim.epsilon, "Werner noise weight")->check(CLI::Range(0.0, 1.0));
    sim_cmd->add_option("--shots", sim.shots, "Shots per setting pair (0 = analytic only)")->check(CLI::NonNegativeNumber);
    sim_cmd->add_option("--seed", common.seed, "Master seed");
    sim_cmd->add_option("--branch", sim.branch, "Bound branch to prepare")->check(CLI::IsMember({"upper", "lower"}));

    auto *scan_cmd = app.add_subcommand("scan", "Extremes of CHSH over random states versus the analytic bound");
    add_common(scan_cmd, common);
    scan_cmd->add_option("--theta", scan.thetas, "Theta value(s); default is a grid");
    scan_cmd->add_option("--points", scan.points, "Grid nodes when no --theta is given")->check(CLI::Range(2, 1000000));
    scan_cmd->add_option("--states", scan.states, "Random states per theta")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--mix", scan.mix, "Random state family")->check(CLI::IsMember({"pure", "mixed", "both"}));
    scan_cmd->add_option("--seed", common.seed, "Master seed");

    auto *eig_cmd = app.add_subcommand("eigen-check", "Compare the analytic bound with Bell-operator eigenvalues");
    add_common(eig_cmd, common);
    eig_cmd->add_option("--theta", eig.thetas, "Theta value(s); default is a grid");
    eig_cmd->add_option("--points", eig.points, "Grid nodes when no --theta is given")->check(CLI::Range(2, 1000000));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        CommandResult result;
        if (*trace_cmd) {
            result = cmd_trace_bound(trace, common);
        } else if (*classify_cmd) {
            result = cmd_classify(cls);
        } else if (*sim_cmd) {
            result = cmd_simulate(sim, common);
        } else if (*scan_cmd) {
            result = cmd_scan(scan, common);
        } else {
            result = cmd_eigen_check(eig, common);
        }
        return emit(result, common, out, err);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ChshError &e) {
        err << "error: " << e.what() << "\n";
        return is_usage_error(e.code()) ? kExitUsage : kExitCheckFailed;
    }
}

}  // namespace chshb
