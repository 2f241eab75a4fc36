// Command-line frontend: simulate / solve / path / bench / cv / compare.
// Exit codes: 0 success, 1 solver failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "slog/annealed.hpp"
#include "slog/bench.hpp"
#include "slog/calibrate.hpp"
#include "slog/coordinate_descent.hpp"
#include "slog/cross_validate.hpp"
#include "slog/csv.hpp"
#include "slog/elastic_net.hpp"
#include "slog/group_lasso.hpp"
#include "slog/hybrid.hpp"
#include "slog/ista.hpp"
#include "slog/kkt.hpp"
#include "slog/lai_irls.hpp"
#include "slog/penalty.hpp"
#include "slog/simulate.hpp"
#include "slog/slog.hpp"

using json = nlohmann::ordered_json;
using namespace slog;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSolverFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct SeedOption {
    std::uint64_t value = kDefaultSeed;
    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", value, "RNG seed (fixed default, never time-based)")
            ->envname("SLOG_LAB_SEED");
    }
};

CoefficientRule parse_rule(const std::string& name, double value, double fraction, double lo,
                           double hi) {
    if (name == "alternating") return AlternatingRule{};
    if (name == "constant") return ConstantRule{value};
    if (name == "subset") return SubsetConstantRule{fraction, value};
    if (name == "uniform") return UniformRule{lo, hi};
    throw std::invalid_argument("unknown coefficient rule '" + name + "'");
}

json rule_to_json(const std::string& name, double value, double fraction, double lo, double hi) {
    json out;
    out["name"] = name;
    if (name == "constant" || name == "subset") out["value"] = value;
    if (name == "subset") out["fraction"] = fraction;
    if (name == "uniform") {
        out["lower"] = lo;
        out["upper"] = hi;
    }
    return out;
}

void write_json_file(const std::string& path, const json& value) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << value.dump(2) << '\n';
    if (!out) throw IoError("write to '" + path + "' failed");
}

InversionStrategy parse_inversion(const std::string& name) {
    if (name == "auto") return InversionStrategy::Auto;
    if (name == "naive") return InversionStrategy::Naive;
    if (name == "woodbury") return InversionStrategy::Woodbury;
    if (name == "miller") return InversionStrategy::Miller;
    throw std::invalid_argument("unknown inversion strategy '" + name + "'");
}

std::vector<std::vector<int>> contiguous_groups(Index p, Index group_size) {
    std::vector<std::vector<int>> groups;
    for (Index start = 0; start < p; start += group_size) {
        std::vector<int> group;
        for (Index j = start; j < std::min(start + group_size, p); ++j) {
            group.push_back(static_cast<int>(j));
        }
        groups.push_back(std::move(group));
    }
    return groups;
}

std::vector<std::vector<int>> read_groups_file(const std::string& path, Index p) {
    const Vector ids = read_vector_csv(path);
    if (ids.size() != p) {
        throw std::invalid_argument("groups file has " + std::to_string(ids.size()) +
                                    " rows, expected one per predictor (" + std::to_string(p) +
                                    ")");
    }
    std::vector<std::pair<long, std::vector<int>>> by_id;
    for (Index j = 0; j < p; ++j) {
        const long id = static_cast<long>(ids[j]);
        auto it = std::find_if(by_id.begin(), by_id.end(),
                               [&](const auto& entry) { return entry.first == id; });
        if (it == by_id.end()) {
            by_id.emplace_back(id, std::vector<int>{static_cast<int>(j)});
        } else {
            it->second.push_back(static_cast<int>(j));
        }
    }
    std::vector<std::vector<int>> groups;
    for (auto& [id, members] : by_id) groups.push_back(std::move(members));
    return groups;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string field;
    while (std::getline(ss, field, ',')) values.push_back(std::stod(field));
    if (values.empty()) throw std::invalid_argument("empty list");
    return values;
}

std::vector<Index> parse_index_list(const std::string& csv) {
    std::vector<Index> values;
    for (double v : parse_double_list(csv)) values.push_back(static_cast<Index>(v));
    return values;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(long n, long p, double rho, const std::string& rule_name, double value,
                 double fraction, double lo, double hi, double snr, std::uint64_t seed,
                 const std::string& prefix) {
    SimulationSpec spec;
    spec.n = n;
    spec.p = p;
    spec.rho = rho;
    spec.rule = parse_rule(rule_name, value, fraction, lo, hi);
    spec.snr = snr;
    spec.seed = seed;
    const SimulatedData data = generate(spec);

    write_csv(prefix + "_X.csv", design_header(p), data.raw_design);
    write_vector_csv(prefix + "_y.csv", "y", data.raw_response);
    write_vector_csv(prefix + "_beta.csv", "beta", data.true_coefficients);

    json meta;
    meta["schema"] = 1;
    meta["n"] = n;
    meta["p"] = p;
    meta["rho"] = rho;
    meta["rule"] = rule_to_json(rule_name, value, fraction, lo, hi);
    meta["snr"] = snr;
    meta["seed"] = seed;
    meta["noise_scale"] = data.noise_scale;
    write_json_file(prefix + "_meta.json", meta);

    std::cout << "simulate: wrote " << prefix << "_{X,y,beta}.csv and " << prefix
              << "_meta.json (n=" << n << ", p=" << p << ", rho=" << rho << ", seed=" << seed
              << ")\n";
    return kExitOk;
}

// ------------------------------------------------------------------- solve

struct SolveFlags {
    std::string x_file, y_file, out;
    std::string penalty = "lasso";
    std::string algorithm = "slog";
    double lambda = 0.0;
    double lambda2 = 0.0;
    std::string groups_file;
    long group_size = 0;
    double theta = 1e-13;
    double step_tol = 1e-3;
    long max_iter = 1'000'000;
    std::string inversion = "auto";
    std::string start = "uninformed";
    double start_value = 0.1;
    std::string start_file;
    double random_lo = -5.0, random_hi = 5.0;
    int cd_path_length = 50;
    double cd_objective_tol = 1e-13;
    double oracle_tol = 1e-8;
    double sigma2_init = 1e-7;
    double sigma2_decay = 0.99;
    double lai_alpha = 0.9;
    long lai_h = -1;
    bool allow_partial = false;
    SeedOption seed;
};

StartRule parse_start(const SolveFlags& flags) {
    if (flags.start == "uninformed") return UninformedStart{};
    if (flags.start == "zero") return ZeroStart{};
    if (flags.start == "constant") return ConstantStart{flags.start_value};
    if (flags.start == "random") {
        return RandomStart{flags.random_lo, flags.random_hi, flags.seed.value};
    }
    if (flags.start == "explicit") {
        if (flags.start_file.empty()) {
            throw std::invalid_argument("--start explicit requires --start-file");
        }
        return ExplicitStart{read_vector_csv(flags.start_file)};
    }
    throw std::invalid_argument("unknown start rule '" + flags.start + "'");
}

int cmd_solve(const SolveFlags& flags) {
    const Matrix raw_X = read_matrix_csv(flags.x_file);
    const Vector raw_y = read_vector_csv(flags.y_file);
    const RegressionProblem problem = standardize(raw_X, raw_y);
    const Index p = problem.n_pred();

    PenaltySpec penalty = LassoPenalty{flags.lambda};
    std::vector<std::vector<int>> groups;
    if (flags.penalty == "enet") {
        penalty = ElasticNetPenalty{flags.lambda, flags.lambda2};
    } else if (flags.penalty == "group") {
        groups = flags.groups_file.empty()
                     ? contiguous_groups(p, flags.group_size > 0 ? flags.group_size : 1)
                     : read_groups_file(flags.groups_file, p);
        penalty = GroupLassoPenalty{flags.lambda, groups};
    } else if (flags.penalty != "lasso") {
        throw std::invalid_argument("unknown penalty '" + flags.penalty + "'");
    }
    validate_penalty(penalty, p);

    SolverConfig config;
    config.start = parse_start(flags);
    config.step_tol = flags.step_tol;
    config.max_iter = flags.max_iter;
    config.threshold = flags.theta;
    config.inversion = parse_inversion(flags.inversion);

    SolverResult result;
    if (flags.algorithm == "slog") {
        if (flags.penalty == "enet") {
            result = solve_enet_slog(problem, flags.lambda, flags.lambda2, config);
        } else if (flags.penalty == "group") {
            result = solve_group_slog(problem, flags.lambda, groups, config);
        } else {
            result = solve_slog(problem, flags.lambda, config);
        }
    } else if (flags.algorithm == "cd") {
        if (flags.penalty != "lasso") {
            throw std::invalid_argument("cd supports the lasso penalty only");
        }
        CdConfig cd;
        cd.path_length = flags.cd_path_length;
        cd.objective_tol = flags.cd_objective_tol;
        cd.max_sweeps = flags.max_iter;
        result = solve_cd(problem, flags.lambda, cd);
    } else if (flags.algorithm == "ista") {
        const IstaRun run = solve_ista_traced(problem, penalty, flags.oracle_tol);
        result.coefficients = run.coefficients;
        result.iterations = run.iterations;
        result.converged = true;
        result.reason = StopReason::StepTolerance;
        result.wall_seconds = run.wall_seconds;
    } else if (flags.algorithm == "lai") {
        if (flags.penalty != "lasso") {
            throw std::invalid_argument("lai supports the lasso penalty only");
        }
        LaiConfig lai;
        lai.alpha = flags.lai_alpha;
        lai.sparsity_h = flags.lai_h >= 0 ? static_cast<int>(flags.lai_h)
                                          : static_cast<int>(p) - 1;
        lai.step_tol = flags.step_tol;
        lai.max_iter = flags.max_iter;
        result = solve_lai_irls(problem, flags.lambda, lai).result;
    } else if (flags.algorithm == "aslog") {
        if (flags.penalty != "lasso") {
            throw std::invalid_argument("aslog supports the lasso penalty only");
        }
        AnnealSchedule schedule{flags.sigma2_init, flags.sigma2_decay, flags.seed.value};
        result = solve_aslog(problem, flags.lambda, schedule, config);
    } else if (flags.algorithm == "hybrid") {
        if (flags.penalty != "lasso") {
            throw std::invalid_argument("hybrid supports the lasso penalty only");
        }
        BlockPartition partition;
        const Index size = flags.group_size > 0 ? flags.group_size
                                                : std::max<Index>(1, p / 2);
        for (const auto& block : contiguous_groups(p, size)) {
            partition.blocks.push_back(block);
            partition.solvers.push_back(BlockSolver::Slog);
        }
        result = solve_hybrid(problem, flags.lambda, partition, config);
    } else {
        throw std::invalid_argument("unknown algorithm '" + flags.algorithm + "'");
    }

    const KKTReport report = kkt_check(problem, penalty, result.coefficients);
    const Vector original = problem.coefficients_original_scale(result.coefficients);

    json out;
    out["schema"] = 1;
    out["algorithm"] = flags.algorithm;
    out["penalty"] = flags.penalty;
    out["lambda"] = flags.lambda;
    if (flags.penalty == "enet") out["lambda2"] = flags.lambda2;
    out["iterations"] = result.iterations;
    out["converged"] = result.converged;
    out["stop_reason"] = to_string(result.reason);
    out["kkt_max_violation"] = report.max_violation;
    out["nonzeros"] = static_cast<int>(report.active_set.size());
    out["wall_time_ms"] = result.wall_seconds * 1e3;
    json coeffs;
    coeffs["standardized"] = std::vector<double>(
        result.coefficients.data(), result.coefficients.data() + result.coefficients.size());
    coeffs["original"] = std::vector<double>(original.data(), original.data() + original.size());
    coeffs["intercept"] = problem.intercept_original_scale(result.coefficients);
    out["coefficients"] = coeffs;
    json config_echo;
    config_echo["theta"] = flags.theta;
    config_echo["step_tol"] = flags.step_tol;
    config_echo["max_iter"] = flags.max_iter;
    config_echo["inversion"] = flags.inversion;
    config_echo["start"] = flags.start;
    config_echo["seed"] = flags.seed.value;
    if (flags.algorithm == "cd") {
        config_echo["path_length"] = flags.cd_path_length;
        config_echo["objective_tol"] = flags.cd_objective_tol;
    }
    if (flags.algorithm == "aslog") {
        config_echo["sigma2_init"] = flags.sigma2_init;
        config_echo["sigma2_decay"] = flags.sigma2_decay;
    }
    out["config"] = config_echo;
    write_json_file(flags.out, out);

    std::printf("%s: %s after %ld iterations, %d nonzero, kkt %.3g, %.3f ms -> %s\n",
                flags.algorithm.c_str(), result.converged ? "converged" : "NOT CONVERGED",
                result.iterations, static_cast<int>(report.active_set.size()),
                report.max_violation, result.wall_seconds * 1e3, flags.out.c_str());

    if (!result.converged && !flags.allow_partial) return kExitSolverFailure;
    return kExitOk;
}

// -------------------------------------------------------------------- path

int cmd_path(const std::string& x_file, const std::string& y_file, int num, double min_ratio,
             const std::string& out) {
    if (num < 2) throw std::invalid_argument("--num must be >= 2");
    if (!(min_ratio > 0.0) || !(min_ratio < 1.0)) {
        throw std::invalid_argument("--min-ratio must lie in (0, 1)");
    }
    const RegressionProblem problem =
        standardize(read_matrix_csv(x_file), read_vector_csv(y_file));
    const double lmax = lambda_max(problem);
    if (!(lmax > 0.0)) throw NotConvergedError("X'y = 0: the path is identically zero");

    const Index p = problem.n_pred();
    std::vector<std::string> header = {"lambda", "nonzeros", "objective", "kkt_violation",
                                       "iterations"};
    for (const auto& name : design_header(p)) header.push_back("b_" + name);

    Matrix rows(num, static_cast<Index>(header.size()));
    Vector warm = Vector::Zero(p);
    for (int i = 0; i < num; ++i) {
        const double lambda =
            lmax * std::exp(std::log(min_ratio) * static_cast<double>(i) / (num - 1));
        CdConfig config;
        config.lambda_sequence = {lambda};
        config.start = ExplicitStart{warm};
        const SolverResult fit = solve_cd(problem, lambda, config);
        warm = fit.coefficients;
        const KKTReport report = kkt_check(problem, LassoPenalty{lambda}, fit.coefficients);
        int nonzeros = 0;
        for (Index j = 0; j < p; ++j) nonzeros += fit.coefficients[j] != 0.0;
        rows(i, 0) = lambda;
        rows(i, 1) = nonzeros;
        rows(i, 2) = objective(problem, LassoPenalty{lambda}, fit.coefficients);
        rows(i, 3) = report.max_violation;
        rows(i, 4) = static_cast<double>(fit.iterations);
        for (Index j = 0; j < p; ++j) rows(i, 5 + j) = fit.coefficients[j];
    }
    write_csv(out, header, rows);
    std::cout << "path: wrote " << num << " rows to " << out << "\n";
    return kExitOk;
}

// ------------------------------------------------------------------- bench

int cmd_bench(const std::string& s_list, const std::string& rho_list, const std::string& n_list,
              const std::string& p_list, int replicates, const std::string& algorithms,
              const std::string& mode, double match_distance, int jobs, std::uint64_t seed,
              double theta, double step_tol, double cd_objective_tol, double enet_lambda2,
              long group_size, const std::string& out) {
    ExperimentGrid grid;
    grid.s_values = parse_double_list(s_list);
    grid.rho_values = parse_double_list(rho_list);
    grid.n_values = parse_index_list(n_list);
    grid.p_values = parse_index_list(p_list);
    grid.replicates = replicates;
    grid.algorithms.clear();
    {
        std::stringstream ss(algorithms);
        std::string name;
        while (std::getline(ss, name, ',')) grid.algorithms.push_back(algorithm_from_string(name));
    }
    if (mode == "match") {
        grid.mode = ComparisonMode::MatchReferenceDistance;
    } else if (mode != "free") {
        throw std::invalid_argument("--mode must be 'free' or 'match'");
    }
    grid.match_distance = match_distance;
    grid.jobs = jobs;
    grid.base_seed = seed;
    grid.theta = theta;
    grid.step_tol = step_tol;
    grid.cd_objective_tol = cd_objective_tol;
    grid.enet_lambda2 = enet_lambda2;
    if (group_size > 0) grid.group_size = group_size;

    const auto records = run_grid(grid);

    std::ofstream file(out);
    if (!file) throw IoError("cannot open '" + out + "' for writing");
    file << "s,rho,n,p,replicate,seed,algorithm,iterations,wall_time_ms,dist_to_ref,"
            "kkt_violation,nonzeros,converged\n";
    for (const auto& r : records) {
        file << format_double(r.s) << ',' << format_double(r.rho) << ',' << r.n << ',' << r.p
             << ',' << r.replicate << ',' << r.seed << ',' << to_string(r.algorithm) << ','
             << r.iterations << ',' << format_double(r.wall_seconds * 1e3) << ','
             << format_double(r.dist_to_ref) << ',' << format_double(r.kkt_violation) << ','
             << r.nonzeros << ',' << (r.converged ? 1 : 0) << '\n';
    }
    if (!file) throw IoError("write to '" + out + "' failed");
    std::cout << "bench: wrote " << records.size() << " runs to " << out << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------- cv

int cmd_cv(const std::string& x_file, const std::string& y_file, const std::string& s_list,
           int folds, std::uint64_t seed, const std::string& out) {
    const RegressionProblem problem =
        standardize(read_matrix_csv(x_file), read_vector_csv(y_file));
    const std::vector<double> s_grid = parse_double_list(s_list);
    const auto points = cross_validate(problem, s_grid, folds, seed);
    const auto means = cv_aggregate(points);

    std::ofstream file(out);
    if (!file) throw IoError("cannot open '" + out + "' for writing");
    file << "s,fold,mse\n";
    for (const auto& point : points) {
        file << format_double(point.s) << ',' << point.fold << ',' << format_double(point.mse)
             << '\n';
    }
    for (const auto& [s, mean] : means) {
        file << format_double(s) << ",mean," << format_double(mean) << '\n';
    }
    if (!file) throw IoError("write to '" + out + "' failed");
    std::cout << "cv: wrote " << points.size() << " fold rows (+" << means.size()
              << " aggregates) to " << out << "\n";
    return kExitOk;
}

// ----------------------------------------------------------------- compare

int cmd_compare(long n, long p, double rho, double s, std::uint64_t seed, double start_value,
                bool use_uninformed, const std::string& algorithms, double distance,
                long max_iter, const std::string& out) {
    SimulationSpec spec;
    spec.n = n;
    spec.p = p;
    spec.rho = rho;
    spec.seed = seed;
    const SimulatedData data = generate(spec);
    const CalibrationResult calibration = calibrate_lambda(data.problem, SparsityTarget{s});
    const double lambda = calibration.lambda;
    const Vector reference = solve_ista(data.problem, LassoPenalty{lambda}, 1e-10);

    std::ofstream file(out);
    if (!file) throw IoError("cannot open '" + out + "' for writing");
    file << "iteration,algorithm,dist_to_ref,objective,active_count\n";

    std::stringstream ss(algorithms);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const Algorithm algorithm = algorithm_from_string(name);
        SolverResult result;
        const StartRule start = use_uninformed
                                    ? StartRule{UninformedStart{}}
                                    : StartRule{ConstantStart{start_value}};
        if (algorithm == Algorithm::Cd) {
            CdConfig config;
            config.lambda_sequence = {lambda};
            config.start = start;
            config.max_sweeps = max_iter;
            result = solve_cd(data.problem, lambda, config, ReferenceTarget{reference, distance});
        } else if (algorithm == Algorithm::Slog || algorithm == Algorithm::RSlog) {
            SolverConfig config;
            config.start = start;
            config.step_tol = 1e-300;
            config.max_iter = max_iter;
            config.threshold = algorithm == Algorithm::Slog ? 0.0 : 1e-13;
            config.reference = ReferenceTarget{reference, distance};
            result = solve_slog(data.problem, lambda, config);
        } else {
            throw std::invalid_argument("compare supports slog, rslog, and cd");
        }
        for (std::size_t k = 0; k < result.trace.size(); ++k) {
            const TraceEntry& entry = result.trace[k];
            file << (k + 1) << ',' << name << ',' << format_double(entry.dist_to_reference)
                 << ',' << format_double(entry.objective) << ',' << entry.active_count << '\n';
        }
        std::cout << "compare: " << name << " reached distance "
                  << format_double(result.trace.back().dist_to_reference) << " after "
                  << result.iterations << " iterations\n";
    }
    if (!file) throw IoError("write to '" + out + "' failed");
    return kExitOk;
}

template <class Body>
int guarded(Body&& body) {
    try {
        return body();
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const NotConvergedError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolverFailure;
    } catch (const UnachievableSparsity& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolverFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolverFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Penalized-regression solver toolkit and benchmark harness"};
    app.require_subcommand(1);

    // simulate ------------------------------------------------------------
    auto* simulate_cmd = app.add_subcommand("simulate", "Generate a synthetic dataset");
    long sim_n = 100, sim_p = 10;
    double sim_rho = 0.0, sim_value = 0.1, sim_fraction = 0.2, sim_lo = -0.1, sim_hi = 0.1;
    double sim_snr = 3.0;
    std::string sim_rule = "alternating", sim_prefix;
    SeedOption sim_seed;
    simulate_cmd->add_option("--n", sim_n, "Observations")->required();
    simulate_cmd->add_option("--p", sim_p, "Predictors")->required();
    simulate_cmd->add_option("--rho", sim_rho, "Pairwise correlation in [0,1)");
    simulate_cmd->add_option("--rule", sim_rule, "alternating|constant|subset|uniform");
    simulate_cmd->add_option("--value", sim_value, "Coefficient value (constant/subset rules)");
    simulate_cmd->add_option("--fraction", sim_fraction, "Nonzero fraction (subset rule)");
    simulate_cmd->add_option("--lo", sim_lo, "Lower bound (uniform rule)");
    simulate_cmd->add_option("--hi", sim_hi, "Upper bound (uniform rule)");
    simulate_cmd->add_option("--snr", sim_snr, "Signal-to-noise ratio");
    sim_seed.attach(simulate_cmd);
    simulate_cmd->add_option("--out-prefix", sim_prefix, "Output file prefix")->required();

    // solve ----------------------------------------------------------------
    auto* solve_cmd = app.add_subcommand("solve", "Fit one penalized regression");
    SolveFlags sf;
    solve_cmd->add_option("--x-file", sf.x_file, "Design CSV")->required();
    solve_cmd->add_option("--y-file", sf.y_file, "Response CSV")->required();
    solve_cmd->add_option("--lambda", sf.lambda, "Penalty strength")->required();
    solve_cmd->add_option("--penalty", sf.penalty, "lasso|enet|group");
    solve_cmd->add_option("--lambda2", sf.lambda2, "Ridge strength (enet)");
    solve_cmd->add_option("--groups-file", sf.groups_file, "CSV with one group id per predictor");
    solve_cmd->add_option("--group-size", sf.group_size, "Contiguous group size");
    solve_cmd->add_option("--algorithm", sf.algorithm, "slog|cd|ista|lai|aslog|hybrid");
    solve_cmd->add_option("--theta", sf.theta, "Zero-absorption threshold (0 disables)");
    solve_cmd->add_option("--step-tol", sf.step_tol, "Relative-step stopping tolerance");
    solve_cmd->add_option("--max-iter", sf.max_iter, "Iteration/sweep cap");
    solve_cmd->add_option("--inversion", sf.inversion, "auto|naive|woodbury|miller");
    solve_cmd->add_option("--start", sf.start, "uninformed|zero|constant|random|explicit");
    solve_cmd->add_option("--start-value", sf.start_value, "Constant start value");
    solve_cmd->add_option("--start-file", sf.start_file, "Explicit start vector CSV");
    solve_cmd->add_option("--cd-path-length", sf.cd_path_length, "Warm-start path length");
    solve_cmd->add_option("--cd-objective-tol", sf.cd_objective_tol, "CD objective tolerance");
    solve_cmd->add_option("--oracle-tol", sf.oracle_tol, "KKT tolerance (ista)");
    solve_cmd->add_option("--sigma2-init", sf.sigma2_init, "Annealing start variance");
    solve_cmd->add_option("--sigma2-decay", sf.sigma2_decay, "Annealing decay per iteration");
    solve_cmd->add_option("--alpha", sf.lai_alpha, "Smoothing decay factor (lai)");
    solve_cmd->add_option("--lai-h", sf.lai_h, "Sparsity estimate h (lai)");
    solve_cmd->add_flag("--allow-partial", sf.allow_partial,
                        "Exit 0 even when the solver did not converge");
    sf.seed.attach(solve_cmd);
    solve_cmd->add_option("--out", sf.out, "Result JSON path")->required();

    // path -----------------------------------------------------------------
    auto* path_cmd = app.add_subcommand("path", "Trace the penalty path");
    std::string path_x, path_y, path_out;
    int path_num = 50;
    double path_ratio = 1e-3;
    path_cmd->add_option("--x-file", path_x, "Design CSV")->required();
    path_cmd->add_option("--y-file", path_y, "Response CSV")->required();
    path_cmd->add_option("--num", path_num, "Grid size");
    path_cmd->add_option("--min-ratio", path_ratio, "Smallest lambda as a fraction of lambda_max");
    path_cmd->add_option("--out", path_out, "Output CSV")->required();

    // bench ----------------------------------------------------------------
    auto* bench_cmd = app.add_subcommand("bench", "Run a solver comparison grid");
    std::string bench_s = "0.5", bench_rho = "0", bench_n = "100", bench_p = "10";
    std::string bench_algorithms = "slog,cd", bench_mode = "free", bench_out;
    int bench_replicates = 1, bench_jobs = 1;
    double bench_match = 1e-3, bench_theta = 1e-13, bench_step_tol = 1e-3;
    double bench_cd_tol = 1e-13, bench_lambda2 = 0.5;
    long bench_group_size = 5;
    SeedOption bench_seed;
    bench_cmd->add_option("--s", bench_s, "Sparsity levels (comma list)");
    bench_cmd->add_option("--rho", bench_rho, "Correlations (comma list)");
    bench_cmd->add_option("--n", bench_n, "Observation counts (comma list)");
    bench_cmd->add_option("--p", bench_p, "Predictor counts (comma list)");
    bench_cmd->add_option("--replicates", bench_replicates, "Replicates per cell");
    bench_cmd->add_option("--algorithms", bench_algorithms,
                          "Comma list: slog,rslog,cd,ista,lai,aslog,enet-slog,group-slog,hybrid");
    bench_cmd->add_option("--mode", bench_mode, "free|match");
    bench_cmd->add_option("--match-distance", bench_match, "Matched-mode distance bound");
    bench_cmd->add_option("--jobs", bench_jobs, "Parallel workers (1 for timing fidelity)");
    bench_cmd->add_option("--theta", bench_theta, "rSLOG threshold");
    bench_cmd->add_option("--step-tol", bench_step_tol, "Free-running step tolerance");
    bench_cmd->add_option("--cd-objective-tol", bench_cd_tol, "CD objective tolerance");
    bench_cmd->add_option("--enet-lambda2", bench_lambda2, "Ridge strength for enet-slog");
    bench_cmd->add_option("--group-size", bench_group_size, "Group size for group-slog");
    bench_seed.attach(bench_cmd);
    bench_cmd->add_option("--out", bench_out, "Output CSV")->required();

    // cv -------------------------------------------------------------------
    auto* cv_cmd = app.add_subcommand("cv", "Cross-validate over sparsity levels");
    std::string cv_x, cv_y, cv_s = "0.25,0.5,0.75,1.0", cv_out;
    int cv_folds = 10;
    SeedOption cv_seed;
    cv_cmd->add_option("--x-file", cv_x, "Design CSV")->required();
    cv_cmd->add_option("--y-file", cv_y, "Response CSV")->required();
    cv_cmd->add_option("--s", cv_s, "Sparsity levels (comma list)");
    cv_cmd->add_option("--folds", cv_folds, "Fold count");
    cv_seed.attach(cv_cmd);
    cv_cmd->add_option("--out", cv_out, "Output CSV")->required();

    // compare ---------------------------------------------------------------
    auto* compare_cmd = app.add_subcommand("compare", "Per-iteration convergence traces");
    long cmp_n = 50, cmp_p = 3, cmp_max_iter = 2'000'000;
    double cmp_rho = 0.99, cmp_s = 0.0, cmp_start = -3.0, cmp_distance = 1e-3;
    bool cmp_uninformed = false;
    std::string cmp_algorithms = "slog,cd", cmp_out;
    SeedOption cmp_seed;
    compare_cmd->add_option("--n", cmp_n, "Observations");
    compare_cmd->add_option("--p", cmp_p, "Predictors");
    compare_cmd->add_option("--rho", cmp_rho, "Pairwise correlation");
    compare_cmd->add_option("--s", cmp_s, "Sparsity level for calibration");
    compare_cmd->add_option("--start-value", cmp_start, "Constant start value");
    compare_cmd->add_flag("--uninformed-start", cmp_uninformed, "Use the uninformed start");
    compare_cmd->add_option("--algorithms", cmp_algorithms, "Comma list: slog,rslog,cd");
    compare_cmd->add_option("--distance", cmp_distance, "Stop at this distance to the reference");
    compare_cmd->add_option("--max-iter", cmp_max_iter, "Iteration cap");
    cmp_seed.attach(compare_cmd);
    compare_cmd->add_option("--out", cmp_out, "Output CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (simulate_cmd->parsed()) {
        return guarded([&] {
            return cmd_simulate(sim_n, sim_p, sim_rho, sim_rule, sim_value, sim_fraction, sim_lo,
                                sim_hi, sim_snr, sim_seed.value, sim_prefix);
        });
    }
    if (solve_cmd->parsed()) {
        return guarded([&] { return cmd_solve(sf); });
    }
    if (path_cmd->parsed()) {
        return guarded([&] { return cmd_path(path_x, path_y, path_num, path_ratio, path_out); });
    }
    if (bench_cmd->parsed()) {
        return guarded([&] {
            return cmd_bench(bench_s, bench_rho, bench_n, bench_p, bench_replicates,
                             bench_algorithms, bench_mode, bench_match, bench_jobs,
                             bench_seed.value, bench_theta, bench_step_tol, bench_cd_tol,
                             bench_lambda2, bench_group_size, bench_out);
        });
    }
    if (cv_cmd->parsed()) {
        return guarded([&] { return cmd_cv(cv_x, cv_y, cv_s, cv_folds, cv_seed.value, cv_out); });
    }
    if (compare_cmd->parsed()) {
        return guarded([&] {
            return cmd_compare(cmp_n, cmp_p, cmp_rho, cmp_s, cmp_seed.value, cmp_start,
                               cmp_uninformed, cmp_algorithms, cmp_distance, cmp_max_iter,
                               cmp_out);
        });
    }
    return kExitUsage;
}
