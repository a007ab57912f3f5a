// stratarium command-line front end: sample, measure, bench.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stratarium/bench.hpp"
#include "stratarium/errors.hpp"
#include "stratarium/io.hpp"
#include "stratarium/latinize.hpp"
#include "stratarium/metrics.hpp"
#include "stratarium/stratify.hpp"

namespace {

using namespace stratarium;

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

void emit(const std::string& path, const std::string& content)
{
    if (path.empty() || path == "-")
        std::cout << content << std::flush;
    else
        write_file_atomic(path, content);
}

struct SampleArgs {
    std::string method;
    std::size_t points = 0;
    long dims = 0;
    std::string bates = "1";
    std::uint64_t seed = 0;
    std::string groups;
    std::size_t trials = 30;
    std::uint64_t start = 0;
    std::string warm = "cog";
    bool no_avoid_odd = false;
    std::string output;
    bool header = false;
    std::string strata_path;
};

DesignSpec design_from_method(const SampleArgs& a)
{
    static const std::vector<std::string> grouped = {"pss", "lpss", "algpss", "lgpss"};
    const bool needs_groups = std::find(grouped.begin(), grouped.end(), a.method) != grouped.end();
    if (needs_groups && a.groups.empty())
        throw std::invalid_argument("method " + a.method + " needs --groups, e.g. --groups 2x50");
    if (!needs_groups && !a.groups.empty())
        throw std::invalid_argument("--groups only applies to pss, lpss, algpss and lgpss");

    DesignSpec spec = DesignSpec::parse(needs_groups ? a.method + "-" + a.groups : a.method);
    spec.bates = spec.kind == DesignKind::Sukharev ? BatesParameter::infinity() : BatesParameter::parse(a.bates);
    spec.lattice_trials = a.trials;
    spec.avoid_odd_splits = !a.no_avoid_odd;
    spec.halton_start = a.start;
    if (a.warm == "cog")
        spec.warm_start = WarmStart::Cog;
    else if (a.warm == "greedy")
        spec.warm_start = WarmStart::RandomizedGreedy;
    else
        throw std::invalid_argument("--warm must be cog or greedy");
    return spec;
}

int run_sample(const SampleArgs& a)
{
    const DesignSpec spec = design_from_method(a);
    const RngStream root(a.seed);
    const Design design(spec, a.points, a.dims, root.child("design-setup"));
    RngStream stream = root.child("sample");
    GeneratedSet out = design.generate_with_strata(stream);
    if (!a.strata_path.empty()) {
        if (!out.strata)
            throw std::invalid_argument("method " + a.method + " has no whole-cube stratification to emit");
        write_file_atomic(a.strata_path, to_json(*out.strata));
    }
    emit(a.output, to_csv(out.points, a.header));
    return 0;
}

struct MeasureArgs {
    std::string input;
    std::string strata_path;
    std::size_t restarts = 10;
    std::size_t mc_samples = 0;
    std::uint64_t seed = 0;
    bool lh = false;
    std::string output;
};

int run_measure(const MeasureArgs& a)
{
    const std::string text = a.input.empty() || a.input == "-"
                                 ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                 : read_file(a.input);
    PointMatrix m = parse_csv(text);
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index k = 0; k < m.cols(); ++k) {
            if (!(m(i, k) >= 0.0 && m(i, k) <= 1.0))
                throw std::invalid_argument("row " + std::to_string(i + 1) + " lies outside the unit cube");
        }
    }
    const PointSet points(std::move(m));
    const auto N = static_cast<std::size_t>(points.size());
    const Index n = points.dim();
    const RngStream root(a.seed);

    nlohmann::ordered_json doc;
    doc["t_discrepancy"] = discrepancy_t(points);
    doc["t_sq_expected_random"] = expected_discrepancy_sq(N, n);
    if (!a.strata_path.empty()) {
        auto strat = stratification_from_json(read_file(a.strata_path));
        doc["cr_upper"] = covering_radius_upper(points, strat);
    } else {
        RngStream retro = root.child("retro");
        doc["cr_upper"] = covering_radius_upper_retro(points, a.restarts, retro);
    }
    RngStream mc = root.child("mc-lower");
    doc["cr_mc_lower"] = covering_radius_mc_lower(points, a.mc_samples ? a.mc_samples : default_mc_samples(n), mc);
    doc["cr_general_lower"] = covering_radius_general_lower(N, n);
    doc["separation"] = N >= 2 ? nlohmann::ordered_json(separation_distance(points)) : nlohmann::ordered_json(nullptr);
    if (a.lh) {
        auto v = lh_violations(points);
        std::size_t total = 0;
        for (auto x : v)
            total += x;
        doc["lh_violations"] = {{"per_dimension", v}, {"total", total}};
    }
    emit(a.output, doc.dump(2) + "\n");
    return 0;
}

std::vector<std::string> split_list(const std::string& list)
{
    std::vector<std::string> out;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty())
            out.push_back(item);
    if (out.empty())
        throw std::invalid_argument("empty design list");
    return out;
}

struct BenchArgs {
    std::string fn = "rosenbrock";
    std::string transform;
    std::string designs = "srs";
    std::size_t points = 625;
    long dims = 2;
    std::size_t reps = 200;
    std::uint64_t seed = 0;
    std::size_t budget = 50;
    std::size_t n_min = 4, n_max = 1024;
    long dim_min = 2, dim_max = 10;
    std::string output;
};

IntegrationProblem integration_problem(const BenchArgs& a)
{
    IntegrationProblem problem;
    problem.name = a.fn;
    if (a.fn == "rosenbrock")
        problem.integrand = [](const Eigen::Ref<const Eigen::VectorXd>& x) { return rosenbrock(x); };
    else if (a.fn == "doublesum")
        problem.integrand = [](const Eigen::Ref<const Eigen::VectorXd>& x) { return double_sum(x); };
    else if (a.fn == "sphere")
        problem.integrand = [](const Eigen::Ref<const Eigen::VectorXd>& x) { return sphere(x); };
    else
        throw std::invalid_argument("unknown integrand '" + a.fn + "'");
    if (!a.transform.empty()) {
        const std::string prefix = "normal:";
        if (a.transform.rfind(prefix, 0) != 0)
            throw std::invalid_argument("--transform must look like normal:MEAN");
        std::size_t used = 0;
        const std::string value = a.transform.substr(prefix.size());
        double mean = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument("--transform must look like normal:MEAN");
        problem.normal_mean = mean;
        problem.name += "-normal" + format_double(mean);
    }
    return problem;
}

int run_bench_integrate(const BenchArgs& a)
{
    const auto problem = integration_problem(a);
    std::string out = report_csv_header() + "\n";
    for (const auto& token : split_list(a.designs)) {
        auto report = run_integration_experiment(DesignSpec::parse(token), problem, a.points, a.dims, a.reps, a.seed);
        out += report_csv_row(report) + "\n";
    }
    emit(a.output, out);
    return 0;
}

int run_bench_optimize(const BenchArgs& a)
{
    const auto fn = parse_optimization_function(a.fn);
    std::string out = report_csv_header() + "\n";
    for (const auto& token : split_list(a.designs)) {
        auto report = run_optimization_experiment(DesignSpec::parse(token), fn, a.dims, a.reps, a.seed, a.budget);
        out += report_csv_row(report) + "\n";
    }
    emit(a.output, out);
    return 0;
}

int run_bench_variants(const BenchArgs& a)
{
    std::string out = "n,wins_with,ties,wins_without\n";
    for (const auto& t : run_variant_comparison(a.n_min, a.n_max, a.dim_min, a.dim_max, a.seed))
        out += std::to_string(t.dims) + "," + std::to_string(t.wins_with) + "," + std::to_string(t.ties) + "," +
               std::to_string(t.wins_without) + "\n";
    emit(a.output, out);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized stratified sampling: generate, measure and benchmark point sets"};
    app.require_subcommand(1);

    SampleArgs sa;
    auto* sample = app.add_subcommand("sample", "Generate a point set in the unit cube (CSV)");
    sample->add_option("--method", sa.method, "srs, lhs, gss, algss, lgss, pss, lpss, algpss, lgpss, sukharev, grid, halton, korobov, lkorobov")
        ->required();
    sample->add_option("--N", sa.points, "Number of points")->required()->check(CLI::PositiveNumber);
    sample->add_option("--n", sa.dims, "Dimension")->required()->check(CLI::PositiveNumber);
    sample->add_option("--b", sa.bates, "Bates parameter: positive integer or inf");
    sample->add_option("--seed", sa.seed, "Random seed");
    sample->add_option("--groups", sa.groups, "Group spec for partially stratified designs, e.g. 2x50 or 2x2+1x2");
    sample->add_option("--trials", sa.trials, "Random lattice candidates (korobov, lkorobov)")->check(CLI::PositiveNumber);
    sample->add_option("--start", sa.start, "Halton start index");
    sample->add_option("--warm", sa.warm, "Matching warm start for exact latinization: cog or greedy");
    sample->add_flag("--no-avoid-odd", sa.no_avoid_odd, "Allow splits into two odd halves");
    sample->add_option("-o,--output", sa.output, "Output path (default stdout)");
    sample->add_flag("--header", sa.header, "Emit an x0,x1,... header line");
    sample->add_option("--emit-strata", sa.strata_path, "Also write the stratification as JSON");

    MeasureArgs ma;
    auto* measure = app.add_subcommand("measure", "Discrepancy and covering-radius bounds of a CSV point set");
    measure->add_option("input", ma.input, "Input CSV (default stdin)");
    measure->add_option("--strata", ma.strata_path, "Stratification JSON for the covering-radius upper bound");
    measure->add_option("--restarts", ma.restarts, "Mean-split restarts when no strata are given")->check(CLI::PositiveNumber);
    measure->add_option("--mc-samples", ma.mc_samples, "Monte Carlo test points (default 2e4 * n)");
    measure->add_option("--seed", ma.seed, "Random seed");
    measure->add_flag("--lh", ma.lh, "Report Latin hypercube violations");
    measure->add_option("-o,--output", ma.output, "Output path (default stdout)");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Run benchmark harnesses");
    bench->require_subcommand(1);
    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--designs", ba.designs, "Comma-separated design tokens");
        cmd->add_option("--n", ba.dims, "Dimension")->check(CLI::PositiveNumber);
        cmd->add_option("--reps", ba.reps, "Replications")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", ba.seed, "Random seed");
        cmd->add_option("-o,--output", ba.output, "Output path (default stdout)");
    };
    auto* integrate = bench->add_subcommand("integrate", "Mean-estimation experiments across designs");
    common(integrate);
    integrate->add_option("--fn", ba.fn, "rosenbrock, doublesum or sphere");
    integrate->add_option("--transform", ba.transform, "normal:MEAN maps coordinates through N(MEAN,1)");
    integrate->add_option("--N", ba.points, "Points per set")->check(CLI::PositiveNumber);
    auto* optimize = bench->add_subcommand("optimize", "Best-sampled-value error on shifted test functions");
    common(optimize);
    optimize->add_option("--fn", ba.fn, "sphere, rosenbrock, doublesum or fp");
    optimize->add_option("--budget", ba.budget, "Points per dimension")->check(CLI::PositiveNumber);
    auto* variants = bench->add_subcommand("variants", "Odd-split avoidance on/off covering-radius tally");
    variants->add_option("--seed", ba.seed, "Random seed");
    variants->add_option("--N-min", ba.n_min, "Smallest N");
    variants->add_option("--N-max", ba.n_max, "Largest N");
    variants->add_option("--n-min", ba.dim_min, "Smallest dimension");
    variants->add_option("--n-max", ba.dim_max, "Largest dimension");
    variants->add_option("-o,--output", ba.output, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*sample)
            return run_sample(sa);
        if (*measure)
            return run_measure(ma);
        if (*integrate)
            return run_bench_integrate(ba);
        if (*optimize)
            return run_bench_optimize(ba);
        if (*variants)
            return run_bench_variants(ba);
    } catch (const InfeasibleLatinization& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
