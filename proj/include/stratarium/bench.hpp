#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stratarium/geometry.hpp"
#include "stratarium/latinize.hpp"
#include "stratarium/rng.hpp"
#include "stratarium/sample.hpp"

namespace stratarium {

// --- test functions -------------------------------------------------------

double sphere(const Eigen::Ref<const Eigen::VectorXd>& x);
/// Sum over i < n-1 of 100 (x[i+1] - x[i]^2)^2 + (1 - x[i])^2.
double rosenbrock(const Eigen::Ref<const Eigen::VectorXd>& x);
/// Schwefel's double sum: sum over i of (x[0] + ... + x[i])^2.
double double_sum(const Eigen::Ref<const Eigen::VectorXd>& x);

/// Random multimodal instance of the Fletcher-Powell trigonometric function on [-pi, pi]^n
/// with its global minimum 0 at `alpha`.
class FletcherPowell {
public:
    static FletcherPowell generate(Index dims, RngStream& rng, int coefficient_range = 100);
    FletcherPowell(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::VectorXd alpha);

    double operator()(const Eigen::Ref<const Eigen::VectorXd>& x) const;
    Index dim() const { return alpha_.size(); }
    const Eigen::MatrixXd& a() const { return a_; }
    const Eigen::MatrixXd& b() const { return b_; }
    const Eigen::VectorXd& alpha() const { return alpha_; }

private:
    Eigen::MatrixXd a_;
    Eigen::MatrixXd b_;
    Eigen::VectorXd alpha_;
    Eigen::VectorXd target_;
};

/// A scalar function on a box with known global minimizer.
struct TestFunction {
    std::string name;
    Hyperbox domain;
    std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)> evaluate;
    Eigen::VectorXd optimum_location;
    double optimum_value = 0;

    Index dim() const { return domain.dim(); }
};

double normal_cdf(double x);
/// Quantile of N(mean, sd^2). Acklam's rational approximation refined by one Newton step.
double inverse_normal_cdf(double p, double mean = 0, double sd = 1);

// --- sampling designs -----------------------------------------------------

enum class DesignKind {
    Srs, Lhs, Halton, Korobov, LatinKorobov, Sukharev, Grid,
    Gss, Algss, Lgss, Pss, Lpss, Algpss, Lgpss,
};

/// A named point-set generator. Tokens: srs, lhs, halton, korobov[-T|-all],
/// lkorobov[-T|-all], sukharev, grid[-B], gss[-B], algss, lgss, and pss/lpss/algpss/lgpss
/// followed by "-" and a group spec such as 2x50. B is "inf" or "b<int>" (e.g. gss-b8).
struct DesignSpec {
    DesignKind kind = DesignKind::Srs;
    BatesParameter bates{1};
    std::optional<PssGrouping> grouping;
    /// Random lattice candidates; zero enumerates every multiplier.
    std::size_t lattice_trials = 30;
    bool avoid_odd_splits = true;
    WarmStart warm_start = WarmStart::Cog;
    /// Fixed Halton start index; unset draws a random start per generated set.
    std::optional<std::uint64_t> halton_start;

    static DesignSpec parse(std::string_view token);
    std::string name() const;
};

struct GeneratedSet {
    PointSet points;
    /// Set for designs stratified over the whole cube; point i lies in stratum i.
    std::optional<Stratification> strata;
};

/// Generator bound to a point count and dimension. Deterministic selections (lattice
/// multipliers) happen once in the constructor; generate() is const and thread-safe.
class Design {
public:
    Design(DesignSpec spec, std::size_t n_points, Index dims, RngStream setup_rng);

    /// A point set in the unit cube.
    PointSet generate(RngStream& rng) const;
    GeneratedSet generate_with_strata(RngStream& rng) const;

    const DesignSpec& spec() const { return spec_; }
    std::size_t points() const { return n_points_; }
    Index dims() const { return dims_; }

private:
    PointSet group_design(Index width, RngStream& rng) const;

    DesignSpec spec_;
    std::size_t n_points_;
    Index dims_;
    std::uint64_t multiplier_ = 1;
};

// --- experiments ----------------------------------------------------------

struct ExperimentReport {
    std::string design;
    std::string function;
    Index dims = 0;
    std::size_t points = 0;
    std::size_t replications = 0;
    std::uint64_t seed = 0;
    std::vector<double> estimates;
    double mean = 0;
    double std_dev = 0;
    double median = 0;
    double ci_lo = 0;
    double ci_hi = 0;
};

/// Fills mean, unbiased standard deviation, median and a percentile-bootstrap 95% CI
/// of the mean from `report.estimates`.
void summarize(ExperimentReport& report, RngStream& rng, std::size_t resamples = 2000);

/// CSV header matching csv_row().
std::string report_csv_header();
std::string report_csv_row(const ExperimentReport& report);

/// Mean-estimation problem on the unit cube. With `normal_mean`, coordinates are mapped
/// through the N(normal_mean, 1) quantile before evaluation.
struct IntegrationProblem {
    std::string name;
    std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)> integrand;
    std::optional<double> normal_mean;
};

ExperimentReport run_integration_experiment(const DesignSpec& design, const IntegrationProblem& problem,
                                            std::size_t n_points, Index dims, std::size_t replications,
                                            std::uint64_t seed);

enum class OptimizationFunction { Sphere, Rosenbrock, DoubleSum, FletcherPowell };

std::string to_string(OptimizationFunction fn);
OptimizationFunction parse_optimization_function(std::string_view name);

/// Problem instance on [-pi, pi]^n with a uniformly located optimum (or a fresh FP instance).
TestFunction make_optimization_problem(OptimizationFunction fn, Index dims, RngStream& rng);

/// Best sampled value minus the optimum value; points are in the unit cube and are mapped
/// affinely onto the function's domain.
double optimization_error(const TestFunction& fn, const PointSet& unit_points);

/// Per replication: fresh problem instance, `budget_factor * n` points, error of the best point.
ExperimentReport run_optimization_experiment(const DesignSpec& design, OptimizationFunction fn, Index dims,
                                             std::size_t replications, std::uint64_t seed,
                                             std::size_t budget_factor = 50);

struct VariantTally {
    Index dims = 0;
    std::size_t wins_with = 0;
    std::size_t ties = 0;
    std::size_t wins_without = 0;
};

/// Covering-radius upper bound of centroid GSS with and without odd-split avoidance,
/// for every N in [n_min, n_max] and dimension in [dim_min, dim_max].
std::vector<VariantTally> run_variant_comparison(std::size_t n_min, std::size_t n_max, Index dim_min,
                                                 Index dim_max, std::uint64_t seed);

/// Worker count: STRATARIUM_THREADS if set, otherwise hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, count) across worker_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace stratarium
