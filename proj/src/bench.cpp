#include "stratarium/bench.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "stratarium/io.hpp"
#include "stratarium/metrics.hpp"
#include "stratarium/stratify.hpp"

namespace stratarium {

double sphere(const Eigen::Ref<const Eigen::VectorXd>& x)
{
    return x.squaredNorm();
}

double rosenbrock(const Eigen::Ref<const Eigen::VectorXd>& x)
{
    double sum = 0;
    for (Index i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1 - x[i];
        sum += 100 * a * a + b * b;
    }
    return sum;
}

double double_sum(const Eigen::Ref<const Eigen::VectorXd>& x)
{
    double prefix = 0;
    double sum = 0;
    for (Index i = 0; i < x.size(); ++i) {
        prefix += x[i];
        sum += prefix * prefix;
    }
    return sum;
}

FletcherPowell::FletcherPowell(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::VectorXd alpha)
    : a_(std::move(a)), b_(std::move(b)), alpha_(std::move(alpha))
{
    const Index n = alpha_.size();
    if (n < 1 || a_.rows() != n || a_.cols() != n || b_.rows() != n || b_.cols() != n)
        throw std::invalid_argument("Fletcher-Powell matrices must be n x n");
    target_ = a_ * alpha_.array().sin().matrix() + b_ * alpha_.array().cos().matrix();
}

FletcherPowell FletcherPowell::generate(Index dims, RngStream& rng, int coefficient_range)
{
    if (dims < 1 || coefficient_range < 0)
        throw std::invalid_argument("bad Fletcher-Powell parameters");
    const auto span = static_cast<std::uint64_t>(2 * coefficient_range + 1);
    auto coefficient = [&] { return static_cast<double>(static_cast<std::int64_t>(rng.below(span)) - coefficient_range); };
    Eigen::MatrixXd a(dims, dims);
    Eigen::MatrixXd b(dims, dims);
    for (Index i = 0; i < dims; ++i)
        for (Index j = 0; j < dims; ++j)
            a(i, j) = coefficient();
    for (Index i = 0; i < dims; ++i)
        for (Index j = 0; j < dims; ++j)
            b(i, j) = coefficient();
    Eigen::VectorXd alpha(dims);
    for (Index j = 0; j < dims; ++j)
        alpha[j] = rng.uniform(-std::numbers::pi, std::numbers::pi);
    return FletcherPowell(std::move(a), std::move(b), std::move(alpha));
}

double FletcherPowell::operator()(const Eigen::Ref<const Eigen::VectorXd>& x) const
{
    if (x.size() != dim())
        throw std::invalid_argument("dimension mismatch");
    Eigen::VectorXd value = a_ * x.array().sin().matrix() + b_ * x.array().cos().matrix();
    return (target_ - value).squaredNorm();
}

double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double inverse_normal_cdf(double p, double mean, double sd)
{
    if (!(p > 0 && p < 1))
        throw std::invalid_argument("probability must lie in (0, 1)");
    if (!(sd > 0))
        throw std::invalid_argument("standard deviation must be positive");
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                   1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                   6.680131188771972e+01,  -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                   -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                   3.754408661907416e+00};
    constexpr double low = 0.02425;
    double x;
    if (p < low) {
        const double q = std::sqrt(-2 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    } else if (p <= 1 - low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    } else {
        const double q = std::sqrt(-2 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    // Newton step on the CDF. Upper tail is refined through the complement for accuracy.
    const double density = std::exp(-0.5 * x * x) / std::sqrt(2 * std::numbers::pi);
    const double residual = p > 0.5 ? (1 - p) - 0.5 * std::erfc(x / std::numbers::sqrt2) : normal_cdf(x) - p;
    x -= residual / density;
    return mean + sd * x;
}

// --- designs --------------------------------------------------------------

namespace {

std::size_t parse_count(std::string_view text, std::string_view token)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("bad design token '" + std::string(token) + "'");
    return value;
}

BatesParameter parse_bates_suffix(std::string_view suffix, std::string_view token)
{
    if (suffix == "inf")
        return BatesParameter::infinity();
    if (suffix.size() > 1 && suffix.front() == 'b')
        return BatesParameter(static_cast<unsigned>(parse_count(suffix.substr(1), token)));
    throw std::invalid_argument("bad design token '" + std::string(token) + "'");
}

} // namespace

DesignSpec DesignSpec::parse(std::string_view token)
{
    DesignSpec spec;
    auto dash = token.find('-');
    std::string_view head = token.substr(0, dash);
    std::string_view tail = dash == std::string_view::npos ? std::string_view{} : token.substr(dash + 1);
    bool has_tail = dash != std::string_view::npos;

    struct Entry {
        std::string_view name;
        DesignKind kind;
    };
    static constexpr Entry kinds[] = {
        {"srs", DesignKind::Srs},         {"lhs", DesignKind::Lhs},       {"halton", DesignKind::Halton},
        {"korobov", DesignKind::Korobov}, {"lkorobov", DesignKind::LatinKorobov},
        {"sukharev", DesignKind::Sukharev}, {"grid", DesignKind::Grid},   {"gss", DesignKind::Gss},
        {"algss", DesignKind::Algss},     {"lgss", DesignKind::Lgss},     {"pss", DesignKind::Pss},
        {"lpss", DesignKind::Lpss},       {"algpss", DesignKind::Algpss}, {"lgpss", DesignKind::Lgpss},
    };
    auto it = std::find_if(std::begin(kinds), std::end(kinds), [&](const Entry& e) { return e.name == head; });
    if (it == std::end(kinds))
        throw std::invalid_argument("unknown design '" + std::string(token) + "'");
    spec.kind = it->kind;

    switch (spec.kind) {
    case DesignKind::Korobov:
    case DesignKind::LatinKorobov:
        if (has_tail)
            spec.lattice_trials = tail == "all" ? 0 : parse_count(tail, token);
        break;
    case DesignKind::Grid:
    case DesignKind::Gss:
        if (has_tail)
            spec.bates = parse_bates_suffix(tail, token);
        break;
    case DesignKind::Sukharev:
        spec.bates = BatesParameter::infinity();
        if (has_tail)
            throw std::invalid_argument("bad design token '" + std::string(token) + "'");
        break;
    case DesignKind::Pss:
    case DesignKind::Lpss:
    case DesignKind::Algpss:
    case DesignKind::Lgpss:
        if (!has_tail)
            throw std::invalid_argument("design '" + std::string(token) + "' needs a group spec, e.g. pss-2x50");
        spec.grouping = PssGrouping::parse(tail);
        break;
    default:
        if (has_tail)
            throw std::invalid_argument("bad design token '" + std::string(token) + "'");
    }
    return spec;
}

std::string DesignSpec::name() const
{
    switch (kind) {
    case DesignKind::Srs: return "srs";
    case DesignKind::Lhs: return "lhs";
    case DesignKind::Halton: return "halton";
    case DesignKind::Korobov:
        return "korobov-" + (lattice_trials == 0 ? std::string("all") : std::to_string(lattice_trials));
    case DesignKind::LatinKorobov:
        return "lkorobov-" + (lattice_trials == 0 ? std::string("all") : std::to_string(lattice_trials));
    case DesignKind::Sukharev: return "sukharev";
    case DesignKind::Grid:
        return bates.is_infinite() ? "grid-inf" : bates.draws() == 1 ? "grid" : "grid-b" + bates.to_string();
    case DesignKind::Gss:
        return bates.is_infinite() ? "gss-inf" : bates.draws() == 1 ? "gss" : "gss-b" + bates.to_string();
    case DesignKind::Algss: return "algss";
    case DesignKind::Lgss: return "lgss";
    case DesignKind::Pss: return "pss-" + grouping->to_string();
    case DesignKind::Lpss: return "lpss-" + grouping->to_string();
    case DesignKind::Algpss: return "algpss-" + grouping->to_string();
    case DesignKind::Lgpss: return "lgpss-" + grouping->to_string();
    }
    return "?";
}

namespace {

std::vector<std::size_t> cube_bins(std::size_t n_points, Index dims, const char* what)
{
    const auto k = integer_root(n_points, dims);
    std::uint64_t power = 1;
    for (Index i = 0; i < dims; ++i)
        power *= k;
    if (power != n_points)
        throw std::invalid_argument(std::string(what) + " needs N to be a perfect n-th power");
    return std::vector<std::size_t>(static_cast<std::size_t>(dims), static_cast<std::size_t>(k));
}

} // namespace

Design::Design(DesignSpec spec, std::size_t n_points, Index dims, RngStream setup_rng)
    : spec_(std::move(spec)), n_points_(n_points), dims_(dims)
{
    if (n_points == 0 || dims < 1)
        throw std::invalid_argument("design needs positive N and n");
    switch (spec_.kind) {
    case DesignKind::Halton:
        if (dims > kMaxHaltonDims)
            throw std::invalid_argument("Halton sequence supports at most 20 dimensions");
        break;
    case DesignKind::Korobov:
    case DesignKind::LatinKorobov: {
        const std::size_t trials =
            spec_.lattice_trials == 0 ? std::max<std::size_t>(n_points, 2) - 1 : spec_.lattice_trials;
        auto chosen = spec_.kind == DesignKind::Korobov ? select_korobov(n_points, dims, trials, setup_rng)
                                                        : select_latin_korobov(n_points, dims, trials, setup_rng);
        multiplier_ = chosen.multiplier;
        break;
    }
    case DesignKind::Sukharev:
        cube_bins(n_points, dims, "Sukharev grid");
        break;
    case DesignKind::Grid:
        cube_bins(n_points, dims, "grid stratification");
        break;
    case DesignKind::Pss:
    case DesignKind::Lpss:
    case DesignKind::Algpss:
    case DesignKind::Lgpss:
        if (!spec_.grouping || spec_.grouping->dim() != dims)
            throw std::invalid_argument("group spec does not cover the " + std::to_string(dims) + " dimensions");
        if (spec_.kind == DesignKind::Pss || spec_.kind == DesignKind::Lpss)
            for (const auto& g : spec_.grouping->groups)
                cube_bins(n_points, static_cast<Index>(g.size()), "partially stratified design");
        break;
    default:
        break;
    }
}

PointSet Design::group_design(Index width, RngStream& rng) const
{
    const Hyperbox unit = Hyperbox::unit(width);
    RngStream partition_rng = rng.child("partition");
    RngStream point_rng = rng.child("points");
    switch (spec_.kind) {
    case DesignKind::Pss:
        return sample_stratified(grid_partition(cube_bins(n_points_, width, "pss"), unit), spec_.bates, point_rng);
    case DesignKind::Lpss:
        return lgss(grid_partition(cube_bins(n_points_, width, "pss"), unit), point_rng, spec_.warm_start).points;
    case DesignKind::Algpss:
        return algss(gss_partition(n_points_, unit, {spec_.avoid_odd_splits}, partition_rng), point_rng).points;
    case DesignKind::Lgpss:
        return lgss(gss_partition(n_points_, unit, {spec_.avoid_odd_splits}, partition_rng), point_rng,
                    spec_.warm_start)
            .points;
    default:
        throw std::logic_error("not a partially stratified design");
    }
}

PointSet Design::generate(RngStream& rng) const
{
    return generate_with_strata(rng).points;
}

GeneratedSet Design::generate_with_strata(RngStream& rng) const
{
    const Hyperbox unit = Hyperbox::unit(dims_);
    RngStream partition_rng = rng.child("partition");
    RngStream point_rng = rng.child("points");

    switch (spec_.kind) {
    case DesignKind::Srs:
        return {sample_srs(n_points_, unit, point_rng), {}};
    case DesignKind::Lhs:
        return {sample_lhs(n_points_, dims_, point_rng), {}};
    case DesignKind::Halton: {
        std::uint64_t start = spec_.halton_start ? *spec_.halton_start : point_rng.below(std::uint64_t{1} << 20);
        return {sample_halton(n_points_, dims_, start), {}};
    }
    case DesignKind::Korobov:
    case DesignKind::LatinKorobov: {
        KorobovSpec lattice{n_points_, multiplier_, {}};
        for (int attempt = 0; attempt < 64; ++attempt) {
            lattice.shift = Eigen::VectorXd(dims_);
            for (Index k = 0; k < dims_; ++k)
                lattice.shift[k] = point_rng.uniform();
            auto pts = sample_korobov(lattice, dims_);
            if (spec_.kind == DesignKind::Korobov)
                return {std::move(pts), {}};
            auto v = lh_violations(pts);
            if (std::all_of(v.begin(), v.end(), [](std::size_t x) { return x == 0; }))
                return {std::move(pts), {}};
        }
        lattice.shift = Eigen::VectorXd::Zero(dims_);
        return {sample_korobov(lattice, dims_), {}};
    }
    case DesignKind::Sukharev:
    case DesignKind::Grid: {
        auto s = grid_partition(cube_bins(n_points_, dims_, "grid"), unit);
        auto pts = sample_stratified(s, spec_.bates, point_rng);
        return {std::move(pts), std::move(s)};
    }
    case DesignKind::Gss: {
        auto s = gss_partition(n_points_, unit, {spec_.avoid_odd_splits}, partition_rng);
        auto pts = sample_stratified(s, spec_.bates, point_rng);
        return {std::move(pts), std::move(s)};
    }
    case DesignKind::Algss: {
        auto s = gss_partition(n_points_, unit, {spec_.avoid_odd_splits}, partition_rng);
        auto pts = algss(s, point_rng).points;
        return {std::move(pts), std::move(s)};
    }
    case DesignKind::Lgss: {
        auto s = gss_partition(n_points_, unit, {spec_.avoid_odd_splits}, partition_rng);
        auto pts = lgss(s, point_rng, spec_.warm_start).points;
        return {std::move(pts), std::move(s)};
    }
    case DesignKind::Pss:
    case DesignKind::Lpss:
    case DesignKind::Algpss:
    case DesignKind::Lgpss: {
        std::vector<PointSet> parts;
        const auto& groups = spec_.grouping->groups;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            RngStream group_rng = rng.child("group", g);
            parts.push_back(group_design(static_cast<Index>(groups[g].size()), group_rng));
        }
        RngStream shuffle_rng = rng.child("pad");
        return {pss_compose(parts, *spec_.grouping, shuffle_rng), {}};
    }
    }
    throw std::logic_error("unhandled design");
}

// --- experiments ----------------------------------------------------------

std::size_t worker_count()
{
    if (const char* env = std::getenv("STRATARIUM_THREADS")) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), value);
        if (ec == std::errc() && value > 0)
            return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body)
{
    const std::size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

void summarize(ExperimentReport& report, RngStream& rng, std::size_t resamples)
{
    const auto& x = report.estimates;
    report.replications = x.size();
    if (x.empty())
        throw std::invalid_argument("no estimates to summarize");
    const auto R = static_cast<double>(x.size());
    CompensatedSum total;
    for (double v : x)
        total.add(v);
    report.mean = total.value() / R;
    CompensatedSum squares;
    for (double v : x)
        squares.add((v - report.mean) * (v - report.mean));
    report.std_dev = x.size() > 1 ? std::sqrt(squares.value() / (R - 1)) : 0.0;

    std::vector<double> sorted = x;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    report.median = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);

    std::vector<double> means(resamples);
    for (auto& m : means) {
        CompensatedSum s;
        for (std::size_t i = 0; i < x.size(); ++i)
            s.add(x[rng.below(x.size())]);
        m = s.value() / R;
    }
    std::sort(means.begin(), means.end());
    auto quantile = [&](double q) {
        const double pos = q * static_cast<double>(means.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const auto hi = std::min(lo + 1, means.size() - 1);
        return means[lo] + (pos - static_cast<double>(lo)) * (means[hi] - means[lo]);
    };
    report.ci_lo = quantile(0.025);
    report.ci_hi = quantile(0.975);
}

std::string report_csv_header()
{
    return "design,function,n,N,replications,mean,std,median,ci_lo,ci_hi,seed";
}

std::string report_csv_row(const ExperimentReport& r)
{
    return r.design + "," + r.function + "," + std::to_string(r.dims) + "," + std::to_string(r.points) + "," +
           std::to_string(r.replications) + "," + format_double(r.mean) + "," + format_double(r.std_dev) + "," +
           format_double(r.median) + "," + format_double(r.ci_lo) + "," + format_double(r.ci_hi) + "," +
           std::to_string(r.seed);
}

ExperimentReport run_integration_experiment(const DesignSpec& design_spec, const IntegrationProblem& problem,
                                            std::size_t n_points, Index dims, std::size_t replications,
                                            std::uint64_t seed)
{
    if (replications == 0)
        throw std::invalid_argument("need at least one replication");
    const RngStream root(seed);
    const Design design(design_spec, n_points, dims, root.child("design-setup"));

    ExperimentReport report;
    report.design = design_spec.name();
    report.function = problem.name;
    report.dims = dims;
    report.points = n_points;
    report.seed = seed;
    report.estimates.assign(replications, 0.0);

    parallel_for(replications, [&](std::size_t r) {
        RngStream stream = root.child("replication", r);
        PointSet pts = design.generate(stream);
        Eigen::VectorXd x(dims);
        CompensatedSum sum;
        for (Index i = 0; i < pts.size(); ++i) {
            for (Index k = 0; k < dims; ++k) {
                double u = pts.points(i, k);
                if (problem.normal_mean) {
                    // Keep the quantile finite at the cube's faces.
                    u = std::clamp(u, 0x1.0p-53, 1 - 0x1.0p-53);
                    x[k] = inverse_normal_cdf(u, *problem.normal_mean, 1.0);
                } else {
                    x[k] = u;
                }
            }
            sum.add(problem.integrand(x));
        }
        report.estimates[r] = sum.value() / static_cast<double>(pts.size());
    });

    RngStream boot = root.child("bootstrap");
    summarize(report, boot);
    return report;
}

std::string to_string(OptimizationFunction fn)
{
    switch (fn) {
    case OptimizationFunction::Sphere: return "sphere";
    case OptimizationFunction::Rosenbrock: return "rosenbrock";
    case OptimizationFunction::DoubleSum: return "doublesum";
    case OptimizationFunction::FletcherPowell: return "fp";
    }
    return "?";
}

OptimizationFunction parse_optimization_function(std::string_view name)
{
    if (name == "sphere")
        return OptimizationFunction::Sphere;
    if (name == "rosenbrock")
        return OptimizationFunction::Rosenbrock;
    if (name == "doublesum")
        return OptimizationFunction::DoubleSum;
    if (name == "fp" || name == "fletcher-powell")
        return OptimizationFunction::FletcherPowell;
    throw std::invalid_argument("unknown function '" + std::string(name) + "'");
}

TestFunction make_optimization_problem(OptimizationFunction fn, Index dims, RngStream& rng)
{
    constexpr double pi = std::numbers::pi;
    Hyperbox domain(Eigen::VectorXd::Constant(dims, -pi), Eigen::VectorXd::Constant(dims, pi));
    if (fn == OptimizationFunction::FletcherPowell) {
        auto instance = std::make_shared<FletcherPowell>(FletcherPowell::generate(dims, rng));
        Eigen::VectorXd where = instance->alpha();
        return {"fp", std::move(domain), [instance](const Eigen::Ref<const Eigen::VectorXd>& x) { return (*instance)(x); },
                std::move(where), 0.0};
    }
    Eigen::VectorXd optimum(dims);
    for (Index k = 0; k < dims; ++k)
        optimum[k] = rng.uniform(-pi, pi);
    std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)> f;
    switch (fn) {
    case OptimizationFunction::Sphere:
        f = [optimum](const Eigen::Ref<const Eigen::VectorXd>& x) { return sphere(x - optimum); };
        break;
    case OptimizationFunction::Rosenbrock:
        // Unshifted optimum at (1, ..., 1).
        f = [optimum](const Eigen::Ref<const Eigen::VectorXd>& x) {
            return rosenbrock((x - optimum).array() + 1.0);
        };
        break;
    case OptimizationFunction::DoubleSum:
        f = [optimum](const Eigen::Ref<const Eigen::VectorXd>& x) { return double_sum(x - optimum); };
        break;
    default:
        break;
    }
    return {to_string(fn), std::move(domain), std::move(f), std::move(optimum), 0.0};
}

double optimization_error(const TestFunction& fn, const PointSet& unit_points)
{
    if (unit_points.dim() != fn.dim())
        throw std::invalid_argument("dimension mismatch");
    const Eigen::VectorXd lo = fn.domain.lower();
    const Eigen::VectorXd span = fn.domain.extent();
    double best = std::numeric_limits<double>::infinity();
    Eigen::VectorXd x(fn.dim());
    for (Index i = 0; i < unit_points.size(); ++i) {
        x = lo + span.cwiseProduct(unit_points.points.row(i).transpose());
        best = std::min(best, fn.evaluate(x));
    }
    return best - fn.optimum_value;
}

ExperimentReport run_optimization_experiment(const DesignSpec& design_spec, OptimizationFunction fn, Index dims,
                                             std::size_t replications, std::uint64_t seed,
                                             std::size_t budget_factor)
{
    if (replications == 0 || budget_factor == 0)
        throw std::invalid_argument("need positive replications and budget");
    const std::size_t n_points = budget_factor * static_cast<std::size_t>(dims);
    const RngStream root(seed);
    const Design design(design_spec, n_points, dims, root.child("design-setup"));

    ExperimentReport report;
    report.design = design_spec.name();
    report.function = to_string(fn);
    report.dims = dims;
    report.points = n_points;
    report.seed = seed;
    report.estimates.assign(replications, 0.0);

    parallel_for(replications, [&](std::size_t r) {
        RngStream stream = root.child("replication", r);
        RngStream problem_rng = stream.child("problem");
        RngStream design_rng = stream.child("design");
        TestFunction problem = make_optimization_problem(fn, dims, problem_rng);
        report.estimates[r] = optimization_error(problem, design.generate(design_rng));
    });

    RngStream boot = root.child("bootstrap");
    summarize(report, boot);
    return report;
}

std::vector<VariantTally> run_variant_comparison(std::size_t n_min, std::size_t n_max, Index dim_min,
                                                 Index dim_max, std::uint64_t seed)
{
    if (n_min < 1 || n_min > n_max || dim_min < 1 || dim_min > dim_max)
        throw std::invalid_argument("bad variant comparison ranges");
    const RngStream root(seed);
    std::vector<VariantTally> out;
    for (Index n = dim_min; n <= dim_max; ++n) {
        const Hyperbox unit = Hyperbox::unit(n);
        VariantTally tally{n, 0, 0, 0};
        for (std::size_t N = n_min; N <= n_max; ++N) {
            auto bound = [&](bool avoid) {
                RngStream stream = root.child(avoid ? "with-avoid" : "without-avoid",
                                              static_cast<std::uint64_t>(n) << 32 | N);
                auto strat = gss_partition(N, unit, {avoid}, stream);
                auto pts = sample_stratified(strat, BatesParameter::infinity(), stream);
                return covering_radius_upper(pts, strat);
            };
            const double with = bound(true);
            const double without = bound(false);
            if (std::abs(with - without) <= kGeomTol)
                ++tally.ties;
            else if (with < without)
                ++tally.wins_with;
            else
                ++tally.wins_without;
        }
        out.push_back(tally);
    }
    return out;
}

} // namespace stratarium
