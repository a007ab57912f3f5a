#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stratarium/bench.hpp"
#include "stratarium/metrics.hpp"

using namespace stratarium;

namespace {

// Bisection on the long double normal CDF.
long double normal_quantile_oracle(long double p)
{
    long double lo = -40, hi = 40;
    for (int i = 0; i < 200; ++i) {
        long double mid = (lo + hi) / 2;
        long double cdf = 0.5L * std::erfc(-mid / std::sqrt(2.0L));
        (cdf < p ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

Eigen::VectorXd vec(std::initializer_list<double> v)
{
    Eigen::VectorXd out(static_cast<Index>(v.size()));
    Index i = 0;
    for (double x : v)
        out(i++) = x;
    return out;
}

} // namespace

TEST_CASE("test function values")
{
    CHECK(sphere(vec({1, 2, 3})) == 14);
    CHECK(rosenbrock(vec({1, 1, 1, 1})) == 0);
    CHECK(rosenbrock(vec({0, 0})) == 1);
    CHECK(rosenbrock(vec({-1, 2})) == doctest::Approx(100 + 4));
    CHECK(double_sum(vec({1, -1, 2})) == 1 + 0 + 4);
    CHECK(double_sum(vec({0, 0, 0})) == 0);
}

TEST_CASE("Fletcher-Powell instances")
{
    RngStream rng(31);
    auto fp = FletcherPowell::generate(6, rng);
    CHECK(fp(fp.alpha()) == doctest::Approx(0).scale(1));
    CHECK(std::abs(fp(fp.alpha())) < 1e-9);
    CHECK(fp.a().cwiseAbs().maxCoeff() <= 100);
    CHECK((fp.a().array() == fp.a().array().round()).all());
    CHECK(fp.alpha().cwiseAbs().maxCoeff() <= std::numbers::pi);
    Eigen::VectorXd away = fp.alpha().array() + 0.3;
    CHECK(fp(away) > 0);

    RngStream again(31);
    auto twin = FletcherPowell::generate(6, again);
    CHECK(twin.a() == fp.a());
    CHECK(twin.b() == fp.b());
    CHECK(twin(away) == fp(away));
    CHECK_THROWS_AS(fp(vec({0, 0})), std::invalid_argument);
}

TEST_CASE("inverse normal CDF")
{
    CHECK(inverse_normal_cdf(0.975) == doctest::Approx(1.959964).epsilon(1e-6));
    for (double p : {1e-12, 1e-6, 0.001, 0.02425, 0.1, 0.3, 0.5, 0.7, 0.97575, 0.999, 1 - 1e-9}) {
        const double oracle = static_cast<double>(normal_quantile_oracle(p));
        CHECK(std::abs(inverse_normal_cdf(p) - oracle) <= 1e-9 * std::max(1.0, std::abs(oracle)));
    }
    RngStream rng(32);
    for (int i = 0; i < 1000; ++i) {
        double p = rng.uniform();
        if (p == 0)
            continue;
        CHECK(inverse_normal_cdf(p) == doctest::Approx(-inverse_normal_cdf(1 - p)).epsilon(1e-9).scale(1));
    }
    CHECK(inverse_normal_cdf(0.5, 3, 2) == doctest::Approx(3));
    CHECK(inverse_normal_cdf(0.975, 1, 2) == doctest::Approx(1 + 2 * 1.959964).epsilon(1e-6));
    CHECK_THROWS_AS(inverse_normal_cdf(0.0), std::invalid_argument);
    CHECK_THROWS_AS(inverse_normal_cdf(1.0), std::invalid_argument);
    CHECK_THROWS_AS(inverse_normal_cdf(0.5, 0, 0), std::invalid_argument);
}

TEST_CASE("design tokens round trip")
{
    for (const char* token : {"srs", "lhs", "halton", "korobov-30", "korobov-all", "lkorobov-7", "sukharev",
                              "grid", "grid-inf", "grid-b4", "gss", "gss-inf", "gss-b3", "algss", "lgss",
                              "pss-2x50", "lpss-4x25", "algpss-2x2+1x2", "lgpss-5x20"})
        CHECK(DesignSpec::parse(token).name() == token);
    CHECK(DesignSpec::parse("korobov").lattice_trials == 30);
    CHECK(DesignSpec::parse("gss-inf").bates.is_infinite());
    for (const char* bad : {"", "foo", "srs-2", "pss", "gss-x", "gss-b", "korobov-", "sukharev-inf", "lhs-3"})
        CHECK_THROWS_AS(DesignSpec::parse(bad), std::invalid_argument);
}

TEST_CASE("designs produce points in the unit cube with the requested shape")
{
    RngStream rng(33);
    struct Case {
        const char* token;
        std::size_t N;
        Index n;
    };
    for (auto [name, N, n] : {Case{"srs", 30, 3}, Case{"lhs", 30, 3}, Case{"halton", 30, 3},
                              Case{"korobov-all", 31, 3}, Case{"lkorobov-10", 31, 3}, Case{"sukharev", 27, 3},
                              Case{"grid-b2", 16, 2}, Case{"gss-inf", 30, 3}, Case{"algss", 30, 3},
                              Case{"lgss", 30, 3}, Case{"pss-2x2", 25, 4}, Case{"lpss-2x2", 25, 4},
                              Case{"algpss-2x1+1x1", 30, 3}, Case{"lgpss-3x2", 30, 6}}) {
        std::string token = name;
        CAPTURE(token);
        Design design(DesignSpec::parse(token), N, n, rng.child("setup"));
        auto set = design.generate_with_strata(rng);
        CHECK(set.points.size() == static_cast<Index>(N));
        CHECK(set.points.dim() == n);
        if (set.strata) {
            for (Index i = 0; i < set.points.size(); ++i)
                CHECK(set.strata->strata[static_cast<std::size_t>(i)].box.contains(set.points.row(i).transpose(), 0));
        }
    }
    CHECK_THROWS_AS(Design(DesignSpec::parse("sukharev"), 10, 2, rng), std::invalid_argument);
    CHECK_THROWS_AS(Design(DesignSpec::parse("pss-2x2"), 10, 4, rng), std::invalid_argument);
    CHECK_THROWS_AS(Design(DesignSpec::parse("pss-2x2"), 25, 3, rng), std::invalid_argument);
    CHECK_THROWS_AS(Design(DesignSpec::parse("halton"), 10, 21, rng), std::invalid_argument);
}

TEST_CASE("latinized designs are Latin")
{
    RngStream rng(34);
    for (std::string token : {"lhs", "lkorobov-20", "lgss", "lpss-2x3", "lgpss-2x3"}) {
        CAPTURE(token);
        Design design(DesignSpec::parse(token), 49, 6, rng.child("setup"));
        auto v = lh_violations(design.generate(rng));
        CHECK(std::all_of(v.begin(), v.end(), [](std::size_t x) { return x == 0; }));
    }
}

TEST_CASE("summary statistics")
{
    ExperimentReport r;
    r.estimates = {1, 2, 3, 4};
    RngStream rng(35);
    summarize(r, rng);
    CHECK(r.mean == 2.5);
    CHECK(r.median == 2.5);
    CHECK(r.std_dev == doctest::Approx(std::sqrt(5.0 / 3)).epsilon(1e-14));
    CHECK(r.ci_lo <= r.mean);
    CHECK(r.ci_hi >= r.mean);
    CHECK(r.ci_lo >= 1);
    CHECK(r.ci_hi <= 4);

    ExperimentReport flat;
    flat.estimates = {7, 7, 7};
    summarize(flat, rng);
    CHECK(flat.std_dev == 0);
    CHECK(flat.ci_lo == 7);
    CHECK(flat.ci_hi == 7);
    CHECK(report_csv_header() == "design,function,n,N,replications,mean,std,median,ci_lo,ci_hi,seed");
}

TEST_CASE("integration experiments")
{
    IntegrationProblem constant{"one", [](const Eigen::Ref<const Eigen::VectorXd>&) { return 1.0; }, {}};
    auto flat = run_integration_experiment(DesignSpec::parse("srs"), constant, 10, 3, 20, 1);
    CHECK(flat.mean == 1);
    CHECK(flat.std_dev == 0);

    // E[sum_i (z_1 + ... + z_i)^2] = 1 + 2 + ... + n for standard normal z.
    const Index n = 5;
    IntegrationProblem ds{"doublesum", [](const Eigen::Ref<const Eigen::VectorXd>& x) { return double_sum(x); }, 0.0};
    const double truth = n * (n + 1) / 2.0;
    // Quantile-mapped estimates are heavy tailed, so use many replications.
    for (std::string token : {"srs", "lhs", "gss", "lgss", "algpss-1x5"}) {
        CAPTURE(token);
        auto report = run_integration_experiment(DesignSpec::parse(token), ds, 64, n, 1000, 7);
        const double se = report.std_dev / std::sqrt(1000.0);
        CHECK(std::abs(report.mean - truth) <= 4 * se);
    }

    auto a = run_integration_experiment(DesignSpec::parse("lhs"), ds, 30, 4, 40, 99);
    auto b = run_integration_experiment(DesignSpec::parse("lhs"), ds, 30, 4, 40, 99);
    CHECK(a.estimates == b.estimates);
    CHECK(report_csv_row(a) == report_csv_row(b));
}

TEST_CASE("optimization experiments")
{
    TestFunction bowl{"bowl", Hyperbox::unit(2),
                      [](const Eigen::Ref<const Eigen::VectorXd>& x) { return sphere(x.array() - 0.5); },
                      Eigen::VectorXd::Constant(2, 0.5), 0.0};
    PointMatrix hit(2, 2);
    hit << 0.1, 0.9, 0.5, 0.5;
    CHECK(optimization_error(bowl, PointSet(hit)) == 0);

    for (auto fn : {OptimizationFunction::Sphere, OptimizationFunction::Rosenbrock, OptimizationFunction::DoubleSum,
                    OptimizationFunction::FletcherPowell}) {
        CHECK(parse_optimization_function(to_string(fn)) == fn);
        auto report = run_optimization_experiment(DesignSpec::parse("lhs"), fn, 3, 10, 5);
        for (double e : report.estimates)
            CHECK(e >= 0);
    }
    CHECK_THROWS_AS(parse_optimization_function("ackley"), std::invalid_argument);

    auto small = run_optimization_experiment(DesignSpec::parse("srs"), OptimizationFunction::Sphere, 2, 100, 3, 50);
    auto large = run_optimization_experiment(DesignSpec::parse("srs"), OptimizationFunction::Sphere, 2, 100, 3, 200);
    CHECK(large.mean < small.mean);
}

TEST_CASE("odd-split variant comparison")
{
    auto four = run_variant_comparison(4, 4, 2, 2, 1);
    REQUIRE(four.size() == 1);
    CHECK(four[0].ties == 1);

    auto tallies = run_variant_comparison(4, 40, 2, 3, 2);
    REQUIRE(tallies.size() == 2);
    for (const auto& t : tallies)
        CHECK(t.wins_with + t.ties + t.wins_without == 37);
    auto again = run_variant_comparison(4, 40, 2, 3, 2);
    CHECK(again[1].wins_with == tallies[1].wins_with);
    CHECK(again[1].ties == tallies[1].ties);
}

TEST_CASE("parallel loop visits every index once")
{
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK(worker_count() >= 1);
}
