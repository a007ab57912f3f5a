#include <doctest.h>

#include <cmath>

#include "stratarium/metrics.hpp"
#include "stratarium/sample.hpp"
#include "stratarium/stratify.hpp"
#include "test_support.hpp"

using namespace stratarium;

namespace {

double grid_covering_radius(const PointMatrix& pts, int res)
{
    double worst = 0;
    for (int a = 0; a <= res; ++a) {
        for (int b = 0; b <= res; ++b) {
            Eigen::RowVector2d y(double(a) / res, double(b) / res);
            double best = 1e300;
            for (Index i = 0; i < pts.rows(); ++i)
                best = std::min(best, (pts.row(i) - y).squaredNorm());
            worst = std::max(worst, best);
        }
    }
    return std::sqrt(worst);
}

} // namespace

TEST_CASE("discrepancy of a single point")
{
    PointMatrix one(1, 1);
    one << 0.5;
    CHECK(discrepancy_t_squared_raw(one) == doctest::Approx(1.0 / 12).epsilon(1e-14));
    CHECK(discrepancy_t(PointSet(one)) == doctest::Approx(0.28868).epsilon(1e-5));

    PointMatrix two(1, 2);
    two << 0.5, 0.5;
    CHECK(discrepancy_t_squared_raw(two) == doctest::Approx(0.0625 - 0.03125 + 1.0 / 144).epsilon(1e-14));
    CHECK(discrepancy_t_squared_raw(two) == doctest::Approx(0.0381944).epsilon(1e-6));
}

TEST_CASE("discrepancy matches a Monte Carlo estimate of its defining integral")
{
    RngStream rng(21);
    for (Index n : {1, 2, 3}) {
        auto pts = sample_srs(8, Hyperbox::unit(n), rng);
        auto [mean, se] = test::discrepancy_mc(pts.points, 200000, rng);
        const double exact = discrepancy_t_squared_raw(pts.points);
        CHECK(std::abs(exact - mean) <= 3 * se);
    }
}

TEST_CASE("discrepancy is invariant under point order")
{
    RngStream rng(22);
    auto pts = sample_srs(50, Hyperbox::unit(4), rng);
    PointMatrix reversed = pts.points.colwise().reverse();
    CHECK(discrepancy_t(reversed) == doctest::Approx(discrepancy_t(pts)).epsilon(1e-12));
}

TEST_CASE("expected discrepancy of random points")
{
    CHECK(expected_discrepancy_sq(1, 1) == doctest::Approx(1.0 / 12).epsilon(1e-15));
    CHECK(expected_discrepancy_sq(100, 2) == doctest::Approx(2.08333e-4).epsilon(1e-5));
    for (std::size_t N : {1u, 3u, 50u})
        for (Index n : {1, 4, 9})
            CHECK(expected_discrepancy_sq(2 * N, n) == expected_discrepancy_sq(N, n) / 2);
}

TEST_CASE("covering radius upper bound")
{
    RngStream rng(23);
    auto grid = grid_partition({2, 2}, Hyperbox::unit(2));
    auto pts = sample_stratified(grid, BatesParameter::infinity(), rng);
    CHECK(covering_radius_upper(pts, grid) == doctest::Approx(std::sqrt(2.0) / 4).epsilon(1e-12));

    Stratification whole{Hyperbox::unit(2), {{Hyperbox::unit(2), 1}}};
    PointMatrix centre(1, 2);
    centre << 0.5, 0.5;
    CHECK(covering_radius_upper(PointSet(centre), whole) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));

    PointMatrix moved = pts.points;
    moved.row(0).swap(moved.row(3));
    CHECK_THROWS(covering_radius_upper(PointSet(moved), grid));
}

TEST_CASE("Monte Carlo covering radius lower bound")
{
    PointMatrix centre(1, 2);
    centre << 0.5, 0.5;
    RngStream rng(24);
    const double est = covering_radius_mc_lower(PointSet(centre), 40000, rng);
    CHECK(est <= std::sqrt(0.5));
    CHECK(est > std::sqrt(0.5) - 0.01);

    // Reusing the same stream prefix means a larger M sees a superset of test points.
    auto pts = sample_srs(30, Hyperbox::unit(3), rng);
    double previous = 0;
    for (std::size_t M : {10u, 100u, 1000u, 10000u}) {
        RngStream again(25);
        const double value = covering_radius_mc_lower(pts, M, again);
        CHECK(value >= previous);
        previous = value;
    }
}

TEST_CASE("general covering radius lower bound")
{
    CHECK(covering_radius_general_lower(4, 2) == 0.25);
    CHECK(covering_radius_general_lower(8, 2) == 0.25);
    CHECK(covering_radius_general_lower(9, 2) == doctest::Approx(1.0 / 6));
    CHECK(covering_radius_general_lower(1, 7) == 0.5);

    std::uint64_t p = 1;
    for (int i = 0; i < 20; ++i)
        p *= 3;
    CHECK(integer_root(p, 20) == 3);
    CHECK(integer_root(p - 1, 20) == 2);
    CHECK(integer_root(1000000, 3) == 100);
    CHECK(integer_root(999999, 3) == 99);
    CHECK(integer_root(std::numeric_limits<std::uint64_t>::max(), 1) == std::numeric_limits<std::uint64_t>::max());
    CHECK(integer_root(std::numeric_limits<std::uint64_t>::max(), 2) == 4294967295u);

    for (Index n : {2, 3}) {
        for (std::uint64_t k = 1; k < 8; ++k) {
            std::uint64_t lo = 1, hi = 1;
            for (Index i = 0; i < n; ++i) {
                lo *= k;
                hi *= k + 1;
            }
            for (std::uint64_t N = lo; N < hi; ++N)
                CHECK(covering_radius_general_lower(N, n) == 1.0 / (2.0 * static_cast<double>(k)));
        }
    }
}

TEST_CASE("separation distance")
{
    PointMatrix diag(2, 2);
    diag << 0, 0, 1, 1;
    CHECK(separation_distance(diag) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    PointMatrix dup(3, 2);
    dup << 0.1, 0.2, 0.5, 0.5, 0.1, 0.2;
    CHECK(separation_distance(dup) == 0);
    CHECK_FALSE(separation_distance_above(dup, 0.0).has_value());

    RngStream rng(26);
    auto grid = sample_stratified(grid_partition({2, 2}, Hyperbox::unit(2)), BatesParameter::infinity(), rng);
    CHECK(separation_distance(grid) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(separation_distance_above(grid.points, 0.4).value() == doctest::Approx(0.5));
    CHECK_FALSE(separation_distance_above(grid.points, 0.5).has_value());

    PointMatrix one(1, 2);
    one << 0.5, 0.5;
    CHECK_THROWS_AS(separation_distance(one), std::invalid_argument);
}

TEST_CASE("retrospective covering radius bound")
{
    PointMatrix p(1, 2);
    p << 0.2, 0.3;
    RngStream rng(27);
    const double corner = std::hypot(0.8, 0.7);
    CHECK(covering_radius_upper_retro(PointSet(p), 1, rng) == doctest::Approx(corner).epsilon(1e-14));
    CHECK(covering_radius_upper_retro(PointSet(p), 10, rng) == doctest::Approx(corner).epsilon(1e-14));

    for (int trial = 0; trial < 10; ++trial) {
        auto pts = sample_srs(40, Hyperbox::unit(2 + trial % 3), rng);
        const double upper = covering_radius_upper_retro(pts, 10, rng);
        CHECK(upper >= covering_radius_mc_lower(pts, default_mc_samples(pts.dim()), rng));
    }

    PointMatrix twin(2, 2);
    twin << 0.4, 0.4, 0.4, 0.4;
    CHECK_THROWS_AS(covering_radius_upper_retro(PointSet(twin), 3, rng), CoincidentPoints);
}

TEST_CASE("Sukharev grids attain the covering radius bound")
{
    RngStream rng(28);
    for (auto [k, n] : {std::pair<std::size_t, Index>{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        auto strat = grid_partition(std::vector<std::size_t>(static_cast<std::size_t>(n), k), Hyperbox::unit(n));
        auto pts = sample_stratified(strat, BatesParameter::infinity(), rng);
        const double expected = std::sqrt(double(n)) / (2.0 * double(k));
        CHECK(std::abs(covering_radius_upper(pts, strat) - expected) <= 1e-12);
        CHECK(covering_radius_mc_lower(pts, default_mc_samples(n), rng) <= covering_radius_upper(pts, strat));
    }
}

TEST_CASE("brute-force grid covering radius lies within the bounds")
{
    RngStream rng(29);
    for (std::size_t N : {5u, 17u, 40u}) {
        auto strat = gss_partition(N, Hyperbox::unit(2), {}, rng);
        auto pts = sample_stratified(strat, BatesParameter::parse("2"), rng);
        const double brute = grid_covering_radius(pts.points, 400);
        const double upper = covering_radius_upper(pts, strat);
        const double lower = covering_radius_mc_lower(pts, default_mc_samples(2), rng);
        // Grid spacing 1/400 moves the nearest distance by at most half a cell diagonal.
        const double eps = std::sqrt(2.0) / 800;
        CHECK(brute >= lower - eps);
        CHECK(brute <= upper + eps);
        CHECK(covering_radius_general_lower(N, 2) <= upper);
    }
}
