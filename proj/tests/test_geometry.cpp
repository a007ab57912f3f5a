#include <doctest.h>

#include <cmath>

#include "stratarium/geometry.hpp"

using namespace stratarium;

namespace {

Hyperbox box2(double l0, double u0, double l1, double u1)
{
    return Hyperbox(Eigen::Vector2d(l0, l1), Eigen::Vector2d(u0, u1));
}

// Brute-force maximum distance over all 2^n corners.
double max_corner_distance(const Eigen::VectorXd& x, const Hyperbox& box)
{
    const Index n = box.dim();
    double best = 0;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        Eigen::VectorXd corner(n);
        for (Index i = 0; i < n; ++i)
            corner[i] = (mask >> i) & 1 ? box.upper(i) : box.lower(i);
        best = std::max(best, (x - corner).norm());
    }
    return best;
}

} // namespace

TEST_CASE("volume examples")
{
    CHECK(volume(Hyperbox::unit(2)) == 1.0);
    CHECK(volume(box2(0, 1.0 / 3, 0, 1)) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(volume(Hyperbox(Eigen::Vector3d::Constant(0.25), Eigen::Vector3d::Constant(0.75))) == 0.125);
}

TEST_CASE("degenerate and malformed boxes are rejected")
{
    CHECK_THROWS_AS(box2(0, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(box2(0.5, 0.2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Hyperbox(Eigen::VectorXd(0), Eigen::VectorXd(0)), std::invalid_argument);
    CHECK_THROWS_AS(Hyperbox(Eigen::Vector2d(0, 0), Eigen::Vector3d(1, 1, 1)), std::invalid_argument);
}

TEST_CASE("longest side with a unique maximum")
{
    RngStream rng(1);
    for (int i = 0; i < 50; ++i)
        CHECK(longest_side(box2(0, 1, 0, 0.5), rng) == 0);
}

TEST_CASE("longest side breaks ties uniformly")
{
    RngStream rng(2);
    Hyperbox box(Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(0.5, 1, 1));
    const int draws = 20000;
    int ones = 0;
    for (int i = 0; i < draws; ++i) {
        Index s = longest_side(box, rng);
        REQUIRE((s == 1 || s == 2));
        ones += s == 1;
    }
    // Binomial(20000, 1/2): sd ~ 70.7.
    CHECK(std::abs(ones - draws / 2) < 300);

    std::vector<int> hits(4, 0);
    for (int i = 0; i < draws; ++i)
        ++hits[static_cast<std::size_t>(longest_side(Hyperbox::unit(4), rng))];
    for (int h : hits)
        CHECK(std::abs(h - draws / 4) < 300);
}

TEST_CASE("longest side treats sides within 1e-12 as tied")
{
    RngStream rng(3);
    auto box = box2(0, 1, 0, 1 - 1e-13);
    bool saw0 = false, saw1 = false;
    for (int i = 0; i < 200; ++i) {
        Index s = longest_side(box, rng);
        saw0 |= s == 0;
        saw1 |= s == 1;
    }
    CHECK(saw0);
    CHECK(saw1);
}

TEST_CASE("furthest corner distance examples")
{
    CHECK(furthest_corner_distance(Eigen::Vector2d(0.5, 0.5), Hyperbox::unit(2)) == doctest::Approx(std::sqrt(0.5)));
    CHECK(furthest_corner_distance(Eigen::Vector2d(0, 0), Hyperbox::unit(2)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(furthest_corner_distance(Eigen::Vector2d(0.25, 0.5), box2(0, 0.5, 0, 1)) ==
          doctest::Approx(0.5590169943749474));
    CHECK_THROWS_AS(furthest_corner_distance(Eigen::Vector2d(0.75, 0.5), box2(0, 0.5, 0, 1)), std::invalid_argument);
}

TEST_CASE("furthest corner distance equals brute-force corner enumeration")
{
    RngStream rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const Index n = 1 + static_cast<Index>(rng.below(10));
        Eigen::VectorXd lo(n), hi(n), x(n);
        for (Index i = 0; i < n; ++i) {
            double a = rng.uniform(), b = rng.uniform();
            lo[i] = std::min(a, b);
            hi[i] = std::max(a, b) + 1e-3;
            x[i] = rng.uniform(lo[i], hi[i]);
        }
        Hyperbox box(lo, hi);
        CHECK(furthest_corner_distance(x, box) == doctest::Approx(max_corner_distance(x, box)).epsilon(1e-12));
    }
}

TEST_CASE("centroid minimizes the furthest corner distance over an interior grid")
{
    RngStream rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto box = box2(rng.uniform(0, 0.4), rng.uniform(0.5, 1), rng.uniform(0, 0.4), rng.uniform(0.5, 1));
        const double at_centroid = furthest_corner_distance(box.centroid(), box);
        for (int i = 0; i <= 20; ++i) {
            for (int j = 0; j <= 20; ++j) {
                Eigen::Vector2d x(box.lower(0) + box.extent(0) * i / 20.0, box.lower(1) + box.extent(1) * j / 20.0);
                CHECK(furthest_corner_distance(x, box) >= at_centroid - 1e-15);
            }
        }
    }
}

TEST_CASE("splitting preserves volume")
{
    RngStream rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const Index n = 1 + static_cast<Index>(rng.below(6));
        Hyperbox box(Eigen::VectorXd::Zero(n), Eigen::VectorXd::Constant(n, rng.uniform(0.1, 3)));
        const Index axis = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
        auto [a, b] = box.split(axis, rng.uniform(0.01, 0.09));
        CHECK(std::abs(volume(a) + volume(b) - volume(box)) <= 1e-12 * volume(box));
    }
}

TEST_CASE("point sets reject coordinates outside their domain")
{
    PointMatrix m(2, 2);
    m << 0.1, 0.2, 0.3, 1.2;
    CHECK_THROWS_AS(PointSet{m}, std::invalid_argument);
    m(1, 1) = 1.0;
    CHECK(PointSet(m).size() == 2);
}
