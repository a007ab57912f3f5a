#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

#include "stratarium/errors.hpp"
#include "stratarium/geometry.hpp"
#include "stratarium/rng.hpp"

namespace stratarium {

/// Neumaier-compensated running sum; fixed-order accumulation keeps results reproducible.
class CompensatedSum {
public:
    void add(double v)
    {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0;
    double comp_ = 0;
};

/// Squared unanchored L2 discrepancy of points in the unit cube (rows are points),
/// without clamping. O(N^2 n).
template <typename Derived>
double discrepancy_t_squared_raw(const Eigen::MatrixBase<Derived>& x)
{
    const Index count = x.rows();
    const Index n = x.cols();
    if (count < 1)
        throw std::invalid_argument("discrepancy needs at least one point");
    CompensatedSum pairs;
    CompensatedSum diagonal;
    for (Index i = 0; i < count; ++i) {
        double d = 1;
        for (Index k = 0; k < n; ++k)
            d *= x(i, k) * (1 - x(i, k));
        diagonal.add(d);
        for (Index j = i + 1; j < count; ++j) {
            double p = 1;
            for (Index k = 0; k < n; ++k) {
                const double a = x(i, k);
                const double b = x(j, k);
                p *= (1 - std::max(a, b)) * std::min(a, b);
            }
            pairs.add(p);
        }
    }
    const auto N = static_cast<double>(count);
    const double double_sum = (2 * pairs.value() + diagonal.value()) / (N * N);
    const double single_sum = std::ldexp(diagonal.value(), static_cast<int>(1 - n)) / N;
    return double_sum - single_sum + std::pow(12.0, -static_cast<double>(n));
}

/// Squared-value clamp threshold: values in [-kDiscrepancyClamp, 0) become zero.
inline constexpr double kDiscrepancyClamp = 1e-12;

/// Unanchored L2 discrepancy T_N. Throws NumericFailure if the squared value is
/// more negative than the clamp tolerance.
template <typename Derived>
double discrepancy_t(const Eigen::MatrixBase<Derived>& x)
{
    const double sq = discrepancy_t_squared_raw(x);
    if (sq < -kDiscrepancyClamp)
        throw NumericFailure("negative squared discrepancy");
    return std::sqrt(std::max(sq, 0.0));
}

inline double discrepancy_t(const PointSet& p) { return discrepancy_t(p.points); }

/// Expected squared discrepancy of N i.i.d. uniform points in n dimensions.
double expected_discrepancy_sq(std::size_t n_points, Index dims);

/// Largest k with k^dims <= n_points, by integer search.
std::uint64_t integer_root(std::uint64_t n_points, Index dims);

/// Lower bound 1 / (2 floor(N^(1/n))) valid for any N-point set in the unit cube.
double covering_radius_general_lower(std::size_t n_points, Index dims);

/// Maximum over points of the distance to the furthest corner of its stratum.
/// Point i must lie in stratum i; the strata must cover the domain.
double covering_radius_upper(const PointSet& points, const Stratification& strat);

/// Maximum over `samples` uniform test points of the distance to the nearest point.
double covering_radius_mc_lower(const PointSet& points, std::size_t samples, RngStream& rng);

/// Default Monte Carlo test-point count, 2 * 10^4 * n.
inline std::size_t default_mc_samples(Index dims) { return static_cast<std::size_t>(20000 * dims); }

/// Best covering-radius upper bound over `restarts` mean-split partitions of `points`.
double covering_radius_upper_retro(const PointSet& points, std::size_t restarts, RngStream& rng);

struct CoveringRadiusBounds {
    double upper = 0;
    double mc_lower = 0;
    double general_lower = 0;
    std::size_t mc_samples = 0;
};

/// Minimum pairwise Euclidean distance. Needs at least two points.
template <typename Derived>
double separation_distance(const Eigen::MatrixBase<Derived>& x)
{
    if (x.rows() < 2)
        throw std::invalid_argument("separation distance needs at least two points");
    double best = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < x.rows(); ++i)
        for (Index j = i + 1; j < x.rows(); ++j)
            best = std::min(best, (x.row(i) - x.row(j)).squaredNorm());
    return std::sqrt(best);
}

inline double separation_distance(const PointSet& p) { return separation_distance(p.points); }

/// Separation distance if it exceeds `threshold`, otherwise nullopt. Stops at the first
/// pair closer than the threshold.
template <typename Derived>
std::optional<double> separation_distance_above(const Eigen::MatrixBase<Derived>& x, double threshold)
{
    if (x.rows() < 2)
        throw std::invalid_argument("separation distance needs at least two points");
    const double limit = threshold < 0 ? -1.0 : threshold * threshold;
    double best = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < x.rows(); ++i) {
        for (Index j = i + 1; j < x.rows(); ++j) {
            best = std::min(best, (x.row(i) - x.row(j)).squaredNorm());
            if (best <= limit)
                return std::nullopt;
        }
    }
    return std::sqrt(best);
}

} // namespace stratarium
