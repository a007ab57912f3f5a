#include "stratarium/metrics.hpp"

#include <algorithm>

#include "stratarium/stratify.hpp"

namespace stratarium {

double expected_discrepancy_sq(std::size_t n_points, Index dims)
{
    if (n_points == 0 || dims < 1)
        throw std::invalid_argument("expected discrepancy needs positive N and n");
    const auto n = static_cast<double>(dims);
    return std::pow(6.0, -n) * (1 - std::pow(2.0, -n)) / static_cast<double>(n_points);
}

namespace {
// k^dims <= limit without overflow.
bool power_at_most(std::uint64_t k, Index dims, std::uint64_t limit)
{
    unsigned __int128 acc = 1;
    for (Index i = 0; i < dims; ++i) {
        acc *= k;
        if (acc > limit)
            return false;
    }
    return true;
}
} // namespace

std::uint64_t integer_root(std::uint64_t n_points, Index dims)
{
    if (dims < 1)
        throw std::invalid_argument("root degree must be positive");
    std::uint64_t lo = 0;
    std::uint64_t hi = n_points;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2 + 1;
        if (power_at_most(mid, dims, n_points))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

double covering_radius_general_lower(std::size_t n_points, Index dims)
{
    if (n_points == 0)
        throw std::invalid_argument("covering radius bound needs N >= 1");
    return 1.0 / (2.0 * static_cast<double>(integer_root(n_points, dims)));
}

double covering_radius_upper(const PointSet& points, const Stratification& strat)
{
    if (static_cast<std::size_t>(points.size()) != strat.size())
        throw std::invalid_argument("need exactly one point per stratum");
    double worst = 0;
    for (Index i = 0; i < points.size(); ++i) {
        const auto& box = strat.strata[static_cast<std::size_t>(i)].box;
        if (!box.contains(points.row(i).transpose()))
            throw std::invalid_argument("point " + std::to_string(i) + " lies outside its stratum");
        worst = std::max(worst, furthest_corner_distance(points.row(i).transpose(), box));
    }
    return worst;
}

double covering_radius_mc_lower(const PointSet& points, std::size_t samples, RngStream& rng)
{
    if (samples == 0)
        throw std::invalid_argument("Monte Carlo bound needs at least one test point");
    if (points.size() < 1)
        throw std::invalid_argument("Monte Carlo bound needs at least one point");
    const Index n = points.dim();
    Eigen::RowVectorXd probe(n);
    double worst = 0;
    for (std::size_t m = 0; m < samples; ++m) {
        for (Index k = 0; k < n; ++k)
            probe[k] = rng.uniform(points.domain.lower(k), points.domain.upper(k));
        double nearest = (points.points.rowwise() - probe).rowwise().squaredNorm().minCoeff();
        worst = std::max(worst, nearest);
    }
    return std::sqrt(worst);
}

double covering_radius_upper_retro(const PointSet& points, std::size_t restarts, RngStream& rng)
{
    if (restarts == 0)
        throw std::invalid_argument("need at least one restart");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < restarts; ++r) {
        RngStream stream = rng.child("mean-split", r);
        best = std::min(best, covering_radius_upper(points, mean_split_partition(points, stream)));
    }
    return best;
}

} // namespace stratarium
