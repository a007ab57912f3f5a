#include "stratarium/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace stratarium {

Index longest_side(const Hyperbox& box, RngStream& rng)
{
    const double longest = box.extent().maxCoeff();
    auto tied = [&](Index i) { return longest - box.extent(i) <= kGeomTol; };
    std::uint64_t count = 0;
    Index first = 0;
    for (Index i = 0; i < box.dim(); ++i) {
        if (tied(i) && count++ == 0)
            first = i;
    }
    if (count == 1)
        return first;
    std::uint64_t pick = rng.below(count);
    for (Index i = 0; i < box.dim(); ++i) {
        if (tied(i) && pick-- == 0)
            return i;
    }
    return first;
}

std::size_t Stratification::total_count() const
{
    return std::accumulate(strata.begin(), strata.end(), std::size_t{0},
                           [](std::size_t acc, const Stratum& s) { return acc + s.count; });
}

bool Stratification::all_unit_counts() const
{
    return std::all_of(strata.begin(), strata.end(), [](const Stratum& s) { return s.count == 1; });
}

PointSet::PointSet(PointMatrix pts, Hyperbox dom) : points(std::move(pts)), domain(std::move(dom))
{
    if (points.rows() > 0 && points.cols() != domain.dim())
        throw std::invalid_argument("point dimension does not match domain");
    for (Index i = 0; i < points.rows(); ++i) {
        for (Index k = 0; k < points.cols(); ++k) {
            double v = points(i, k);
            if (!(v >= domain.lower(k) && v <= domain.upper(k)))
                throw std::invalid_argument("point " + std::to_string(i) + " lies outside the domain");
        }
    }
}

PointSet::PointSet(PointMatrix pts) : PointSet(pts, Hyperbox::unit(std::max<Index>(pts.cols(), 1))) {}

} // namespace stratarium
