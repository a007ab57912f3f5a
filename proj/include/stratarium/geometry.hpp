#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stratarium/rng.hpp"

namespace stratarium {

using Index = Eigen::Index;

/// Absolute tolerance for geometric comparisons on unit-scale domains.
inline constexpr double kGeomTol = 1e-12;

/// Closed axis-aligned box [lower, upper] with strictly positive extent in every dimension.
template <typename Scalar>
class BasicHyperbox {
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    BasicHyperbox(Vector lower, Vector upper) : lower_(std::move(lower)), upper_(std::move(upper))
    {
        if (lower_.size() < 1 || lower_.size() != upper_.size())
            throw std::invalid_argument("hyperbox bounds must have equal nonzero length");
        for (Index i = 0; i < lower_.size(); ++i) {
            if (!(lower_[i] < upper_[i]) || !std::isfinite(lower_[i]) || !std::isfinite(upper_[i]))
                throw std::invalid_argument("hyperbox must have strictly positive finite extent in every dimension");
        }
    }

    static BasicHyperbox unit(Index n)
    {
        return BasicHyperbox(Vector::Zero(n), Vector::Ones(n));
    }

    Index dim() const { return lower_.size(); }
    const Vector& lower() const { return lower_; }
    const Vector& upper() const { return upper_; }
    Scalar lower(Index i) const { return lower_[i]; }
    Scalar upper(Index i) const { return upper_[i]; }
    Scalar extent(Index i) const { return upper_[i] - lower_[i]; }
    Vector extent() const { return upper_ - lower_; }
    Vector centroid() const { return (lower_ + upper_) / Scalar(2); }
    Scalar midpoint(Index i) const { return (lower_[i] + upper_[i]) / Scalar(2); }

    bool is_unit() const
    {
        return (lower_.array() == Scalar(0)).all() && (upper_.array() == Scalar(1)).all();
    }

    template <typename Derived>
    bool contains(const Eigen::MatrixBase<Derived>& x, Scalar tol = Scalar(kGeomTol)) const
    {
        if (x.size() != dim())
            return false;
        for (Index i = 0; i < dim(); ++i)
            if (x[i] < lower_[i] - tol || x[i] > upper_[i] + tol)
                return false;
        return true;
    }

    /// Splits at `position` along `axis`; returns the (lower, upper) halves.
    std::pair<BasicHyperbox, BasicHyperbox> split(Index axis, Scalar position) const
    {
        Vector cut_upper = upper_;
        Vector cut_lower = lower_;
        cut_upper[axis] = position;
        cut_lower[axis] = position;
        return {BasicHyperbox(lower_, std::move(cut_upper)), BasicHyperbox(std::move(cut_lower), upper_)};
    }

    bool operator==(const BasicHyperbox& other) const
    {
        return lower_ == other.lower_ && upper_ == other.upper_;
    }

private:
    Vector lower_;
    Vector upper_;
};

using Hyperbox = BasicHyperbox<double>;

template <typename Scalar>
Scalar volume(const BasicHyperbox<Scalar>& box)
{
    return box.extent().prod();
}

/// Index of the longest side; ties within kGeomTol are broken uniformly via `rng`.
/// Draws from `rng` only when a tie exists.
Index longest_side(const Hyperbox& box, RngStream& rng);

/// Distance from `x` to the corner of `box` furthest from it.
template <typename Derived, typename Scalar>
Scalar furthest_corner_distance(const Eigen::MatrixBase<Derived>& x, const BasicHyperbox<Scalar>& box)
{
    if (!box.contains(x))
        throw std::invalid_argument("point lies outside its box");
    Scalar sum = 0;
    for (Index i = 0; i < box.dim(); ++i) {
        Scalar d = std::max(x[i] - box.lower(i), box.upper(i) - x[i]);
        sum += d * d;
    }
    return std::sqrt(sum);
}

/// A box together with the number of points to be placed in it.
struct Stratum {
    Hyperbox box;
    std::size_t count = 1;
};

/// Ordered strata partitioning `domain`.
struct Stratification {
    Hyperbox domain;
    std::vector<Stratum> strata;

    std::size_t total_count() const;
    std::size_t size() const { return strata.size(); }
    Index dim() const { return domain.dim(); }
    bool all_unit_counts() const;
};

using PointMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// N points in n dimensions, one per row.
struct PointSet {
    PointMatrix points;
    Hyperbox domain;

    PointSet(PointMatrix pts, Hyperbox dom);
    explicit PointSet(PointMatrix pts);

    Index size() const { return points.rows(); }
    Index dim() const { return points.cols(); }
    auto row(Index i) const { return points.row(i); }
};

} // namespace stratarium
