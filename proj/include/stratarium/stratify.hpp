#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stratarium/geometry.hpp"
#include "stratarium/rng.hpp"

namespace stratarium {

struct GssOptions {
    /// Move one point between children when an even count of at least six would
    /// otherwise split into two odd halves (e.g. 6 -> {4, 2} instead of {3, 3}).
    bool avoid_odd_splits = true;
};

/// Point counts for the two children of a stratum holding `count` points, before the
/// random orientation swap.
std::pair<std::size_t, std::size_t> split_counts(std::size_t count, bool avoid_odd_splits);

/// Recursive longest-side binary partition of `domain` into `n_points` equal-volume strata.
///
/// Unfinished strata are processed last-in-first-out. Each split consumes one coin flip
/// (orientation of the child counts) followed by a tie-break draw when the longest side
/// is not unique. When `split_count` is non-null it receives the number of splits made.
Stratification gss_partition(std::size_t n_points, const Hyperbox& domain, const GssOptions& options,
                             RngStream& rng, std::size_t* split_count = nullptr);

/// Regular grid with `bins[i]` equal-width bins along dimension i. Strata are ordered
/// lexicographically with the last dimension varying fastest.
Stratification grid_partition(const std::vector<std::size_t>& bins, const Hyperbox& domain);

/// Retroactive partition of an existing point set into boxes holding one point each.
/// Stratum i contains point i. Throws CoincidentPoints when two points are identical.
Stratification mean_split_partition(const PointSet& points, RngStream& rng);

/// Smallest ratio of shortest to longest side over all strata.
double aspect_ratio(const Stratification& strat);

/// Throws std::invalid_argument unless every stratum lies inside the domain, counts are
/// positive and the stratum volumes sum to the domain volume (relative tolerance `rel_tol`).
void validate_cover(const Stratification& strat, double rel_tol = 1e-12);

/// True when every stratum's volume fraction equals its count fraction within `rel_tol`.
bool is_proportional(const Stratification& strat, double rel_tol = 1e-12);

} // namespace stratarium
