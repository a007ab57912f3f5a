#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stratarium/geometry.hpp"
#include "stratarium/matching.hpp"
#include "stratarium/rng.hpp"

namespace stratarium {

/// bins[dim][stratum]: the Latin bin assigned to each stratum, per dimension.
using BinAssignment = std::vector<std::vector<std::size_t>>;

/// A latinized stratified sample together with the bin assignment that produced it.
struct LatinizedSample {
    PointSet points;
    BinAssignment bins;
    /// Per dimension, strata whose assigned bin does not intersect their extent.
    std::vector<std::size_t> violations;

    std::size_t total_violations() const;
};

/// True when bin `bin` of `bins` equal bins of [0,1] meets the box's extent along `dim`
/// with positive length (more than kGeomTol).
bool bin_intersects(const Hyperbox& box, Index dim, std::size_t bin, std::size_t bins);

/// Bins assigned in order of the strata's midpoints along `dim`; ties are broken at random.
std::vector<std::size_t> cog_assignment(const Stratification& strat, Index dim, RngStream& rng);

enum class WarmStart {
    /// Midpoint-sorted assignment, restricted to intersecting pairs.
    Cog,
    /// Strata in random order, each grabbing a random free intersecting bin.
    RandomizedGreedy,
};

/// Bins-vs-strata graph along `dim`: edge iff the bin meets the stratum's extent.
BipartiteGraph latin_graph(const Stratification& strat, Index dim);

/// Exact Latin bin assignment along `dim` via maximum matching.
/// Throws InfeasibleLatinization if no perfect matching exists.
std::vector<std::size_t> matched_assignment(const Stratification& strat, Index dim, WarmStart warm,
                                            RngStream& rng);

/// Approximately latinized stratified sample (midpoint-sort heuristic). Strata whose
/// assigned bin misses their extent are sampled uniformly in the stratum instead.
LatinizedSample algss(const Stratification& strat, RngStream& rng);

/// Exactly latinized stratified sample. Throws InfeasibleLatinization.
LatinizedSample lgss(const Stratification& strat, RngStream& rng, WarmStart warm = WarmStart::Cog);

/// Disjoint dimension groups covering 0..n-1.
struct PssGrouping {
    std::vector<std::vector<Index>> groups;

    Index dim() const;
    /// Parses "XxY" blocks separated by ',' or '+', e.g. "2x50" or "2x2+1x2": Y groups of X
    /// consecutive dimensions each.
    static PssGrouping parse(std::string_view spec);
    std::string to_string() const;
};

/// Pads independently row-shuffled group designs into one n-dimensional design.
PointSet pss_compose(const std::vector<PointSet>& designs, const PssGrouping& grouping, RngStream& rng);

/// Per dimension, N minus the number of distinct occupied bins.
std::vector<std::size_t> lh_violations(const PointSet& points);

} // namespace stratarium
