#include "stratarium/stratify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "stratarium/errors.hpp"

namespace stratarium {

std::pair<std::size_t, std::size_t> split_counts(std::size_t count, bool avoid_odd_splits)
{
    std::size_t first = count / 2;
    if (avoid_odd_splits && count >= 6 && first % 2 != 0 && count % 2 == 0)
        --first;
    return {first, count - first};
}

Stratification gss_partition(std::size_t n_points, const Hyperbox& domain, const GssOptions& options,
                             RngStream& rng, std::size_t* split_count)
{
    if (n_points == 0)
        throw std::invalid_argument("number of points must be positive");

    std::vector<Stratum> finished;
    finished.reserve(n_points);
    std::vector<Stratum> pending;
    pending.push_back({domain, n_points});
    std::size_t splits = 0;

    while (!pending.empty()) {
        Stratum current = std::move(pending.back());
        pending.pop_back();
        if (current.count == 1) {
            finished.push_back(std::move(current));
            continue;
        }
        auto [count_a, count_b] = split_counts(current.count, options.avoid_odd_splits);
        if (rng.coin())
            std::swap(count_a, count_b);
        const Index axis = longest_side(current.box, rng);
        const double lo = current.box.lower(axis);
        const double position =
            lo + current.box.extent(axis) * static_cast<double>(count_a) / static_cast<double>(current.count);
        auto [box_a, box_b] = current.box.split(axis, position);
        pending.push_back({std::move(box_b), count_b});
        pending.push_back({std::move(box_a), count_a});
        ++splits;
    }
    if (split_count)
        *split_count = splits;
    return {domain, std::move(finished)};
}

Stratification grid_partition(const std::vector<std::size_t>& bins, const Hyperbox& domain)
{
    if (bins.empty())
        throw std::invalid_argument("grid needs at least one dimension");
    if (static_cast<Index>(bins.size()) != domain.dim())
        throw std::invalid_argument("grid dimensionality does not match domain");
    if (std::any_of(bins.begin(), bins.end(), [](std::size_t k) { return k == 0; }))
        throw std::invalid_argument("bin counts must be positive");

    const Index n = domain.dim();
    auto edge = [&](Index dim, std::size_t j) {
        if (j == bins[dim])
            return domain.upper(dim);
        return domain.lower(dim) + domain.extent(dim) * static_cast<double>(j) / static_cast<double>(bins[dim]);
    };

    const std::size_t total = std::accumulate(bins.begin(), bins.end(), std::size_t{1}, std::multiplies<>());
    std::vector<Stratum> strata;
    strata.reserve(total);
    std::vector<std::size_t> cell(bins.size(), 0);
    Hyperbox::Vector lower(n), upper(n);
    for (std::size_t c = 0; c < total; ++c) {
        for (Index d = 0; d < n; ++d) {
            lower[d] = edge(d, cell[d]);
            upper[d] = edge(d, cell[d] + 1);
        }
        strata.push_back({Hyperbox(lower, upper), 1});
        for (Index d = n - 1; d >= 0; --d) {
            if (++cell[d] < bins[d])
                break;
            cell[d] = 0;
        }
    }
    return {domain, std::move(strata)};
}

namespace {

struct PendingBox {
    Hyperbox box;
    std::vector<Index> members;
};

// Tries to split along `axis`; returns false when all members share that coordinate.
bool try_mean_split(const PointMatrix& pts, const PendingBox& node, Index axis, double& position)
{
    double sum = 0;
    double lo = pts(node.members.front(), axis);
    double hi = lo;
    for (Index i : node.members) {
        double v = pts(i, axis);
        sum += v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(lo < hi))
        return false;
    const double mean = std::clamp(sum / static_cast<double>(node.members.size()), lo, hi);
    // Nearest coordinates at or below and strictly above the preliminary position.
    double below = lo;
    double above = hi;
    for (Index i : node.members) {
        double v = pts(i, axis);
        if (v <= mean)
            below = std::max(below, v);
        else
            above = std::min(above, v);
    }
    if (!(below < above))
        return false;
    position = 0.5 * (below + above);
    return position > node.box.lower(axis) && position < node.box.upper(axis);
}

} // namespace

Stratification mean_split_partition(const PointSet& points, RngStream& rng)
{
    const Index count = points.size();
    if (count < 1)
        throw std::invalid_argument("mean-split partition needs at least one point");
    const PointMatrix& pts = points.points;
    const Index n = points.dim();

    std::vector<std::optional<Hyperbox>> assigned(static_cast<std::size_t>(count));
    std::vector<PendingBox> pending;
    {
        PendingBox root{points.domain, std::vector<Index>(static_cast<std::size_t>(count))};
        std::iota(root.members.begin(), root.members.end(), Index{0});
        pending.push_back(std::move(root));
    }
    std::vector<Index> order(static_cast<std::size_t>(n));

    while (!pending.empty()) {
        PendingBox node = std::move(pending.back());
        pending.pop_back();
        if (node.members.size() == 1) {
            assigned[static_cast<std::size_t>(node.members.front())] = std::move(node.box);
            continue;
        }
        Index axis = longest_side(node.box, rng);
        double position = 0;
        if (!try_mean_split(pts, node, axis, position)) {
            // Fall back to the remaining dimensions, longest first.
            std::iota(order.begin(), order.end(), Index{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](Index a, Index b) { return node.box.extent(a) > node.box.extent(b); });
            bool found = false;
            for (Index candidate : order) {
                if (candidate != axis && try_mean_split(pts, node, candidate, position)) {
                    axis = candidate;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw CoincidentPoints();
        }
        auto [box_lo, box_hi] = node.box.split(axis, position);
        PendingBox left{std::move(box_lo), {}};
        PendingBox right{std::move(box_hi), {}};
        for (Index i : node.members)
            (pts(i, axis) < position ? left : right).members.push_back(i);
        pending.push_back(std::move(right));
        pending.push_back(std::move(left));
    }

    std::vector<Stratum> strata;
    strata.reserve(assigned.size());
    for (auto& box : assigned)
        strata.push_back({std::move(*box), 1});
    return {points.domain, std::move(strata)};
}

double aspect_ratio(const Stratification& strat)
{
    double ratio = 1.0;
    for (const auto& s : strat.strata) {
        auto ext = s.box.extent();
        ratio = std::min(ratio, ext.minCoeff() / ext.maxCoeff());
    }
    return ratio;
}

void validate_cover(const Stratification& strat, double rel_tol)
{
    if (strat.strata.empty())
        throw std::invalid_argument("stratification has no strata");
    double total = 0;
    for (const auto& s : strat.strata) {
        if (s.count < 1)
            throw std::invalid_argument("stratum count must be positive");
        if (s.box.dim() != strat.domain.dim())
            throw std::invalid_argument("stratum dimension does not match domain");
        if (!strat.domain.contains(s.box.lower()) || !strat.domain.contains(s.box.upper()))
            throw std::invalid_argument("stratum extends beyond the domain");
        total += volume(s.box);
    }
    const double expected = volume(strat.domain);
    if (std::abs(total - expected) > rel_tol * expected)
        throw std::invalid_argument("strata volumes do not sum to the domain volume");
}

bool is_proportional(const Stratification& strat, double rel_tol)
{
    const double whole = volume(strat.domain);
    const auto n_total = static_cast<double>(strat.total_count());
    for (const auto& s : strat.strata) {
        const double expected = static_cast<double>(s.count) / n_total;
        if (std::abs(volume(s.box) / whole - expected) > rel_tol * expected)
            return false;
    }
    return true;
}

} // namespace stratarium
