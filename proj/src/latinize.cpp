#include "stratarium/latinize.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "stratarium/errors.hpp"
#include "stratarium/sample.hpp"

namespace stratarium {

std::size_t LatinizedSample::total_violations() const
{
    return std::accumulate(violations.begin(), violations.end(), std::size_t{0});
}

bool bin_intersects(const Hyperbox& box, Index dim, std::size_t bin, std::size_t bins)
{
    const double width = 1.0 / static_cast<double>(bins);
    const double lo = std::max(box.lower(dim), static_cast<double>(bin) * width);
    const double hi = std::min(box.upper(dim), static_cast<double>(bin + 1) * width);
    return hi - lo > kGeomTol;
}

namespace {

void require_latin_input(const Stratification& strat)
{
    if (!strat.all_unit_counts())
        throw std::invalid_argument("latinization needs one point per stratum");
    if (!strat.domain.is_unit())
        throw std::invalid_argument("latinization needs the unit hypercube as domain");
}

// Candidate bins around the box's extent along `dim`.
std::pair<std::size_t, std::size_t> bin_window(const Hyperbox& box, Index dim, std::size_t bins)
{
    std::size_t first = bin_of(box.lower(dim), bins);
    std::size_t last = bin_of(box.upper(dim), bins);
    return {first == 0 ? 0 : first - 1, std::min(last + 1, bins - 1)};
}

} // namespace

std::vector<std::size_t> cog_assignment(const Stratification& strat, Index dim, RngStream& rng)
{
    std::vector<std::size_t> order(strat.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Shuffling first makes the stable sort break ties at random. Index ties would give
    // the same strata the lowest bins in every dimension and correlate the coordinates.
    rng.shuffle(order.begin(), order.end());
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return strat.strata[a].box.midpoint(dim) < strat.strata[b].box.midpoint(dim);
    });
    std::vector<std::size_t> bins(strat.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank)
        bins[order[rank]] = rank;
    return bins;
}

BipartiteGraph latin_graph(const Stratification& strat, Index dim)
{
    const std::size_t count = strat.size();
    BipartiteGraph graph;
    graph.right_size = count;
    graph.adjacency.resize(count);
    for (std::size_t s = 0; s < count; ++s) {
        const Hyperbox& box = strat.strata[s].box;
        auto [first, last] = bin_window(box, dim, count);
        for (std::size_t b = first; b <= last; ++b)
            if (bin_intersects(box, dim, b, count))
                graph.adjacency[s].push_back(b);
    }
    return graph;
}

std::vector<std::size_t> matched_assignment(const Stratification& strat, Index dim, WarmStart warm,
                                            RngStream& rng)
{
    require_latin_input(strat);
    const std::size_t count = strat.size();
    const BipartiteGraph graph = latin_graph(strat, dim);

    std::vector<std::size_t> match(count, kUnmatched);
    if (warm == WarmStart::Cog) {
        auto initial = cog_assignment(strat, dim, rng);
        for (std::size_t s = 0; s < count; ++s)
            if (bin_intersects(strat.strata[s].box, dim, initial[s], count))
                match[s] = initial[s];
    } else {
        std::vector<std::size_t> order(count);
        std::iota(order.begin(), order.end(), std::size_t{0});
        rng.shuffle(order.begin(), order.end());
        std::vector<bool> taken(count, false);
        std::vector<std::size_t> free_bins;
        for (std::size_t s : order) {
            free_bins.clear();
            for (std::size_t b : graph.adjacency[s])
                if (!taken[b])
                    free_bins.push_back(b);
            if (free_bins.empty())
                continue;
            std::size_t b = free_bins[rng.below(free_bins.size())];
            taken[b] = true;
            match[s] = b;
        }
    }

    const std::size_t matched = hopcroft_karp(graph, match);
    if (matched != count)
        throw InfeasibleLatinization(static_cast<std::size_t>(dim), matched, count);
    return match;
}

namespace {

LatinizedSample draw_latinized(const Stratification& strat, BinAssignment bins, RngStream& rng)
{
    const std::size_t count = strat.size();
    const Index n = strat.dim();
    PointMatrix pts(static_cast<Index>(count), n);
    std::vector<std::size_t> violations(static_cast<std::size_t>(n), 0);
    for (Index k = 0; k < n; ++k) {
        RngStream stream = rng.child("latinize-draw", static_cast<std::uint64_t>(k));
        const auto& assigned = bins[static_cast<std::size_t>(k)];
        for (std::size_t s = 0; s < count; ++s) {
            const Hyperbox& box = strat.strata[s].box;
            if (bin_intersects(box, k, assigned[s], count)) {
                pts(static_cast<Index>(s), k) = uniform_in_bin(box.lower(k), box.upper(k), assigned[s], count, stream);
            } else {
                ++violations[static_cast<std::size_t>(k)];
                pts(static_cast<Index>(s), k) = stream.uniform(box.lower(k), box.upper(k));
            }
        }
    }
    return {PointSet(std::move(pts), strat.domain), std::move(bins), std::move(violations)};
}

} // namespace

LatinizedSample algss(const Stratification& strat, RngStream& rng)
{
    require_latin_input(strat);
    BinAssignment bins;
    for (Index k = 0; k < strat.dim(); ++k) {
        RngStream stream = rng.child("latinize-assign", static_cast<std::uint64_t>(k));
        bins.push_back(cog_assignment(strat, k, stream));
    }
    return draw_latinized(strat, std::move(bins), rng);
}

LatinizedSample lgss(const Stratification& strat, RngStream& rng, WarmStart warm)
{
    require_latin_input(strat);
    BinAssignment bins;
    for (Index k = 0; k < strat.dim(); ++k) {
        RngStream stream = rng.child("latinize-assign", static_cast<std::uint64_t>(k));
        bins.push_back(matched_assignment(strat, k, warm, stream));
    }
    return draw_latinized(strat, std::move(bins), rng);
}

Index PssGrouping::dim() const
{
    Index total = 0;
    for (const auto& g : groups)
        total += static_cast<Index>(g.size());
    return total;
}

PssGrouping PssGrouping::parse(std::string_view spec)
{
    PssGrouping grouping;
    Index next = 0;
    auto read_number = [&](std::string_view text) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
            throw std::invalid_argument("bad group spec '" + std::string(spec) + "'");
        return value;
    };
    while (!spec.empty()) {
        auto end = spec.find_first_of(",+");
        std::string_view block = spec.substr(0, end);
        auto x = block.find('x');
        if (x == std::string_view::npos)
            throw std::invalid_argument("bad group spec '" + std::string(spec) + "'");
        std::size_t width = read_number(block.substr(0, x));
        std::size_t repeats = read_number(block.substr(x + 1));
        for (std::size_t r = 0; r < repeats; ++r) {
            std::vector<Index> group(width);
            std::iota(group.begin(), group.end(), next);
            next += static_cast<Index>(width);
            grouping.groups.push_back(std::move(group));
        }
        spec = end == std::string_view::npos ? std::string_view{} : spec.substr(end + 1);
    }
    if (grouping.groups.empty())
        throw std::invalid_argument("empty group spec");
    return grouping;
}

std::string PssGrouping::to_string() const
{
    std::string out;
    std::size_t i = 0;
    while (i < groups.size()) {
        std::size_t j = i;
        while (j < groups.size() && groups[j].size() == groups[i].size())
            ++j;
        if (!out.empty())
            out += '+';
        out += std::to_string(groups[i].size()) + "x" + std::to_string(j - i);
        i = j;
    }
    return out;
}

PointSet pss_compose(const std::vector<PointSet>& designs, const PssGrouping& grouping, RngStream& rng)
{
    if (designs.size() != grouping.groups.size() || designs.empty())
        throw std::invalid_argument("need one design per group");
    const Index count = designs.front().size();
    const Index n = grouping.dim();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& group : grouping.groups) {
        for (Index d : group) {
            if (d < 0 || d >= n || seen[static_cast<std::size_t>(d)])
                throw std::invalid_argument("groups must partition the dimensions");
            seen[static_cast<std::size_t>(d)] = true;
        }
    }

    PointMatrix pts(count, n);
    std::vector<Index> rows(static_cast<std::size_t>(count));
    for (std::size_t g = 0; g < designs.size(); ++g) {
        const auto& design = designs[g];
        const auto& group = grouping.groups[g];
        if (design.size() != count)
            throw std::invalid_argument("group designs differ in point count");
        if (design.dim() != static_cast<Index>(group.size()))
            throw std::invalid_argument("group design dimension does not match its group");
        std::iota(rows.begin(), rows.end(), Index{0});
        rng.shuffle(rows.begin(), rows.end());
        for (Index i = 0; i < count; ++i)
            for (std::size_t c = 0; c < group.size(); ++c)
                pts(i, group[c]) = design.points(rows[static_cast<std::size_t>(i)], static_cast<Index>(c));
    }
    return PointSet(std::move(pts));
}

std::vector<std::size_t> lh_violations(const PointSet& points)
{
    const auto count = static_cast<std::size_t>(points.size());
    std::vector<std::size_t> out(static_cast<std::size_t>(points.dim()), 0);
    std::vector<bool> occupied(count);
    for (Index k = 0; k < points.dim(); ++k) {
        std::fill(occupied.begin(), occupied.end(), false);
        std::size_t distinct = 0;
        for (Index i = 0; i < points.size(); ++i) {
            std::size_t b = bin_of(points.points(i, k), count);
            if (!occupied[b]) {
                occupied[b] = true;
                ++distinct;
            }
        }
        out[static_cast<std::size_t>(k)] = count - distinct;
    }
    return out;
}

} // namespace stratarium
