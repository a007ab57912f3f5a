#include "stratarium/sample.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "stratarium/latinize.hpp"
#include "stratarium/metrics.hpp"

namespace stratarium {

BatesParameter::BatesParameter(unsigned draws) : draws_(draws)
{
    if (draws == 0)
        throw std::invalid_argument("Bates parameter must be a positive integer or inf");
}

BatesParameter BatesParameter::parse(std::string_view text)
{
    if (text == "inf" || text == "INF" || text == "infinity")
        return infinity();
    unsigned value = 0;
    if (text.empty())
        throw std::invalid_argument("empty Bates parameter");
    for (char c : text) {
        if (c < '0' || c > '9' || value > 100000000u)
            throw std::invalid_argument("Bates parameter must be a positive integer or inf");
        value = value * 10 + static_cast<unsigned>(c - '0');
    }
    return BatesParameter(value);
}

std::string BatesParameter::to_string() const
{
    return is_infinite() ? "inf" : std::to_string(draws_);
}

PointSet sample_stratified(const Stratification& strat, BatesParameter bates, RngStream& rng)
{
    if (!strat.all_unit_counts())
        throw std::invalid_argument("stratified sampling needs one point per stratum");
    const Index n = strat.dim();
    PointMatrix pts(static_cast<Index>(strat.size()), n);
    for (Index i = 0; i < pts.rows(); ++i) {
        const Hyperbox& box = strat.strata[static_cast<std::size_t>(i)].box;
        for (Index k = 0; k < n; ++k) {
            if (bates.is_infinite()) {
                pts(i, k) = box.midpoint(k);
                continue;
            }
            double sum = 0;
            for (unsigned j = 0; j < bates.draws(); ++j)
                sum += rng.uniform(box.lower(k), box.upper(k));
            pts(i, k) = std::clamp(sum / bates.draws(), box.lower(k), box.upper(k));
        }
    }
    return PointSet(std::move(pts), strat.domain);
}

PointSet sample_srs(std::size_t n_points, const Hyperbox& domain, RngStream& rng)
{
    const Index n = domain.dim();
    PointMatrix pts(static_cast<Index>(n_points), n);
    for (Index i = 0; i < pts.rows(); ++i)
        for (Index k = 0; k < n; ++k)
            pts(i, k) = rng.uniform(domain.lower(k), domain.upper(k));
    return PointSet(std::move(pts), domain);
}

double uniform_in_bin(double lo, double hi, std::size_t bin, std::size_t bins, RngStream& rng)
{
    const double width = 1.0 / static_cast<double>(bins);
    const double a = std::max(lo, static_cast<double>(bin) * width);
    const double b = std::min(hi, static_cast<double>(bin + 1) * width);
    double x = rng.uniform(a, b);
    // Rounding at the bin edges can push x into a neighbour.
    while (bin_of(x, bins) > bin && x > a)
        x = std::nextafter(x, a);
    while (bin_of(x, bins) < bin && x < b)
        x = std::nextafter(x, b);
    return x;
}

PointSet sample_lhs(std::size_t n_points, Index dims, RngStream& rng)
{
    if (n_points == 0 || dims < 1)
        throw std::invalid_argument("LHS needs positive point count and dimension");
    PointMatrix pts(static_cast<Index>(n_points), dims);
    std::vector<std::size_t> perm(n_points);
    for (Index k = 0; k < dims; ++k) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        rng.shuffle(perm.begin(), perm.end());
        for (std::size_t i = 0; i < n_points; ++i)
            pts(static_cast<Index>(i), k) = uniform_in_bin(0.0, 1.0, perm[i], n_points, rng);
    }
    return PointSet(std::move(pts));
}

namespace {
constexpr std::array<std::uint64_t, kMaxHaltonDims> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                                               31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
}

double radical_inverse(std::uint64_t index, std::uint64_t base)
{
    double result = 0;
    double scale = 1.0 / static_cast<double>(base);
    while (index > 0) {
        result += scale * static_cast<double>(index % base);
        index /= base;
        scale /= static_cast<double>(base);
    }
    return result;
}

PointSet sample_halton(std::size_t n_points, Index dims, std::uint64_t start_index)
{
    if (dims < 1 || dims > kMaxHaltonDims)
        throw std::invalid_argument("Halton sequence supports 1 to 20 dimensions");
    PointMatrix pts(static_cast<Index>(n_points), dims);
    for (Index i = 0; i < pts.rows(); ++i)
        for (Index k = 0; k < dims; ++k)
            pts(i, k) = radical_inverse(start_index + static_cast<std::uint64_t>(i) + 1, kPrimes[static_cast<std::size_t>(k)]);
    return PointSet(std::move(pts));
}

PointSet sample_korobov(const KorobovSpec& spec, Index dims)
{
    if (spec.points == 0 || dims < 1)
        throw std::invalid_argument("lattice needs positive point count and dimension");
    if (spec.shift.size() != 0 && spec.shift.size() != dims)
        throw std::invalid_argument("lattice shift has wrong dimension");
    const std::uint64_t N = spec.points;
    std::vector<std::uint64_t> generator(static_cast<std::size_t>(dims));
    std::uint64_t g = 1 % N;
    for (auto& gk : generator) {
        gk = g;
        g = static_cast<std::uint64_t>((static_cast<unsigned __int128>(g) * (spec.multiplier % N)) % N);
    }
    PointMatrix pts(static_cast<Index>(N), dims);
    for (std::uint64_t i = 0; i < N; ++i) {
        for (Index k = 0; k < dims; ++k) {
            auto residue = static_cast<std::uint64_t>((static_cast<unsigned __int128>(i) * generator[static_cast<std::size_t>(k)]) % N);
            double x = static_cast<double>(residue) / static_cast<double>(N);
            if (spec.shift.size() != 0) {
                x += spec.shift[k];
                if (x >= 1.0)
                    x -= 1.0;
            }
            pts(static_cast<Index>(i), k) = x;
        }
    }
    return PointSet(std::move(pts));
}

namespace {

Eigen::VectorXd random_shift(Index dims, RngStream& rng)
{
    Eigen::VectorXd s(dims);
    for (Index k = 0; k < dims; ++k)
        s[k] = rng.uniform();
    return s;
}

bool is_latin(const PointSet& pts)
{
    auto v = lh_violations(pts);
    return std::all_of(v.begin(), v.end(), [](std::size_t x) { return x == 0; });
}

// Argmax of separation over candidate multipliers; candidates are pruned as soon as
// one pair falls below the best distance found so far.
std::uint64_t best_multiplier(std::size_t n_points, Index dims, const std::vector<std::uint64_t>& candidates)
{
    std::uint64_t best = candidates.front();
    double best_sep = -1;
    for (std::uint64_t a : candidates) {
        auto pts = sample_korobov({n_points, a, {}}, dims);
        auto sep = separation_distance_above(pts.points, best_sep);
        if (sep && *sep > best_sep) {
            best_sep = *sep;
            best = a;
        }
    }
    return best;
}

template <typename Accept>
KorobovSpec select_impl(std::size_t n_points, Index dims, std::size_t trials, RngStream& rng, Accept accept)
{
    if (n_points == 0 || dims < 1 || trials == 0)
        throw std::invalid_argument("lattice selection needs positive N, dimension and trials");
    KorobovSpec spec{n_points, 1, {}};
    if (n_points > 2) {
        std::vector<std::uint64_t> candidates;
        if (trials >= n_points - 1) {
            for (std::uint64_t a = 1; a < n_points; ++a)
                if (accept(a))
                    candidates.push_back(a);
        } else {
            // Rejection sampling; a = 1 is always admissible so this terminates.
            while (candidates.size() < trials) {
                std::uint64_t a = 1 + rng.below(n_points - 1);
                if (accept(a))
                    candidates.push_back(a);
            }
        }
        spec.multiplier = best_multiplier(n_points, dims, candidates);
    }
    spec.shift = random_shift(dims, rng);
    return spec;
}

} // namespace

KorobovSpec select_korobov(std::size_t n_points, Index dims, std::size_t trials, RngStream& rng)
{
    return select_impl(n_points, dims, trials, rng, [](std::uint64_t) { return true; });
}

KorobovSpec select_latin_korobov(std::size_t n_points, Index dims, std::size_t trials, RngStream& rng)
{
    // The unshifted projection k is the residues i * a^k mod N, a permutation exactly when
    // gcd(a^k mod N, N) = 1. Checking on integers avoids points landing on bin edges.
    auto latin = [&](std::uint64_t a) {
        std::uint64_t g = 1;
        for (Index k = 1; k < dims; ++k) {
            g = static_cast<std::uint64_t>(static_cast<unsigned __int128>(g) * a % n_points);
            if (std::gcd(g, static_cast<std::uint64_t>(n_points)) != 1)
                return false;
        }
        return true;
    };
    KorobovSpec spec = select_impl(n_points, dims, trials, rng, latin);
    for (int attempt = 0; attempt < 64; ++attempt) {
        if (is_latin(sample_korobov(spec, dims)))
            return spec;
        spec.shift = random_shift(dims, rng);
    }
    spec.shift = Eigen::VectorXd::Zero(dims);
    return spec;
}

} // namespace stratarium
