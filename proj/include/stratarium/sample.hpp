#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "stratarium/geometry.hpp"
#include "stratarium/rng.hpp"

namespace stratarium {

/// Number of uniform draws averaged per coordinate, or infinity (stratum centroid).
class BatesParameter {
public:
    explicit BatesParameter(unsigned draws);
    static BatesParameter infinity() { return BatesParameter(); }
    /// Accepts a positive integer or "inf".
    static BatesParameter parse(std::string_view text);

    bool is_infinite() const { return draws_ == 0; }
    unsigned draws() const { return draws_; }
    std::string to_string() const;

private:
    BatesParameter() = default;
    unsigned draws_ = 0;
};

/// One point per stratum, in stratum order. Throws if any stratum count differs from one.
PointSet sample_stratified(const Stratification& strat, BatesParameter bates, RngStream& rng);

/// Simple random sampling: i.i.d. uniform points.
PointSet sample_srs(std::size_t n_points, const Hyperbox& domain, RngStream& rng);

/// Latin hypercube sample in the unit cube.
PointSet sample_lhs(std::size_t n_points, Index dims, RngStream& rng);

/// Plain Halton points starting at sequence index `start_index + 1`. At most 20 dimensions.
PointSet sample_halton(std::size_t n_points, Index dims, std::uint64_t start_index = 0);

inline constexpr Index kMaxHaltonDims = 20;

/// Radical inverse of `index` in `base`.
double radical_inverse(std::uint64_t index, std::uint64_t base);

/// Rank-1 lattice with generating vector (1, a, a^2, ...) mod N plus a Cranley-Patterson shift.
struct KorobovSpec {
    std::uint64_t points = 1;
    std::uint64_t multiplier = 1;
    Eigen::VectorXd shift;
};

PointSet sample_korobov(const KorobovSpec& spec, Index dims);

/// Best of `trials` random multipliers by separation distance of the unshifted lattice,
/// with a fresh uniform shift. `trials >= N - 1` enumerates every multiplier instead.
KorobovSpec select_korobov(std::size_t n_points, Index dims, std::size_t trials, RngStream& rng);

/// As select_korobov, restricted to multipliers whose lattice has the Latin property.
/// The shift is redrawn until the shifted lattice is still Latin.
KorobovSpec select_latin_korobov(std::size_t n_points, Index dims, std::size_t trials, RngStream& rng);

/// Equal-width bin of `x` among `bins` bins of [0,1]; x = 1 maps to the last bin.
inline std::size_t bin_of(double x, std::size_t bins)
{
    auto b = static_cast<double>(bins) * x;
    if (!(b > 0))
        return 0;
    auto j = static_cast<std::size_t>(b);
    return j >= bins ? bins - 1 : j;
}

/// Uniform draw in [lo, hi] nudged so that bin_of(result, bins) == bin.
/// The interval must intersect the bin with positive length.
double uniform_in_bin(double lo, double hi, std::size_t bin, std::size_t bins, RngStream& rng);

} // namespace stratarium
