#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace stratarium {

/// Deterministic random source passed explicitly to every stochastic
/// operation. Child streams are derived from (key, label, index) so that
/// adding a consumer never perturbs the draws of existing ones.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed = 0);

    /// Independent stream keyed by this stream's key, a purpose label and an index.
    /// Does not advance this stream.
    RngStream child(std::string_view label, std::uint64_t index = 0) const;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer on [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// True with probability 1/2.
    bool coin() { return (engine_() >> 63) != 0; }

    std::uint64_t key() const { return key_; }

    /// Fisher-Yates shuffle of a random-access range.
    template <typename It>
    void shuffle(It first, It last)
    {
        auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) {
            auto j = below(i);
            using std::swap;
            swap(first[i - 1], first[j]);
        }
    }

private:
    std::uint64_t key_;
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

} // namespace stratarium
