#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stratarium {

/// Raised when a bipartite bins-vs-strata graph has no perfect matching.
class InfeasibleLatinization : public std::runtime_error {
public:
    InfeasibleLatinization(std::size_t dimension, std::size_t matched, std::size_t required)
        : std::runtime_error("latinization infeasible: dimension " + std::to_string(dimension) +
                             " admits a maximum matching of " + std::to_string(matched) + " of " +
                             std::to_string(required)),
          dimension_(dimension), matched_(matched)
    {
    }

    std::size_t dimension() const { return dimension_; }
    std::size_t matched() const { return matched_; }

private:
    std::size_t dimension_;
    std::size_t matched_;
};

class CoincidentPoints : public std::runtime_error {
public:
    CoincidentPoints() : std::runtime_error("coincident points") {}
};

class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace stratarium
