#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace stratarium {

/// Bipartite graph stored as adjacency lists from left to right vertices.
struct BipartiteGraph {
    std::size_t right_size = 0;
    std::vector<std::vector<std::size_t>> adjacency;

    std::size_t left_size() const { return adjacency.size(); }
};

inline constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

/// Hopcroft-Karp maximum matching, O(|E| sqrt(|V|)).
///
/// `match_left` holds the warm-start matching on entry (kUnmatched for free vertices; it
/// must be a valid matching over existing edges) and the maximum matching on return.
/// Returns the matching size.
std::size_t hopcroft_karp(const BipartiteGraph& graph, std::vector<std::size_t>& match_left);

} // namespace stratarium
