#include "stratarium/matching.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace stratarium {

namespace {

class HopcroftKarp {
public:
    HopcroftKarp(const BipartiteGraph& graph, std::vector<std::size_t>& match_left)
        : graph_(graph), match_left_(match_left), match_right_(graph.right_size, kUnmatched),
          layer_(graph.left_size()), next_edge_(graph.left_size())
    {
        match_left_.resize(graph.left_size(), kUnmatched);
        for (std::size_t u = 0; u < graph.left_size(); ++u) {
            const std::size_t v = match_left_[u];
            if (v == kUnmatched)
                continue;
            if (v >= graph.right_size || match_right_[v] != kUnmatched)
                throw std::invalid_argument("warm-start matching is not a matching");
            match_right_[v] = u;
        }
    }

    std::size_t run()
    {
        while (build_layers()) {
            std::fill(next_edge_.begin(), next_edge_.end(), 0);
            for (std::size_t u = 0; u < graph_.left_size(); ++u)
                if (match_left_[u] == kUnmatched)
                    augment(u);
        }
        std::size_t size = 0;
        for (std::size_t v : match_left_)
            size += v != kUnmatched;
        return size;
    }

private:
    static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

    // BFS from all free left vertices; true if some free right vertex is reachable.
    bool build_layers()
    {
        std::queue<std::size_t> frontier;
        for (std::size_t u = 0; u < graph_.left_size(); ++u) {
            layer_[u] = match_left_[u] == kUnmatched ? 0 : kInf;
            if (layer_[u] == 0)
                frontier.push(u);
        }
        bool reachable = false;
        while (!frontier.empty()) {
            std::size_t u = frontier.front();
            frontier.pop();
            for (std::size_t v : graph_.adjacency[u]) {
                std::size_t w = match_right_[v];
                if (w == kUnmatched) {
                    reachable = true;
                } else if (layer_[w] == kInf) {
                    layer_[w] = layer_[u] + 1;
                    frontier.push(w);
                }
            }
        }
        return reachable;
    }

    bool augment(std::size_t u)
    {
        const auto& edges = graph_.adjacency[u];
        for (std::size_t& e = next_edge_[u]; e < edges.size(); ++e) {
            std::size_t v = edges[e];
            std::size_t w = match_right_[v];
            if (w == kUnmatched || (layer_[w] == layer_[u] + 1 && augment(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                ++e;
                return true;
            }
        }
        layer_[u] = kInf;
        return false;
    }

    const BipartiteGraph& graph_;
    std::vector<std::size_t>& match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> layer_;
    std::vector<std::size_t> next_edge_;
};

} // namespace

std::size_t hopcroft_karp(const BipartiteGraph& graph, std::vector<std::size_t>& match_left)
{
    return HopcroftKarp(graph, match_left).run();
}

} // namespace stratarium
