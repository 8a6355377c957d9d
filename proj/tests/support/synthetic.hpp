#pragma once

// Synthetic host graphs for benchmark-style tests: heavy-tailed degree
// distributions in the spirit of the SNAP autonomous-system and
// collaboration networks.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "corepeel/graph.hpp"

namespace corepeel::testing {

// Samples endpoints from a power-law weight distribution until exactly
// `target_edges` distinct simple edges exist. All `node_count` ids are
// kept, so |V| and arc counts are exact.
inline Graph zipf_host(std::size_t node_count, std::size_t target_edges,
                       std::uint64_t seed, double alpha = 0.8) {
    std::mt19937_64 rng(seed);
    std::vector<double> weights(node_count);
    for (std::size_t i = 0; i < node_count; ++i)
        weights[i] = 1.0 / std::pow(static_cast<double>(i + 1), alpha);
    std::discrete_distribution<std::uint32_t> pick(weights.begin(), weights.end());

    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(target_edges);
    while (edges.size() < target_edges) {
        NodeId u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
        if (seen.insert(key).second) edges.emplace_back(u, v);
    }
    return Graph::from_edges(node_count, std::move(edges));
}

// Configuration-model host whose degree distribution is fixed and
// independent of the graph size: node degrees repeat a skewed pattern
// with mean 10, stubs are matched uniformly at random, and collisions
// are replaced by fresh degree-weighted pairs until exactly
// `target_edges` distinct simple edges exist. Requires target_edges =
// 5 * node_count. Scaling node and edge counts by the same factor
// leaves the degree distribution unchanged, which makes this family
// suitable for time-scaling measurements.
inline Graph pattern_host(std::size_t node_count, std::size_t target_edges,
                          std::uint64_t seed) {
    static constexpr std::uint32_t kPattern[10] = {2, 2, 3, 3, 4, 5, 6, 8, 17, 50};
    if (node_count % 10 != 0 || target_edges * 2 != node_count * 10)
        throw std::invalid_argument("pattern_host: need |V| % 10 == 0 and |E| = 5 |V|");

    std::mt19937_64 rng(seed);
    std::vector<NodeId> stubs;
    stubs.reserve(2 * target_edges);
    for (std::size_t v = 0; v < node_count; ++v)
        for (std::uint32_t k = 0; k < kPattern[v % 10]; ++k)
            stubs.push_back(static_cast<NodeId>(v));
    std::shuffle(stubs.begin(), stubs.end(), rng);

    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(target_edges);
    auto try_add = [&](NodeId u, NodeId v) {
        if (u == v) return;
        if (u > v) std::swap(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
        if (seen.insert(key).second) edges.emplace_back(u, v);
    };
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) try_add(stubs[i], stubs[i + 1]);
    std::uniform_int_distribution<std::size_t> pick(0, stubs.size() - 1);
    while (edges.size() < target_edges) try_add(stubs[pick(rng)], stubs[pick(rng)]);
    return Graph::from_edges(node_count, std::move(edges));
}

// Circulant host with random offsets: node v is adjacent to v +- o for
// each offset o, so every node has degree exactly 2 * |offsets|. The
// degree distribution is a point mass independent of |V|, which makes
// this family the cleanest instrument for time-scaling measurements:
// random hosts of these sizes mostly measure how much slower the memory
// system serves a 10x larger working set, not the algorithm.
inline Graph ring_host(std::size_t node_count, std::size_t target_edges,
                       std::uint64_t seed) {
    if (target_edges % node_count != 0 || node_count < 2 * (target_edges / node_count) + 2)
        throw std::invalid_argument("ring_host: need |E| = k |V| with |V| > 2k + 1");
    const std::size_t k = target_edges / node_count;

    std::mt19937_64 rng(seed);
    std::unordered_set<std::size_t> offsets;
    std::uniform_int_distribution<std::size_t> pick(1, (node_count - 1) / 2);
    while (offsets.size() < k) offsets.insert(pick(rng));

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(target_edges);
    for (std::size_t v = 0; v < node_count; ++v)
        for (std::size_t o : offsets)
            edges.emplace_back(static_cast<NodeId>(v),
                               static_cast<NodeId>((v + o) % node_count));
    return Graph::from_edges(node_count, std::move(edges));
}

inline void write_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    out << "# synthetic fixture\n";
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId u : g.neighbors(v))
            if (v < u) out << g.label(v) << '\t' << g.label(u) << '\n';
}

}  // namespace corepeel::testing
