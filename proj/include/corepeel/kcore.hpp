#pragma once

#include <cstdint>
#include <vector>

#include "corepeel/graph.hpp"

namespace corepeel {

// Phase-I products: core numbers C(v), core counts CC(v), and the seed
// visitation order (decreasing lexicographic on (C, CC), ids ascending).
struct CoreInfo {
    std::vector<std::uint32_t> core;
    std::vector<std::uint32_t> core_count;
    std::vector<NodeId> seed_order;
};

// Bucket-based min-degree deletion, O(|V|+|E|).
std::vector<std::uint32_t> core_decomposition(const Graph& g);

// CC(v) = |{u in N(v) : C(u) >= C(v)}|.
std::vector<std::uint32_t> core_counts(const Graph& g,
                                       const std::vector<std::uint32_t>& core);

std::vector<NodeId> seed_order(const std::vector<std::uint32_t>& core,
                               const std::vector<std::uint32_t>& core_count);

CoreInfo analyze_cores(const Graph& g);

}  // namespace corepeel
