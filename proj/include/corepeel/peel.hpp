#pragma once

#include <cstdint>
#include <vector>

#include "corepeel/graph.hpp"

namespace corepeel {

struct PeelOutcome {
    bool success = false;
    NodeSet community;       // set iff success
    std::size_t removals = 0;
};

// Mutable induced-subgraph state for the peeling procedure. Degrees are
// kept in buckets for amortized O(1) min-degree lookups; entries are
// invalidated lazily.
class PeelState {
public:
    PeelState(const Graph& g, const NodeSet& candidate);

    std::size_t size() const { return alive_count_; }
    std::size_t induced_edges() const { return edge_count_; }
    double density() const;  // requires size >= 2

    // Minimum current degree; ties by smallest D(v) = sum of current
    // degrees of current neighbors, then by ascending internal id.
    NodeId select_min_degree();

    void remove(NodeId global_id);

    NodeSet alive() const;

private:
    std::size_t local(NodeId global_id) const;
    std::uint64_t neighbor_degree_sum(std::size_t li) const;

    std::vector<NodeId> nodes_;                 // sorted global ids
    std::vector<std::vector<std::uint32_t>> adj_;  // local indices
    std::vector<std::uint32_t> deg_;
    std::vector<bool> dead_;
    std::vector<std::vector<std::uint32_t>> buckets_;
    std::size_t min_bucket_ = 0;
    std::size_t alive_count_ = 0;
    std::size_t edge_count_ = 0;
};

// Modified Charikar peel: before each removal, report success as soon as
// the current set has density >= delta and size >= q; strip a minimum
// degree node otherwise; fail once the size would drop below q.
PeelOutcome peel(const Graph& g, const NodeSet& candidate, std::size_t q, double delta);

// Classic peel-to-exhaustion returning the intermediate set of maximum
// average degree (1/2-approximation); used as a test oracle.
NodeSet peel_max_avg_degree(const Graph& g, const NodeSet& candidate);

}  // namespace corepeel
