#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corepeel/graph.hpp"
#include "corepeel/kcore.hpp"

namespace corepeel {

struct PdcParams {
    std::size_t min_size = 2;   // q
    double min_density = 1.0;   // delta
    int radius = 1;             // 1 or 2
    std::optional<double> prefilter_density;  // delta_low; defaults to delta/2

    double delta_low() const { return prefilter_density.value_or(min_density / 2.0); }
    void validate() const;
};

struct PhaseTimings {
    double phase1_s = 0.0;
    double phase2_s = 0.0;
    double phase3_s = 0.0;
    double total_s() const { return phase1_s + phase2_s + phase3_s; }
};

struct CoverResult {
    std::vector<NodeSet> communities;  // discovery order
    NodeSet marked;                    // union of all community members
    PhaseTimings timings;
    std::size_t seeds_examined = 0;
    std::size_t seeds_passed_prefilter = 0;
};

// Seed neighborhood: {v} plus unmarked nodes u with C(u) >= C(v) within
// `radius` hops; at radius 2 intermediate hops must themselves qualify.
NodeSet candidate_set(const Graph& g, const CoreInfo& info, NodeId v,
                      const PdcParams& params, const NodeSet& marked);

CoverResult core_and_peel(const Graph& g, const PdcParams& params);

struct Violation {
    char condition;  // 'a', 'b', 'c', 'f'
    std::string detail;
};

struct CoverValidation {
    std::vector<Violation> violations;
    std::size_t mergeable_pairs = 0;      // internal-maximality (d) flags
    std::size_t residual_communities = 0; // external-maximality (e) heuristic
};

CoverValidation validate_cover(const Graph& g, const CoverResult& cover,
                               const PdcParams& params);

// Greedy pairwise merging of communities whose union still qualifies and
// does not lose density against the denser-of-pair rule; off by default
// in the pipeline.
CoverResult merge_pass(const Graph& g, const CoverResult& cover, const PdcParams& params);

}  // namespace corepeel
