#include "corepeel/pdc.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>

#include "corepeel/peel.hpp"

namespace corepeel {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

NodeSet candidate_set_impl(const Graph& g, const CoreInfo& info, NodeId v,
                           const PdcParams& params, const std::vector<bool>& marked) {
    const std::uint32_t cv = info.core[v];
    std::vector<NodeId> members{v};

    auto qualifies = [&](NodeId u) { return !marked[u] && info.core[u] >= cv; };

    std::vector<NodeId> frontier;
    for (NodeId u : g.neighbors(v))
        if (qualifies(u)) {
            members.push_back(u);
            frontier.push_back(u);
        }

    if (params.radius == 2) {
        NodeSet level1(members);
        for (NodeId w : frontier)
            for (NodeId u : g.neighbors(w))
                if (u != v && qualifies(u) && !level1.contains(u)) members.push_back(u);
    }
    return NodeSet(std::move(members));
}

NodeSet union_of(const NodeSet& a, const NodeSet& b) {
    std::vector<NodeId> m;
    m.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    return NodeSet(std::move(m));
}

}  // namespace

void PdcParams::validate() const {
    if (min_size < 2) throw std::invalid_argument("min_size must be >= 2");
    if (min_density <= 0.0 || min_density > 1.0)
        throw std::invalid_argument("min_density must be in (0,1]");
    if (radius != 1 && radius != 2) throw std::invalid_argument("radius must be 1 or 2");
    const double low = delta_low();
    if (low <= 0.0 || low > min_density)
        throw std::invalid_argument("prefilter density must be in (0, min_density]");
}

NodeSet candidate_set(const Graph& g, const CoreInfo& info, NodeId v,
                      const PdcParams& params, const NodeSet& marked) {
    std::vector<bool> flags(g.node_count(), false);
    for (NodeId u : marked) flags[u] = true;
    return candidate_set_impl(g, info, v, params, flags);
}

CoverResult core_and_peel(const Graph& g, const PdcParams& params) {
    params.validate();
    CoverResult result;

    auto t0 = Clock::now();
    const CoreInfo info = analyze_cores(g);
    result.timings.phase1_s = seconds_since(t0);

    std::vector<bool> marked(g.node_count(), false);
    std::vector<NodeId> marked_ids;
    const double delta_low = params.delta_low();

    for (NodeId v : info.seed_order) {
        if (marked[v]) continue;

        auto t2 = Clock::now();
        ++result.seeds_examined;
        NodeSet candidate = candidate_set_impl(g, info, v, params, marked);
        bool pass = candidate.size() >= params.min_size &&
                    density(g, candidate) > delta_low;
        result.timings.phase2_s += seconds_since(t2);
        if (!pass) continue;
        ++result.seeds_passed_prefilter;

        auto t3 = Clock::now();
        PeelOutcome outcome = peel(g, candidate, params.min_size, params.min_density);
        result.timings.phase3_s += seconds_since(t3);

        if (outcome.success) {
            for (NodeId u : outcome.community) {
                marked[u] = true;
                marked_ids.push_back(u);
            }
            result.communities.push_back(std::move(outcome.community));
        }
    }
    result.marked = NodeSet(std::move(marked_ids));
    return result;
}

CoverValidation validate_cover(const Graph& g, const CoverResult& cover,
                               const PdcParams& params) {
    CoverValidation v;
    const auto& comms = cover.communities;

    std::vector<bool> seen(g.node_count(), false);
    for (std::size_t i = 0; i < comms.size(); ++i) {
        const NodeSet& c = comms[i];
        for (NodeId u : c) {
            if (u >= g.node_count()) {
                v.violations.push_back({'a', "community " + std::to_string(i) +
                                                 " has out-of-range node"});
                break;
            }
        }
        for (NodeId u : c) {
            if (u < g.node_count() && seen[u]) {
                v.violations.push_back({'b', "community " + std::to_string(i) +
                                                 " overlaps an earlier community"});
                break;
            }
        }
        for (NodeId u : c)
            if (u < g.node_count()) seen[u] = true;

        if (c.size() < params.min_size)
            v.violations.push_back({'c', "community " + std::to_string(i) + " smaller than q"});
        else if (density(g, c) < params.min_density)
            v.violations.push_back({'c', "community " + std::to_string(i) + " below delta"});

        auto radius = induced_radius(g, c);
        if (!radius.has_value() || *radius > 2)
            v.violations.push_back({'f', "community " + std::to_string(i) + " has radius > 2"});
    }

    for (std::size_t i = 0; i < comms.size(); ++i) {
        for (std::size_t j = i + 1; j < comms.size(); ++j) {
            NodeSet u = union_of(comms[i], comms[j]);
            if (u.size() < params.min_size) continue;
            double du = density(g, u);
            double dmin = std::min(density(g, comms[i]), density(g, comms[j]));
            if (du >= params.min_density && du >= dmin) ++v.mergeable_pairs;
        }
    }

    Graph residual = g.remove_nodes(cover.marked);
    v.residual_communities = core_and_peel(residual, params).communities.size();
    return v;
}

CoverResult merge_pass(const Graph& g, const CoverResult& cover, const PdcParams& params) {
    CoverResult out = cover;
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < out.communities.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < out.communities.size() && !merged; ++j) {
                NodeSet u = union_of(out.communities[i], out.communities[j]);
                double du = density(g, u);
                double dmin =
                    std::min(density(g, out.communities[i]), density(g, out.communities[j]));
                if (u.size() >= params.min_size && du >= params.min_density && du >= dmin) {
                    out.communities[i] = std::move(u);
                    out.communities.erase(out.communities.begin() +
                                          static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
        }
    }
    return out;
}

}  // namespace corepeel
