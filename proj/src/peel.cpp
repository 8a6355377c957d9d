#include "corepeel/peel.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace corepeel {

PeelState::PeelState(const Graph& g, const NodeSet& candidate)
    : nodes_(candidate.members()) {
    const std::size_t n = nodes_.size();
    adj_.resize(n);
    deg_.assign(n, 0);
    dead_.assign(n, false);
    alive_count_ = n;

    for (std::size_t li = 0; li < n; ++li) {
        auto nb = g.neighbors(nodes_[li]);
        const auto& m = nodes_;
        std::size_t i = 0, j = 0;
        while (i < nb.size() && j < m.size()) {
            if (nb[i] < m[j]) ++i;
            else if (nb[i] > m[j]) ++j;
            else {
                adj_[li].push_back(static_cast<std::uint32_t>(j));
                ++i;
                ++j;
            }
        }
        deg_[li] = static_cast<std::uint32_t>(adj_[li].size());
        edge_count_ += deg_[li];
    }
    edge_count_ /= 2;

    std::size_t max_deg = 0;
    for (auto d : deg_) max_deg = std::max<std::size_t>(max_deg, d);
    buckets_.resize(max_deg + 1);
    for (std::size_t li = 0; li < n; ++li) buckets_[deg_[li]].push_back(static_cast<std::uint32_t>(li));
}

std::size_t PeelState::local(NodeId global_id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), global_id);
    return static_cast<std::size_t>(it - nodes_.begin());
}

double PeelState::density() const {
    if (alive_count_ < 2) throw std::invalid_argument("density: fewer than 2 nodes alive");
    const double n = static_cast<double>(alive_count_);
    return 2.0 * static_cast<double>(edge_count_) / (n * (n - 1.0));
}

std::uint64_t PeelState::neighbor_degree_sum(std::size_t li) const {
    std::uint64_t sum = 0;
    for (std::uint32_t u : adj_[li])
        if (!dead_[u]) sum += deg_[u];
    return sum;
}

NodeId PeelState::select_min_degree() {
    if (alive_count_ == 0) throw std::logic_error("select_min_degree: empty subgraph");
    while (min_bucket_ < buckets_.size()) {
        auto& b = buckets_[min_bucket_];
        std::erase_if(b, [&](std::uint32_t li) { return dead_[li] || deg_[li] != min_bucket_; });
        if (!b.empty()) break;
        ++min_bucket_;
    }
    const auto& b = buckets_[min_bucket_];
    std::uint32_t best = b.front();
    std::uint64_t best_sum = neighbor_degree_sum(best);
    for (std::size_t i = 1; i < b.size(); ++i) {
        std::uint32_t li = b[i];
        std::uint64_t s = neighbor_degree_sum(li);
        if (s < best_sum || (s == best_sum && nodes_[li] < nodes_[best])) {
            best = li;
            best_sum = s;
        }
    }
    return nodes_[best];
}

void PeelState::remove(NodeId global_id) {
    std::size_t li = local(global_id);
    if (li >= nodes_.size() || nodes_[li] != global_id || dead_[li])
        throw std::invalid_argument("remove: node not alive in state");
    dead_[li] = true;
    --alive_count_;
    for (std::uint32_t u : adj_[li]) {
        if (dead_[u]) continue;
        --deg_[u];
        --edge_count_;
        buckets_[deg_[u]].push_back(u);
        if (deg_[u] < min_bucket_) min_bucket_ = deg_[u];
    }
}

NodeSet PeelState::alive() const {
    std::vector<NodeId> out;
    out.reserve(alive_count_);
    for (std::size_t li = 0; li < nodes_.size(); ++li)
        if (!dead_[li]) out.push_back(nodes_[li]);
    return NodeSet(std::move(out));
}

PeelOutcome peel(const Graph& g, const NodeSet& candidate, std::size_t q, double delta) {
    if (q < 2) throw std::invalid_argument("peel: q must be >= 2");
    if (delta <= 0.0 || delta > 1.0) throw std::invalid_argument("peel: delta must be in (0,1]");

    PeelOutcome out;
    if (candidate.size() < q) return out;

    PeelState state(g, candidate);
    while (true) {
        if (state.density() >= delta) {
            out.success = true;
            out.community = state.alive();
            return out;
        }
        if (state.size() <= q) return out;  // next removal would violate size
        state.remove(state.select_min_degree());
        ++out.removals;
    }
}

NodeSet peel_max_avg_degree(const Graph& g, const NodeSet& candidate) {
    if (candidate.empty()) throw std::invalid_argument("peel_max_avg_degree: empty candidate");

    PeelState state(g, candidate);
    double best_avg = -1.0;
    std::size_t best_step = 0;
    std::vector<NodeId> removal_order;

    std::size_t step = 0;
    while (state.size() > 0) {
        double avg = 2.0 * static_cast<double>(state.induced_edges()) /
                     static_cast<double>(state.size());
        if (avg > best_avg) {
            best_avg = avg;
            best_step = step;
        }
        NodeId v = state.select_min_degree();
        removal_order.push_back(v);
        state.remove(v);
        ++step;
    }

    std::vector<NodeId> members(candidate.members());
    for (std::size_t i = 0; i < best_step; ++i)
        members.erase(std::find(members.begin(), members.end(), removal_order[i]));
    return NodeSet(std::move(members));
}

}  // namespace corepeel
