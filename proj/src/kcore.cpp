#include "corepeel/kcore.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>

namespace corepeel {

namespace {

// Lazy-bucket peeling: nodes are appended to the bucket of their current
// degree on every decrement and stale entries are skipped on pop. Compared
// to the classic swap-based bucket layout this touches one random cache
// line per edge instead of three. DegT shrinks that line's array when the
// maximum degree allows. Bucket indices are clamped: no k-core can exceed
// sqrt(2|E|), so higher buckets only ever hold stale entries.
template <class DegT>
std::vector<std::uint32_t> peel_cores(const Graph& g, std::uint32_t max_deg) {
    const std::size_t n = g.node_count();
    const auto cap = std::min<std::uint32_t>(
        max_deg, static_cast<std::uint32_t>(std::sqrt(2.0 * static_cast<double>(g.edge_count()))) + 1);

    std::vector<DegT> deg(n);
    for (NodeId v = 0; v < n; ++v) deg[v] = static_cast<DegT>(g.degree(v));

    std::vector<std::uint32_t> cnt(cap + 1, 0);
    for (NodeId v = 0; v < n; ++v) ++cnt[std::min<std::uint32_t>(deg[v], cap)];
    std::vector<std::vector<NodeId>> bucket(cap + 1);
    for (std::uint32_t d = 0; d <= cap; ++d) bucket[d].reserve(cnt[d] + 16);
    for (NodeId v = 0; v < n; ++v) bucket[std::min<std::uint32_t>(deg[v], cap)].push_back(v);

    // Entries pushed by cascades arrive in essentially random id order;
    // visiting them as-is makes every adjacency fetch a random read into
    // the CSR. Large pending batches are therefore regrouped into id
    // blocks first, which keeps each batch's CSR traffic inside a small
    // window. Pushes made while draining a batch form the next one.
    constexpr std::size_t kBlockMin = 4096;
    constexpr std::uint32_t kBlocks = 64;
    std::uint32_t shift = 0;
    while ((n >> shift) > kBlocks) ++shift;
    std::vector<NodeId> scratch;

    for (std::uint32_t k = 0; k <= cap; ++k) {
        auto& b = bucket[k];
        std::size_t begin = 0;
        while (begin < b.size()) {
            const std::size_t end = b.size();
            if (end - begin >= kBlockMin) {
                scratch.assign(b.begin() + static_cast<std::ptrdiff_t>(begin),
                               b.begin() + static_cast<std::ptrdiff_t>(end));
                std::uint32_t cnt_blk[kBlocks + 1] = {0};
                for (NodeId v : scratch) ++cnt_blk[(v >> shift) + 1];
                for (std::uint32_t blk = 0; blk < kBlocks; ++blk)
                    cnt_blk[blk + 1] += cnt_blk[blk];
                for (NodeId v : scratch)
                    b[begin + cnt_blk[v >> shift]++] = v;
            }
            for (std::size_t i = begin; i < end; ++i) {
                NodeId v = b[i];
                if (deg[v] != k) continue;  // stale entry or already popped
                for (NodeId u : g.neighbors(v))
                    if (deg[u] > k) {
                        const auto nd = static_cast<std::uint32_t>(--deg[u]);
                        bucket[std::min(nd, cap)].push_back(u);
                    }
            }
            begin = end;
        }
    }

    // a popped node's degree is frozen at its core number
    std::vector<std::uint32_t> core(n);
    for (NodeId v = 0; v < n; ++v) core[v] = deg[v];
    return core;
}

template <class CoreT>
std::vector<std::uint32_t> count_at_least(const Graph& g,
                                          const std::vector<std::uint32_t>& core) {
    const std::size_t n = g.node_count();
    std::vector<CoreT> c(n);
    for (NodeId v = 0; v < n; ++v) c[v] = static_cast<CoreT>(core[v]);
    std::vector<std::uint32_t> cc(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        const CoreT cv = c[v];
        std::uint32_t count = 0;
        for (NodeId u : g.neighbors(v))
            if (c[u] >= cv) ++count;
        cc[v] = count;
        assert(cc[v] >= core[v]);
    }
    return cc;
}

}  // namespace

std::vector<std::uint32_t> core_decomposition(const Graph& g) {
    std::uint32_t max_deg = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        max_deg = std::max(max_deg, static_cast<std::uint32_t>(g.degree(v)));
    if (max_deg < std::numeric_limits<std::uint8_t>::max())
        return peel_cores<std::uint8_t>(g, max_deg);
    return max_deg < std::numeric_limits<std::uint16_t>::max()
               ? peel_cores<std::uint16_t>(g, max_deg)
               : peel_cores<std::uint32_t>(g, max_deg);
}

std::vector<std::uint32_t> core_counts(const Graph& g,
                                       const std::vector<std::uint32_t>& core) {
    std::uint32_t max_core = 0;
    for (std::uint32_t c : core) max_core = std::max(max_core, c);
    return max_core < std::numeric_limits<std::uint16_t>::max()
               ? count_at_least<std::uint16_t>(g, core)
               : count_at_least<std::uint32_t>(g, core);
}

std::vector<NodeId> seed_order(const std::vector<std::uint32_t>& core,
                               const std::vector<std::uint32_t>& core_count) {
    const std::size_t n = core.size();
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0u);
    if (n == 0) return order;

    // Two stable counting sorts (secondary key first) keep this linear;
    // starting from ascending ids makes the final tie-break id order.
    auto stable_by_desc = [&](const std::vector<std::uint32_t>& key) {
        std::uint32_t max_key = *std::max_element(key.begin(), key.end());
        std::vector<std::size_t> offset(max_key + 1, 0);
        for (NodeId v : order) ++offset[key[v]];
        std::size_t start = 0;
        for (std::uint32_t k = max_key;; --k) {
            std::size_t count = offset[k];
            offset[k] = start;
            start += count;
            if (k == 0) break;
        }
        std::vector<NodeId> next(n);
        for (NodeId v : order) next[offset[key[v]]++] = v;
        order = std::move(next);
    };
    stable_by_desc(core_count);
    stable_by_desc(core);
    return order;
}

CoreInfo analyze_cores(const Graph& g) {
    CoreInfo info;
    info.core = core_decomposition(g);
    info.core_count = core_counts(g, info.core);
    info.seed_order = seed_order(info.core, info.core_count);
    return info;
}

}  // namespace corepeel
