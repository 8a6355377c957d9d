#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "corepeel/pdc.hpp"
#include "support/oracles.hpp"

using namespace corepeel;
using namespace corepeel::testing;

namespace {

Graph two_k5s() {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId base : {0u, 5u})
        for (NodeId u = base; u < base + 5; ++u)
            for (NodeId v = u + 1; v < base + 5; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(10, edges);
}

PdcParams params(std::size_t q, double delta, int radius) {
    PdcParams p;
    p.min_size = q;
    p.min_density = delta;
    p.radius = radius;
    return p;
}

}  // namespace

TEST_CASE("candidate_set on an isolated K5 is the whole clique") {
    Graph k5 = complete_graph(5);
    CoreInfo info = analyze_cores(k5);
    NodeSet c = candidate_set(k5, info, 2, params(5, 1.0, 1), NodeSet{});
    CHECK(c == all_nodes(k5));
}

TEST_CASE("radius 2 reaches a non-neighbor through a common neighbor") {
    // K5 missing the (0,4) edge
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < 5; ++u)
        for (NodeId v = u + 1; v < 5; ++v)
            if (!(u == 0 && v == 4)) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(5, edges);
    CoreInfo info = analyze_cores(g);

    NodeSet r1 = candidate_set(g, info, 0, params(5, 1.0, 1), NodeSet{});
    CHECK_FALSE(r1.contains(4));
    NodeSet r2 = candidate_set(g, info, 0, params(5, 1.0, 2), NodeSet{});
    CHECK(r2 == all_nodes(g));
}

TEST_CASE("candidate_set collapses to the seed when neighbors are excluded") {
    Graph k5 = complete_graph(5);
    CoreInfo info = analyze_cores(k5);
    NodeSet c = candidate_set(k5, info, 2, params(5, 1.0, 1), NodeSet{0, 1, 3, 4});
    CHECK(c == NodeSet{2});
}

TEST_CASE("core_and_peel recovers two disjoint K5s") {
    Graph g = two_k5s();
    CoverResult cover = core_and_peel(g, params(5, 1.0, 1));
    REQUIRE(cover.communities.size() == 2);
    CHECK(cover.communities[0] == NodeSet{0, 1, 2, 3, 4});
    CHECK(cover.communities[1] == NodeSet{5, 6, 7, 8, 9});
    CHECK(cover.marked.size() == 10);
}

TEST_CASE("core_and_peel on an empty graph") {
    Graph empty;
    CoverResult cover = core_and_peel(empty, params(2, 1.0, 1));
    CHECK(cover.communities.empty());
}

TEST_CASE("core_and_peel finds planted K8s in a sparse random graph") {
    std::mt19937_64 rng(101);
    Graph host = random_graph(1000, 0.005, rng);

    // plant 10 disjoint K8s
    std::vector<NodeId> ids(1000);
    std::iota(ids.begin(), ids.end(), 0u);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<NodeSet> plants;
    std::vector<std::pair<NodeId, NodeId>> add;
    for (int k = 0; k < 10; ++k) {
        std::vector<NodeId> members(ids.begin() + k * 8, ids.begin() + (k + 1) * 8);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = i + 1; j < 8; ++j)
                if (!host.has_edge(members[i], members[j]))
                    add.emplace_back(members[i], members[j]);
        plants.emplace_back(std::move(members));
    }
    Graph g = host.add_edges(add);

    CoverResult cover = core_and_peel(g, params(8, 1.0, 1));
    int recovered = 0;
    for (const NodeSet& p : plants) {
        for (const NodeSet& c : cover.communities) {
            std::size_t overlap = 0;
            for (NodeId v : p)
                if (c.contains(v)) ++overlap;
            if (2 * overlap > p.size()) {
                ++recovered;
                break;
            }
        }
    }
    CHECK(recovered >= 9);
}

TEST_CASE("cover invariants hold on random graphs") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(120, 0.08, rng);
        PdcParams p = params(4, 0.7, t % 2 ? 2 : 1);
        CoverResult cover = core_and_peel(g, p);
        std::vector<bool> seen(g.node_count(), false);
        for (const NodeSet& c : cover.communities) {
            CHECK(c.size() >= p.min_size);
            CHECK(density(g, c) >= p.min_density);
            for (NodeId v : c) {
                CHECK_FALSE(seen[v]);
                seen[v] = true;
            }
        }
    }
}

TEST_CASE("core_and_peel is deterministic") {
    std::mt19937_64 rng(107);
    Graph g = random_graph(200, 0.05, rng);
    CoverResult a = core_and_peel(g, params(4, 0.6, 2));
    CoverResult b = core_and_peel(g, params(4, 0.6, 2));
    REQUIRE(a.communities.size() == b.communities.size());
    for (std::size_t i = 0; i < a.communities.size(); ++i)
        CHECK(a.communities[i] == b.communities[i]);
}

TEST_CASE("first clique seed covers the whole planted clique at radius 1") {
    std::mt19937_64 rng(109);
    for (int t = 0; t < 5; ++t) {
        Graph host = random_graph(300, 0.004, rng);  // max core stays tiny
        NodeId members[6] = {10, 60, 110, 160, 210, 260};
        std::vector<std::pair<NodeId, NodeId>> add;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (!host.has_edge(members[i], members[j]))
                    add.emplace_back(members[i], members[j]);
        Graph g = host.add_edges(add);
        CoreInfo info = analyze_cores(g);
        // clique members realize their core number through the clique
        bool realized = true;
        for (NodeId v : members) realized = realized && info.core[v] == 5;
        if (!realized) continue;

        NodeId first = 0;
        for (NodeId v : info.seed_order) {
            if (std::find(std::begin(members), std::end(members), v) != std::end(members)) {
                first = v;
                break;
            }
        }
        NodeSet cand = candidate_set(g, info, first, params(6, 1.0, 1), NodeSet{});
        for (NodeId v : members) CHECK(cand.contains(v));
    }
}

TEST_CASE("validate_cover") {
    Graph g = two_k5s();
    PdcParams p = params(5, 1.0, 1);
    CoverResult cover = core_and_peel(g, p);

    SUBCASE("valid cover has no violations") {
        CoverValidation v = validate_cover(g, cover, p);
        CHECK(v.violations.empty());
        CHECK(v.residual_communities == 0);
    }

    SUBCASE("overlap is reported as a disjointness violation") {
        CoverResult bad = cover;
        bad.communities[1] = NodeSet{4, 5, 6, 7, 8};  // shares node 4
        CoverValidation v = validate_cover(g, bad, p);
        bool found = false;
        for (const Violation& viol : v.violations) found = found || viol.condition == 'b';
        CHECK(found);
    }

    SUBCASE("two halves of one K10 get an internal-maximality flag") {
        Graph k10 = complete_graph(10);
        CoverResult halves;
        halves.communities = {NodeSet{0, 1, 2, 3, 4}, NodeSet{5, 6, 7, 8, 9}};
        halves.marked = all_nodes(k10);
        CoverValidation v = validate_cover(k10, halves, p);
        CHECK(v.mergeable_pairs == 1);
    }
}

TEST_CASE("merge_pass") {
    PdcParams p = params(5, 1.0, 1);

    SUBCASE("two halves of one K10 merge") {
        Graph k10 = complete_graph(10);
        CoverResult halves;
        halves.communities = {NodeSet{0, 1, 2, 3, 4}, NodeSet{5, 6, 7, 8, 9}};
        CoverResult merged = merge_pass(k10, halves, p);
        REQUIRE(merged.communities.size() == 1);
        CHECK(merged.communities[0] == all_nodes(k10));
    }

    SUBCASE("distant K5s stay apart") {
        Graph g = two_k5s();
        CoverResult cover = core_and_peel(g, p);
        CoverResult merged = merge_pass(g, cover, p);
        CHECK(merged.communities.size() == 2);
    }

    SUBCASE("empty cover passes through") {
        Graph g = two_k5s();
        CoverResult empty;
        CHECK(merge_pass(g, empty, p).communities.empty());
    }
}
