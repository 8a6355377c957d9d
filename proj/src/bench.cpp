#include "corepeel/bench.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace corepeel {

PlantSpec plan_plants(std::size_t nodes, std::size_t arcs, double delta_bar,
                      double budget_fraction) {
    if (nodes == 0) throw std::invalid_argument("plan_plants: empty graph");
    if (delta_bar <= 0.0 || delta_bar > 1.0)
        throw std::invalid_argument("plan_plants: delta_bar must be in (0,1]");

    const double ratio = static_cast<double>(arcs) / static_cast<double>(nodes);
    const auto target_degree = static_cast<std::size_t>(std::llround(ratio));
    PlantSpec spec;
    spec.target_density = delta_bar;
    spec.community_size =
        static_cast<std::size_t>(std::llround(static_cast<double>(target_degree) / delta_bar)) + 1;
    if (spec.community_size < 2)
        throw std::invalid_argument("plan_plants: graph too sparse to size a plant");
    spec.num_communities = static_cast<std::size_t>(
        budget_fraction * static_cast<double>(nodes) / static_cast<double>(spec.community_size));
    if (spec.num_communities < 1)
        throw std::invalid_argument("plan_plants: graph too small for one plant");
    return spec;
}

PlantSpec plan_plants(const Graph& g, double delta_bar, double budget_fraction) {
    return plan_plants(g.node_count(), g.arc_count(), delta_bar, budget_fraction);
}

std::pair<Graph, PlantManifest> plant(const Graph& g, const PlantSpec& spec) {
    const std::size_t s = spec.community_size;
    const std::size_t m = spec.num_communities;
    if (s < 2 || m < 1) throw std::invalid_argument("plant: invalid spec");
    if (spec.radius != 1 && spec.radius != 2)
        throw std::invalid_argument("plant: radius must be 1 or 2");
    if (m * s > g.node_count())
        throw std::invalid_argument("plant: not enough nodes to embed disjoint communities");

    std::mt19937_64 rng(spec.rng_seed);

    // m*s distinct nodes by partial Fisher-Yates
    std::vector<NodeId> ids(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) ids[v] = v;
    for (std::size_t i = 0; i < m * s; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, ids.size() - 1);
        std::swap(ids[i], ids[pick(rng)]);
    }

    const std::size_t needed = static_cast<std::size_t>(
        std::ceil(spec.target_density * static_cast<double>(s * (s - 1)) / 2.0));

    PlantManifest manifest;
    manifest.host = {g.node_count(), g.arc_count(),
                     static_cast<double>(g.arc_count()) / static_cast<double>(g.node_count())};

    std::vector<std::pair<NodeId, NodeId>> new_edges;
    std::vector<NodeSet> groups;
    for (std::size_t k = 0; k < m; ++k) {
        const NodeId center = ids[k * s];
        std::vector<NodeId> members(ids.begin() + static_cast<std::ptrdiff_t>(k * s),
                                    ids.begin() + static_cast<std::ptrdiff_t>((k + 1) * s));
        NodeSet group(std::move(members));
        const auto& gm = group.members();

        // local adjacency among the s members (s is small)
        std::vector<std::vector<char>> adj(s, std::vector<char>(s, 0));
        std::size_t have = 0;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i + 1; j < s; ++j)
                if (g.has_edge(gm[i], gm[j])) {
                    adj[i][j] = adj[j][i] = 1;
                    ++have;
                }

        std::size_t added = 0;
        auto add_local = [&](std::size_t i, std::size_t j) {
            adj[i][j] = adj[j][i] = 1;
            new_edges.emplace_back(gm[i], gm[j]);
            ++have;
            ++added;
        };

        const std::size_t c = static_cast<std::size_t>(
            std::lower_bound(gm.begin(), gm.end(), center) - gm.begin());
        if (spec.radius == 1) {
            for (std::size_t j = 0; j < s; ++j)
                if (j != c && !adj[c][j]) add_local(c, j);
        }

        std::vector<std::pair<std::size_t, std::size_t>> absent;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i + 1; j < s; ++j)
                if (!adj[i][j]) absent.emplace_back(i, j);
        std::shuffle(absent.begin(), absent.end(), rng);
        if (needed >= have + absent.size()) {
            for (const auto& [i, j] : absent) add_local(i, j);
        } else {
            // Near-regular fill: always join the lowest-degree absent pair
            // (ties broken by the shuffle) so no member ends up with an
            // outlying degree or core number inside its community.
            std::vector<std::size_t> deg(s, 0);
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = i + 1; j < s; ++j)
                    if (adj[i][j]) {
                        ++deg[i];
                        ++deg[j];
                    }
            while (have < needed) {
                std::size_t best = absent.size();
                for (std::size_t e = 0; e < absent.size(); ++e) {
                    if (best == absent.size() ||
                        deg[absent[e].first] + deg[absent[e].second] <
                            deg[absent[best].first] + deg[absent[best].second])
                        best = e;
                }
                auto [i, j] = absent[best];
                absent.erase(absent.begin() + static_cast<std::ptrdiff_t>(best));
                add_local(i, j);
                ++deg[i];
                ++deg[j];
            }
        }

        if (spec.radius == 2) {
            // BFS from the center; attach any member further than two
            // hops to a depth-1 node (or to the center when none exists).
            std::vector<int> dist(s, -1);
            std::vector<std::size_t> frontier{c};
            dist[c] = 0;
            for (int level = 1; !frontier.empty(); ++level) {
                std::vector<std::size_t> next;
                for (std::size_t w : frontier)
                    for (std::size_t u = 0; u < s; ++u)
                        if (adj[w][u] && dist[u] < 0) {
                            dist[u] = level;
                            next.push_back(u);
                        }
                frontier = std::move(next);
            }
            std::size_t anchor = s;
            for (std::size_t j = 0; j < s; ++j)
                if (dist[j] == 1) {
                    anchor = j;
                    break;
                }
            for (std::size_t j = 0; j < s; ++j) {
                if (j == c || (dist[j] >= 0 && dist[j] <= 2)) continue;
                if (anchor < s) {
                    add_local(anchor, j);
                } else {
                    add_local(c, j);
                    anchor = j;
                }
            }
        }
        manifest.edges_added += added;
        groups.push_back(std::move(group));
    }

    Graph planted = g.add_edges(new_edges);
    for (const NodeSet& group : groups) {
        assert(density(planted, group) >= spec.target_density - 1e-12);
        std::vector<Label> labels;
        labels.reserve(group.size());
        for (NodeId v : group) labels.push_back(planted.label(v));
        manifest.planted.push_back(std::move(labels));
    }
    return {std::move(planted), std::move(manifest)};
}

CleanResult two_pass_clean(const Graph& g, const PdcParams& params) {
    CleanResult out;
    CoverResult pass1 = core_and_peel(g, params);
    out.pass1_communities = pass1.communities.size();
    Graph g1 = g.remove_nodes(pass1.marked);

    CoverResult pass2 = core_and_peel(g1, params);
    out.pass2_communities = pass2.communities.size();
    out.residual = g1.remove_nodes(pass2.marked);
    return out;
}

BenchReport match_and_score(const PlantManifest& manifest,
                            const std::vector<std::vector<Label>>& detected) {
    const auto& planted = manifest.planted;
    BenchReport report;
    report.planted = planted.size();
    report.detected = detected.size();
    report.plant_size = planted.empty() ? 0 : planted.front().size();
    report.num_embedded = planted.size();
    report.edges_added = manifest.edges_added;

    std::unordered_map<Label, std::vector<std::size_t>> where;
    for (std::size_t p = 0; p < planted.size(); ++p)
        for (Label l : planted[p]) where[l].push_back(p);

    struct Overlap {
        std::size_t count, p, d;
    };
    std::vector<Overlap> overlaps;
    for (std::size_t d = 0; d < detected.size(); ++d) {
        std::unordered_map<std::size_t, std::size_t> hits;
        for (Label l : detected[d]) {
            auto it = where.find(l);
            if (it == where.end()) continue;
            for (std::size_t p : it->second) ++hits[p];
        }
        for (auto [p, count] : hits)
            if (2 * count > planted[p].size()) overlaps.push_back({count, p, d});
    }
    std::sort(overlaps.begin(), overlaps.end(), [](const Overlap& a, const Overlap& b) {
        if (a.count != b.count) return a.count > b.count;
        if (a.p != b.p) return a.p < b.p;
        return a.d < b.d;
    });

    std::vector<bool> p_used(planted.size(), false), d_used(detected.size(), false);
    for (const Overlap& o : overlaps) {
        if (p_used[o.p] || d_used[o.d]) continue;
        p_used[o.p] = true;
        d_used[o.d] = true;
        ++report.matched;
    }

    report.precision = report.detected > 0
                           ? static_cast<double>(report.matched) / static_cast<double>(report.detected)
                           : (report.planted == 0 ? 1.0 : 0.0);
    report.recall = report.planted > 0
                        ? static_cast<double>(report.matched) / static_cast<double>(report.planted)
                        : 1.0;
    report.f_measure = report.matched > 0 ? 2.0 * report.precision * report.recall /
                                                (report.precision + report.recall)
                                          : 0.0;
    return report;
}

BenchReport run_benchmark(const Graph& g, const PdcParams& params,
                          std::uint64_t rng_seed, double budget_fraction) {
    // Plant sizing comes from the original host's statistics, so counts
    // line up with the host the benchmark is named after. Cleaning and
    // detection both run with q equal to the planted size.
    PlantSpec spec = plan_plants(g, params.min_density, budget_fraction);
    spec.rng_seed = rng_seed;
    spec.radius = params.radius;

    PdcParams detect = params;
    detect.min_size = spec.community_size;
    detect.validate();

    CleanResult clean = two_pass_clean(g, detect);

    auto [planted_graph, manifest] = plant(clean.residual, spec);

    CoverResult cover = core_and_peel(planted_graph, detect);

    std::vector<std::vector<Label>> detected;
    detected.reserve(cover.communities.size());
    for (const NodeSet& c : cover.communities) {
        std::vector<Label> labels;
        labels.reserve(c.size());
        for (NodeId v : c) labels.push_back(planted_graph.label(v));
        detected.push_back(std::move(labels));
    }

    BenchReport report = match_and_score(manifest, detected);
    report.rng_seed = rng_seed;
    report.timings = cover.timings;
    report.per_arc_s = planted_graph.arc_count() > 0
                           ? cover.timings.total_s() / static_cast<double>(planted_graph.arc_count())
                           : 0.0;
    report.cleaned_pass1 = clean.pass1_communities;
    report.cleaned_pass2 = clean.pass2_communities;
    return report;
}

}  // namespace corepeel
