#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "corepeel/graph.hpp"
#include "corepeel/pdc.hpp"

namespace corepeel {

struct PlantSpec {
    std::size_t community_size = 0;   // s
    double target_density = 1.0;      // delta-bar
    std::size_t num_communities = 0;  // m
    std::uint64_t rng_seed = 0;
    int radius = 1;                   // radius of each embedded community
};

struct HostStats {
    std::size_t nodes = 0;
    std::size_t arcs = 0;  // 2 * undirected edges
    double ratio = 0.0;    // arcs / nodes
};

struct PlantManifest {
    std::vector<std::vector<Label>> planted;  // original labels
    std::size_t edges_added = 0;
    HostStats host;
};

struct BenchReport {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    std::size_t matched = 0;
    std::size_t detected = 0;
    std::size_t planted = 0;
    std::size_t plant_size = 0;
    std::size_t num_embedded = 0;
    std::size_t edges_added = 0;
    std::uint64_t rng_seed = 0;
    PhaseTimings timings;
    double per_arc_s = 0.0;
    std::size_t cleaned_pass1 = 0;
    std::size_t cleaned_pass2 = 0;
};

// Planting parameters from host statistics: target average degree
// d* = round(arcs/|V|), size s = round(d*/delta_bar) + 1, count
// m = floor(budget * |V| / s).
PlantSpec plan_plants(std::size_t nodes, std::size_t arcs, double delta_bar,
                      double budget_fraction = 0.02);
PlantSpec plan_plants(const Graph& g, double delta_bar, double budget_fraction = 0.02);

// Embeds `num_communities` node-disjoint subgraphs of size s by adding
// random absent pairs until each reaches density >= target_density.
// Each embedded subgraph has the requested radius: for radius 1 a
// designated center is wired to every other member before the random
// fill; for radius 2 the fill is patched so every member sits within
// two hops of the center.
std::pair<Graph, PlantManifest> plant(const Graph& g, const PlantSpec& spec);

struct CleanResult {
    Graph residual;
    std::size_t pass1_communities = 0;
    std::size_t pass2_communities = 0;
};

// Detect-and-remove applied twice; the residual hosts the plants.
CleanResult two_pass_clean(const Graph& g, const PdcParams& params);

// >50%-of-planted-set overlap matching, greedy by descending overlap,
// injective on both sides.
BenchReport match_and_score(const PlantManifest& manifest,
                            const std::vector<std::vector<Label>>& detected);

// Full protocol: clean twice, plan from the original host stats, plant
// into the residual, detect with q = plant size, score.
BenchReport run_benchmark(const Graph& g, const PdcParams& params,
                          std::uint64_t rng_seed, double budget_fraction = 0.02);

}  // namespace corepeel
