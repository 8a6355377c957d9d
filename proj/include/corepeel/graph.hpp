#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace corepeel {

using NodeId = std::uint32_t;
using Label = std::uint64_t;

// Sorted set of internal node ids.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::vector<NodeId> members);
    NodeSet(std::initializer_list<NodeId> members);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(NodeId v) const;

    const std::vector<NodeId>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const NodeSet&) const = default;

private:
    std::vector<NodeId> members_;  // sorted, unique
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Immutable simple undirected graph in CSR form with sorted adjacency
// and a dense-internal-id <-> original-label mapping.
class Graph {
public:
    Graph() = default;

    // Builds from internal-id pairs; drops self-loops, merges duplicates.
    static Graph from_edges(std::size_t node_count,
                            std::vector<std::pair<NodeId, NodeId>> edges);

    // Builds from externally labeled pairs; labels are remapped to dense
    // internal ids in first-appearance order.
    static Graph from_labeled_edges(const std::vector<std::pair<Label, Label>>& edges);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }   // undirected
    std::size_t arc_count() const { return 2 * edge_count_; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(NodeId u, NodeId v) const;

    Label label(NodeId v) const { return labels_[v]; }
    std::optional<NodeId> internal_id(Label label) const;

    // Union with the given pairs (internal ids); rejects self-loops.
    Graph add_edges(std::span<const std::pair<NodeId, NodeId>> pairs) const;

    // Induced subgraph on the complement of `removed`; original labels survive.
    Graph remove_nodes(const NodeSet& removed) const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adj_;
    std::vector<Label> labels_;
    std::unordered_map<Label, NodeId> label_to_id_;
    std::size_t edge_count_ = 0;
};

// SNAP edge-list format: '#' comment lines, two integer labels per data line.
Graph parse_edge_list(std::istream& in);

std::size_t induced_edge_count(const Graph& g, const NodeSet& q);

// 2|E_q| / (|q| (|q|-1)); throws std::invalid_argument for |q| < 2.
double density(const Graph& g, const NodeSet& q);

// 2|E_q| / |q|; throws std::invalid_argument for empty q.
double average_degree(const Graph& g, const NodeSet& q);

// Every member adjacent to >= gamma (|q|-1) members.
bool is_quasi_clique(const Graph& g, const NodeSet& q, double gamma);

NodeSet all_nodes(const Graph& g);

// Minimum eccentricity within the induced subgraph; nullopt when the
// subgraph is disconnected.
std::optional<std::size_t> induced_radius(const Graph& g, const NodeSet& q);

}  // namespace corepeel
