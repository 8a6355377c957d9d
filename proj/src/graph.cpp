#include "corepeel/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace corepeel {

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet::NodeSet(std::initializer_list<NodeId> members)
    : NodeSet(std::vector<NodeId>(members)) {}

bool NodeSet::contains(NodeId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::from_edges(std::size_t node_count,
                        std::vector<std::pair<NodeId, NodeId>> edges) {
    Graph g;
    g.labels_.resize(node_count);
    for (std::size_t v = 0; v < node_count; ++v) g.labels_[v] = v;
    g.label_to_id_.reserve(node_count);
    for (std::size_t v = 0; v < node_count; ++v)
        g.label_to_id_.emplace(static_cast<Label>(v), static_cast<NodeId>(v));

    for (auto& [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<std::size_t> deg(node_count, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(node_count + 1, 0);
    for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(g.offsets_[node_count]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (std::size_t v = 0; v < node_count; ++v)
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    g.edge_count_ = edges.size();
    return g;
}

Graph Graph::from_labeled_edges(const std::vector<std::pair<Label, Label>>& edges) {
    std::unordered_map<Label, NodeId> ids;
    std::vector<Label> labels;
    auto intern = [&](Label l) {
        auto [it, fresh] = ids.emplace(l, static_cast<NodeId>(labels.size()));
        if (fresh) labels.push_back(l);
        return it->second;
    };
    std::vector<std::pair<NodeId, NodeId>> internal;
    internal.reserve(edges.size());
    for (const auto& [a, b] : edges) internal.emplace_back(intern(a), intern(b));

    Graph g = from_edges(labels.size(), std::move(internal));
    g.labels_ = std::move(labels);
    g.label_to_id_ = std::move(ids);
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeId> Graph::internal_id(Label label) const {
    auto it = label_to_id_.find(label);
    if (it == label_to_id_.end()) return std::nullopt;
    return it->second;
}

Graph Graph::add_edges(std::span<const std::pair<NodeId, NodeId>> pairs) const {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(edge_count_ + pairs.size());
    for (NodeId v = 0; v < node_count(); ++v)
        for (NodeId u : neighbors(v))
            if (v < u) edges.emplace_back(v, u);
    for (const auto& [u, v] : pairs) {
        if (u == v) throw std::invalid_argument("add_edges: self-loop rejected");
        if (u >= node_count() || v >= node_count())
            throw std::invalid_argument("add_edges: endpoint out of range");
        edges.emplace_back(u, v);
    }
    Graph g = from_edges(node_count(), std::move(edges));
    g.labels_ = labels_;
    g.label_to_id_ = label_to_id_;
    return g;
}

Graph Graph::remove_nodes(const NodeSet& removed) const {
    const NodeId n = static_cast<NodeId>(node_count());
    std::vector<NodeId> remap(n, 0);
    std::vector<Label> labels;
    labels.reserve(n - removed.size());
    for (NodeId v = 0; v < n; ++v) {
        if (removed.contains(v)) continue;
        remap[v] = static_cast<NodeId>(labels.size());
        labels.push_back(labels_[v]);
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId v = 0; v < n; ++v) {
        if (removed.contains(v)) continue;
        for (NodeId u : neighbors(v))
            if (v < u && !removed.contains(u)) edges.emplace_back(remap[v], remap[u]);
    }
    Graph g = from_edges(labels.size(), std::move(edges));
    g.labels_ = std::move(labels);
    g.label_to_id_.clear();
    g.label_to_id_.reserve(g.labels_.size());
    for (NodeId v = 0; v < g.labels_.size(); ++v) g.label_to_id_.emplace(g.labels_[v], v);
    return g;
}

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<Label, Label>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == '#') continue;

        Label vals[2];
        for (int k = 0; k < 2; ++k) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), vals[k]);
            if (ec != std::errc{})
                throw ParseError(lineno, "expected two integer node labels");
            i = static_cast<std::size_t>(p - line.data());
        }
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i != line.size()) throw ParseError(lineno, "trailing characters after edge");
        edges.emplace_back(vals[0], vals[1]);
    }
    return Graph::from_labeled_edges(edges);
}

std::size_t induced_edge_count(const Graph& g, const NodeSet& q) {
    std::size_t twice = 0;
    for (NodeId v : q) {
        auto nb = g.neighbors(v);
        const auto& m = q.members();
        // sorted intersection count
        std::size_t i = 0, j = 0;
        while (i < nb.size() && j < m.size()) {
            if (nb[i] < m[j]) ++i;
            else if (nb[i] > m[j]) ++j;
            else { ++twice; ++i; ++j; }
        }
    }
    return twice / 2;
}

double density(const Graph& g, const NodeSet& q) {
    if (q.size() < 2) throw std::invalid_argument("density: set must have >= 2 nodes");
    const double n = static_cast<double>(q.size());
    return 2.0 * static_cast<double>(induced_edge_count(g, q)) / (n * (n - 1.0));
}

double average_degree(const Graph& g, const NodeSet& q) {
    if (q.empty()) throw std::invalid_argument("average_degree: empty set");
    return 2.0 * static_cast<double>(induced_edge_count(g, q)) / static_cast<double>(q.size());
}

bool is_quasi_clique(const Graph& g, const NodeSet& q, double gamma) {
    if (q.size() < 2) throw std::invalid_argument("is_quasi_clique: set must have >= 2 nodes");
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("gamma outside [0,1]");
    const double need = gamma * static_cast<double>(q.size() - 1);
    for (NodeId v : q) {
        std::size_t inside = 0;
        for (NodeId u : g.neighbors(v))
            if (q.contains(u)) ++inside;
        if (static_cast<double>(inside) < need) return false;
    }
    return true;
}

NodeSet all_nodes(const Graph& g) {
    std::vector<NodeId> m(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) m[v] = v;
    return NodeSet(std::move(m));
}

std::optional<std::size_t> induced_radius(const Graph& g, const NodeSet& q) {
    if (q.empty()) return 0;
    const auto& m = q.members();
    auto idx = [&](NodeId u) {
        return static_cast<std::size_t>(std::lower_bound(m.begin(), m.end(), u) - m.begin());
    };
    std::size_t best = q.size();
    for (NodeId src : q) {
        std::vector<std::size_t> dist(q.size(), q.size());
        std::vector<NodeId> frontier{src};
        dist[idx(src)] = 0;
        std::size_t reached = 1, ecc = 0, level = 0;
        while (!frontier.empty()) {
            std::vector<NodeId> next;
            ++level;
            for (NodeId w : frontier) {
                for (NodeId u : g.neighbors(w)) {
                    if (!q.contains(u) || dist[idx(u)] <= level) continue;
                    dist[idx(u)] = level;
                    ++reached;
                    next.push_back(u);
                }
            }
            if (!next.empty()) ecc = level;
            frontier = std::move(next);
        }
        if (reached < q.size()) return std::nullopt;
        best = std::min(best, ecc);
    }
    return best;
}

}  // namespace corepeel
