#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "piecewise.hpp"
#include "time_interval.hpp"

namespace stcube {

/// A graph whose attributes are piecewise functions of real time. Nodes and
/// edges exist as ids throughout; their appearance attributes say when they
/// are actually part of the graph.
class ContinuousDynamicGraph {
public:
    struct Node {
        std::string name;
        PiecewiseAttribute<Vec2> position;       // default (0,0)
        PiecewiseAttribute<std::string> label;
        PiecewiseAttribute<bool> appearance;     // default false
    };

    struct Edge {
        int u = -1;
        int v = -1;
        PiecewiseAttribute<bool> appearance;     // default false
    };

    TimeInterval time_domain = TimeInterval::all();

    /// Add (or find) a node by name; returns its id.
    int add_node(const std::string& name) {
        auto it = node_ids_.find(name);
        if (it != node_ids_.end()) return it->second;
        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back(Node{name, {}, {}, {}});
        node_ids_.emplace(name, id);
        return id;
    }

    /// Id for a name, or -1 when absent.
    int node_id(const std::string& name) const {
        auto it = node_ids_.find(name);
        return it == node_ids_.end() ? -1 : it->second;
    }

    /// Add (or find) an undirected edge; returns its index.
    int add_edge(int u, int v) {
        if (u == v || u < 0 || v < 0 ||
            u >= static_cast<int>(nodes_.size()) || v >= static_cast<int>(nodes_.size()))
            throw std::out_of_range("add_edge: bad endpoint id");
        if (u > v) std::swap(u, v);
        auto key = std::make_pair(u, v);
        auto it = edge_ids_.find(key);
        if (it != edge_ids_.end()) return it->second;
        const int id = static_cast<int>(edges_.size());
        edges_.push_back(Edge{u, v, {}});
        edge_ids_.emplace(key, id);
        return id;
    }

    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = edge_ids_.find(std::make_pair(u, v));
        return it == edge_ids_.end() ? -1 : it->second;
    }

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    Node& node(int id) { return nodes_.at(static_cast<std::size_t>(id)); }
    const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    Edge& edge(int id) { return edges_.at(static_cast<std::size_t>(id)); }
    const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    struct PairHash {
        std::size_t operator()(const std::pair<int, int>& p) const {
            return std::hash<long long>()((static_cast<long long>(p.first) << 32) ^
                                          static_cast<unsigned>(p.second));
        }
    };

    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, int> node_ids_;
    std::unordered_map<std::pair<int, int>, int, PairHash> edge_ids_;
};

/// Maximal intervals where a boolean attribute is true, clipped to the domain.
inline std::vector<TimeInterval> true_intervals(const PiecewiseAttribute<bool>& attr,
                                                const TimeInterval& domain) {
    IntervalSet set;
    if (attr.default_value()) {
        set.add(domain);
        for (const auto& p : attr.pieces()) set.subtract(p.span);
    }
    for (const auto& p : attr.pieces())
        if (p.fn.at(p.span, p.span.start))
            if (auto clipped = intersect(p.span, domain))
                set.add(*clipped);
    return set.items();
}

/// Maximal presence intervals of a node, ordered and disjoint.
inline std::vector<TimeInterval> appearance_intervals(const ContinuousDynamicGraph& g, int node) {
    return true_intervals(g.node(node).appearance, g.time_domain);
}

/// Maximal presence intervals of an edge, ordered and disjoint.
inline std::vector<TimeInterval> edge_appearance_intervals(const ContinuousDynamicGraph& g,
                                                           int edge) {
    return true_intervals(g.edge(edge).appearance, g.time_domain);
}

/// One uncovered span of an edge's presence: the edge claims to be present
/// while at least one endpoint is absent.
struct EdgeCoverageViolation {
    int edge = -1;
    TimeInterval span;
};

struct ValidationReport {
    std::vector<EdgeCoverageViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Check that every edge-presence interval is covered by the presence of both
/// endpoints.
inline ValidationReport validate(const ContinuousDynamicGraph& g) {
    ValidationReport report;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        IntervalSet covered;
        for (const TimeInterval& iv : appearance_intervals(g, edge.u)) covered.add(iv);
        IntervalSet other;
        for (const TimeInterval& iv : appearance_intervals(g, edge.v)) other.add(iv);
        covered = covered.intersected(other);

        for (const TimeInterval& span : edge_appearance_intervals(g, e)) {
            IntervalSet missing(span);
            for (const TimeInterval& c : covered.items()) missing.subtract(c);
            for (const TimeInterval& m : missing.items())
                report.violations.push_back({e, m});
        }
    }
    return report;
}

}  // namespace stcube
