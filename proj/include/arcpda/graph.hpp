#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arcpda {

using Edge = std::pair<int, int>;  // stored with first < second

// Simple undirected graph; edges normalized, sorted, unique.
class UndirectedGraph {
public:
    static UndirectedGraph from_edges(int vertex_count, std::vector<Edge> edges) {
        UndirectedGraph g;
        g.n_ = vertex_count;
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("UndirectedGraph: self loop");
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= vertex_count)
                throw std::invalid_argument("UndirectedGraph: endpoint out of range");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        g.edges_ = std::move(edges);
        g.adj_.assign(vertex_count, {});
        for (const auto& [u, v] : g.edges_) {
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        return g;
    }

    int vertex_count() const { return n_; }
    std::span<const Edge> edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct VertexColoring {
    int color_count = 0;
    std::vector<int> color_of;
};

// First-fit in vertex index order; never needs more than max degree + 1 colors.
inline VertexColoring greedy_vertex_color(const UndirectedGraph& g) {
    VertexColoring out;
    out.color_of.assign(g.vertex_count(), -1);
    std::vector<char> taken;
    for (int v = 0; v < g.vertex_count(); ++v) {
        taken.assign(static_cast<std::size_t>(out.color_count) + 1, 0);
        for (int u : g.neighbors(v))
            if (u < v) taken[out.color_of[u]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        out.color_of[v] = c;
        out.color_count = std::max(out.color_count, c + 1);
    }
    return out;
}

// Strong edge coloring check: same-colored edges must neither share an
// endpoint nor be joined by an edge.
struct StrongEdgeReport {
    enum class Reason { SharedEndpoint, AdjacentEdges };
    struct Violation {
        int edge1;
        int edge2;  // indices into the graph's edge list
        Reason reason;
    };
    bool pass = true;
    std::vector<Violation> violations;
};

inline StrongEdgeReport verify_strong_edge(const UndirectedGraph& g,
                                           const std::vector<int>& edge_color,
                                           int color_count) {
    if (edge_color.size() != g.edges().size())
        throw std::invalid_argument("verify_strong_edge: coloring not total on edges");
    std::vector<std::vector<int>> by_color(color_count);
    for (std::size_t i = 0; i < edge_color.size(); ++i) {
        if (edge_color[i] < 0 || edge_color[i] >= color_count)
            throw std::invalid_argument("verify_strong_edge: color out of range");
        by_color[edge_color[i]].push_back(static_cast<int>(i));
    }
    StrongEdgeReport rep;
    const auto edges = g.edges();
    for (const auto& members : by_color) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const auto& [u1, v1] = edges[members[a]];
                const auto& [u2, v2] = edges[members[b]];
                if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) {
                    rep.pass = false;
                    rep.violations.push_back({members[a], members[b], StrongEdgeReport::Reason::SharedEndpoint});
                } else if (g.has_edge(u1, u2) || g.has_edge(u1, v2) || g.has_edge(v1, u2) ||
                           g.has_edge(v1, v2)) {
                    rep.pass = false;
                    rep.violations.push_back({members[a], members[b], StrongEdgeReport::Reason::AdjacentEdges});
                }
            }
        }
    }
    return rep;
}

}  // namespace arcpda
