#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arcpda/coloring.hpp"
#include "arcpda/digraph.hpp"
#include "arcpda/errors.hpp"
#include "arcpda/graph.hpp"

namespace arcpda {

struct PrimePower {
    std::int64_t prime;
    int exponent;
};

struct CayleyParams {
    std::int64_t n = 0;
    std::vector<PrimePower> factors;
    std::int64_t totient = 0;
};

inline std::vector<PrimePower> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: needs a positive integer");
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline CayleyParams cayley_params(std::int64_t n) {
    CayleyParams cp;
    cp.n = n;
    cp.factors = factorize(n);
    cp.totient = n;
    for (const auto& f : cp.factors) cp.totient = cp.totient / f.prime * (f.prime - 1);
    return cp;
}

// Vertex set Z_n; residues i, j joined whenever i - j is a unit mod n; each
// undirected edge contributes both arcs.
inline std::pair<Digraph, CayleyParams> build_unitary_cayley_digraph(std::int64_t n,
                                                                     bool force = false) {
    if (n < 3) throw std::invalid_argument("unitary Cayley digraph: requires n >= 3");
    if (n > kMaxBuildVertices && !force)
        throw GuardrailError("unitary Cayley digraph: vertex count exceeds the build guardrail");
    CayleyParams cp = cayley_params(n);
    std::vector<int> units;
    for (std::int64_t d = 1; d < n; ++d)
        if (std::gcd(d, n) == 1) units.push_back(static_cast<int>(d));
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * units.size());
    for (int i = 0; i < n; ++i)
        for (int d : units) arcs.push_back({i, static_cast<int>((i + d) % n)});
    return {Digraph::from_arcs(static_cast<int>(n), std::move(arcs)), std::move(cp)};
}

struct CayleyColoring {
    Digraph digraph;
    UndirectedGraph graph;            // the underlying simple graph
    std::vector<int> edge_color;      // parallel to graph.edges()
    ArcColoring coloring;             // both reverse arcs carry the edge's color
    CayleyParams params;
    bool used_fallback = false;       // candidate construction failed, greedy used
    StrongEdgeReport verification;
};

namespace detail {

inline std::vector<int> greedy_strong_edge_color(const UndirectedGraph& g, int* color_count) {
    const auto edges = g.edges();
    auto conflict = [&](const Edge& a, const Edge& b) {
        if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second)
            return true;
        return g.has_edge(a.first, b.first) || g.has_edge(a.first, b.second) ||
               g.has_edge(a.second, b.first) || g.has_edge(a.second, b.second);
    };
    std::vector<int> color(edges.size(), -1);
    std::vector<std::vector<int>> members;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int chosen = -1;
        for (std::size_t s = 0; s < members.size() && chosen < 0; ++s) {
            bool ok = true;
            for (int j : members[s])
                if (conflict(edges[i], edges[j])) {
                    ok = false;
                    break;
                }
            if (ok) chosen = static_cast<int>(s);
        }
        if (chosen < 0) {
            chosen = static_cast<int>(members.size());
            members.emplace_back();
        }
        members[chosen].push_back(static_cast<int>(i));
        color[i] = chosen;
    }
    *color_count = static_cast<int>(members.size());
    return color;
}

}  // namespace detail

// Candidate strong edge coloring of the unitary Cayley graph: decompose each
// endpoint into residues modulo the prime-power factors and color an edge by
// the tuple of unordered residue pairs. Verified per instance; a greedy
// search takes over if verification ever fails.
inline CayleyColoring cayley_strong_color(std::int64_t n, bool force = false) {
    auto [digraph, params] = build_unitary_cayley_digraph(n, force);

    std::vector<Edge> edges;
    for (const Arc& a : digraph.arcs())
        if (a.first < a.second) edges.push_back({a.first, a.second});

    CayleyColoring out{std::move(digraph),
                       UndirectedGraph::from_edges(static_cast<int>(n), std::move(edges)),
                       {},
                       {},
                       std::move(params),
                       false,
                       {}};

    std::vector<std::int64_t> moduli;
    for (const auto& f : out.params.factors) {
        std::int64_t q = 1;
        for (int e = 0; e < f.exponent; ++e) q *= f.prime;
        moduli.push_back(q);
    }

    using Key = std::vector<std::pair<int, int>>;
    std::map<Key, std::vector<int>> by_key;
    const auto edge_list = out.graph.edges();
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        Key key;
        for (std::int64_t q : moduli) {
            const int a = static_cast<int>(edge_list[i].first % q);
            const int b = static_cast<int>(edge_list[i].second % q);
            key.emplace_back(std::min(a, b), std::max(a, b));
        }
        by_key[key].push_back(static_cast<int>(i));
    }

    out.edge_color.assign(edge_list.size(), -1);
    int color = 0;
    for (const auto& [key, members] : by_key) {
        for (int i : members) out.edge_color[i] = color;
        ++color;
    }
    out.verification = verify_strong_edge(out.graph, out.edge_color, color);
    if (!out.verification.pass) {
        out.used_fallback = true;
        out.edge_color = detail::greedy_strong_edge_color(out.graph, &color);
        out.verification = verify_strong_edge(out.graph, out.edge_color, color);
        if (!out.verification.pass)
            throw VerificationError("cayley_strong_color: fallback coloring failed verification");
    }

    // expand to arcs: both directions of an edge share the edge's color
    out.coloring.color_count = color;
    out.coloring.color_of_arc.assign(out.digraph.arc_count(), -1);
    const auto arcs = out.digraph.arcs();
    std::map<Edge, int> edge_index;
    for (std::size_t i = 0; i < out.graph.edges().size(); ++i) edge_index[out.graph.edges()[i]] = static_cast<int>(i);
    for (std::int64_t i = 0; i < out.digraph.arc_count(); ++i) {
        const Edge e{std::min(arcs[i].first, arcs[i].second), std::max(arcs[i].first, arcs[i].second)};
        out.coloring.color_of_arc[i] = out.edge_color[edge_index[e]];
    }
    return out;
}

}  // namespace arcpda
