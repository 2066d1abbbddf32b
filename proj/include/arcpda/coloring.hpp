#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "arcpda/digraph.hpp"
#include "arcpda/graph.hpp"
#include "arcpda/hamming.hpp"
#include "arcpda/radix.hpp"

namespace arcpda {

// Colors are assigned per arc, parallel to the digraph's canonical arc order.
// Invariants: every arc has exactly one color, every color id is used.
struct ArcColoring {
    int color_count = 0;
    std::vector<int> color_of_arc;
};

inline void validate_coloring_shape(const Digraph& d, const ArcColoring& c) {
    if (static_cast<std::int64_t>(c.color_of_arc.size()) != d.arc_count())
        throw std::invalid_argument("ArcColoring: does not color exactly the arcs of the digraph");
    std::vector<char> used(c.color_count, 0);
    for (int s : c.color_of_arc) {
        if (s < 0 || s >= c.color_count)
            throw std::invalid_argument("ArcColoring: color id out of range");
        used[s] = 1;
    }
    for (int s = 0; s < c.color_count; ++s)
        if (!used[s]) throw std::invalid_argument("ArcColoring: color " + std::to_string(s) + " unused");
}

inline std::vector<std::vector<int>> arcs_by_color(const Digraph& d, const ArcColoring& c) {
    std::vector<std::vector<int>> classes(c.color_count);
    for (std::int64_t i = 0; i < d.arc_count(); ++i)
        classes[c.color_of_arc[i]].push_back(static_cast<int>(i));
    return classes;
}

// Two same-colored arcs (x1,y1), (x2,y2) are compatible iff the tails differ,
// the heads differ, and neither cross pair (x1,y2), (x2,y1) is an arc. In the
// array view this is exactly what keeps equal integers in distinct rows and
// columns with stars at the two cross cells.
struct InjectivityReport {
    enum class Reason { SameRow, SameColumn, CrossArcExists };
    struct Violation {
        int arc1;
        int arc2;  // indices into the digraph's arc list
        Reason reason;
    };
    bool pass = true;
    std::vector<Violation> violations;
};

inline bool arcs_conflict(const Digraph& d, const Arc& a, const Arc& b) {
    return a.first == b.first || a.second == b.second || d.has_arc(a.first, b.second) ||
           d.has_arc(b.first, a.second);
}

inline InjectivityReport verify_injective(const Digraph& d, const ArcColoring& c) {
    validate_coloring_shape(d, c);
    InjectivityReport rep;
    const auto arcs = d.arcs();
    for (const auto& members : arcs_by_color(d, c)) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            const Arc a = arcs[members[i]];
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const Arc b = arcs[members[j]];
                if (a.first == b.first)
                    rep.violations.push_back({members[i], members[j], InjectivityReport::Reason::SameRow});
                else if (a.second == b.second)
                    rep.violations.push_back({members[i], members[j], InjectivityReport::Reason::SameColumn});
                else if (d.has_arc(a.first, b.second) || d.has_arc(b.first, a.second))
                    rep.violations.push_back(
                        {members[i], members[j], InjectivityReport::Reason::CrossArcExists});
            }
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

// Identity of one partition class: the difference vector, its support, and
// the head digits on that support.
struct ClassKey {
    Vertex e;
    std::vector<int> positions;  // support of e, ascending
    std::vector<int> t;          // head digits at those positions
};

struct PartitionColoring {
    ArcColoring coloring;
    std::vector<ClassKey> keys;  // keys[color], in canonical (e, t) order
};

namespace detail {

// Encodes (difference vector, head restriction) as integers whose numeric
// order matches block-aligned lexicographic order of the vectors.
struct ArcClassCoder {
    const RadixSpec& spec;
    const Digraph& d;

    std::pair<std::int64_t, std::int64_t> key_of(const Arc& arc,
                                                 const std::vector<Vertex>& coords) const {
        const Vertex& x = coords[arc.first];
        const Vertex& y = coords[arc.second];
        std::int64_t e_idx = 0;
        std::int64_t t_idx = 0;
        for (int p = 0; p < spec.total_length(); ++p) {
            const int r = spec.radix_at(p);
            const int e = ((x[p] - y[p]) % r + r) % r;
            e_idx += e * spec.weight_at(p);
            if (e != 0) t_idx = t_idx * r + y[p];
        }
        return {e_idx, t_idx};
    }
};

inline std::vector<Vertex> all_coords(const RadixSpec& spec) {
    std::vector<Vertex> coords(spec.vertex_count());
    for (std::int64_t i = 0; i < spec.vertex_count(); ++i) coords[i] = index_to_vertex(spec, i);
    return coords;
}

}  // namespace detail

// One color per nonempty class of arcs sharing a difference vector and head
// restriction; numbering follows the canonical class-key order.
inline PartitionColoring partition_color(const Digraph& d, const HammingFamilyParams& params) {
    validate(params);
    const RadixSpec& spec = params.spec;
    if (spec.vertex_count() != d.vertex_count())
        throw std::invalid_argument("partition_color: digraph does not match the radix layout");

    const auto coords = detail::all_coords(spec);
    const detail::ArcClassCoder coder{spec, d};

    struct Entry {
        std::int64_t e_idx;
        std::int64_t t_idx;
        std::int64_t arc;
    };
    std::vector<Entry> entries;
    entries.reserve(d.arc_count());
    for (std::int64_t i = 0; i < d.arc_count(); ++i) {
        const auto [e_idx, t_idx] = coder.key_of(d.arcs()[i], coords);
        entries.push_back({e_idx, t_idx, i});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.e_idx, a.t_idx) < std::tie(b.e_idx, b.t_idx);
    });

    PartitionColoring out;
    out.coloring.color_of_arc.assign(d.arc_count(), -1);
    int color = -1;
    std::int64_t prev_e = -1, prev_t = -1;
    for (const Entry& en : entries) {
        if (en.e_idx != prev_e || en.t_idx != prev_t) {
            ++color;
            prev_e = en.e_idx;
            prev_t = en.t_idx;
            ClassKey key;
            key.e = index_to_vertex(spec, en.e_idx);
            key.positions = support(key.e);
            const Vertex& y = coords[d.arcs()[en.arc].second];
            for (int p : key.positions) key.t.push_back(y[p]);
            out.keys.push_back(std::move(key));
        }
        out.coloring.color_of_arc[en.arc] = color;
    }
    out.coloring.color_count = color + 1;
    return out;
}

// One merged color class: arcs whose head restrictions fall in one group of
// pairwise-distant binary vectors over a fixed difference vector.
struct MergeClass {
    Vertex e;
    std::vector<std::vector<int>> member_ts;
};

struct MergedColoring {
    ArcColoring coloring;
    std::vector<MergeClass> classes;  // classes[color]
};

// Binary single-block merge: groups of head restrictions at pairwise distance
// >= n0-w+1 share a color. For n0 = 2w-1 the groups are complement pairs; for
// n0 < 2w-1 they come from a greedy vertex coloring of the graph on {0,1}^w
// whose edges join words at distance <= n0-w.
inline MergedColoring merged_color_binary(const Digraph& d, int n0, int w) {
    if (w < 2 || n0 <= w || n0 > 2 * w - 1)
        throw std::invalid_argument("merged_color_binary: requires w < n0 <= 2w-1 (binary, one block)");
    const RadixSpec spec = RadixSpec::make({{2, n0}});
    if (spec.vertex_count() != d.vertex_count())
        throw std::invalid_argument("merged_color_binary: digraph does not match 2^n0 vertices");

    const int tcount = 1 << w;
    std::vector<int> group_of(tcount);
    std::vector<std::vector<int>> group_members;
    if (n0 == 2 * w - 1) {
        // complement pairing; group ids follow the smaller member
        const int half = tcount / 2;
        group_members.assign(half, {});
        for (int t = 0; t < tcount; ++t) {
            const int g = std::min(t, (tcount - 1) ^ t);
            group_of[t] = g;
            group_members[g].push_back(t);
        }
    } else {
        std::vector<Edge> edges;
        for (int a = 0; a < tcount; ++a)
            for (int b = a + 1; b < tcount; ++b)
                if (std::popcount(static_cast<unsigned>(a ^ b)) <= n0 - w) edges.push_back({a, b});
        const VertexColoring vc = greedy_vertex_color(UndirectedGraph::from_edges(tcount, edges));
        group_of = vc.color_of;
        group_members.assign(vc.color_count, {});
        for (int t = 0; t < tcount; ++t) group_members[vc.color_of[t]].push_back(t);
    }

    const auto coords = detail::all_coords(spec);
    struct Entry {
        std::int64_t e_idx;
        int group;
        std::int64_t arc;
    };
    std::vector<Entry> entries;
    entries.reserve(d.arc_count());
    for (std::int64_t i = 0; i < d.arc_count(); ++i) {
        const Arc arc = d.arcs()[i];
        const Vertex& x = coords[arc.first];
        const Vertex& y = coords[arc.second];
        std::int64_t e_idx = 0;
        int t_bits = 0;
        for (int p = 0; p < n0; ++p) {
            const int e = x[p] ^ y[p];
            e_idx += static_cast<std::int64_t>(e) * spec.weight_at(p);
            if (e != 0) t_bits = (t_bits << 1) | y[p];
        }
        entries.push_back({e_idx, group_of[t_bits], i});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.e_idx, a.group) < std::tie(b.e_idx, b.group);
    });

    MergedColoring out;
    out.coloring.color_of_arc.assign(d.arc_count(), -1);
    int color = -1;
    std::int64_t prev_e = -1;
    int prev_g = -1;
    for (const Entry& en : entries) {
        if (en.e_idx != prev_e || en.group != prev_g) {
            ++color;
            prev_e = en.e_idx;
            prev_g = en.group;
            MergeClass mc;
            mc.e = index_to_vertex(spec, en.e_idx);
            for (int t : group_members[en.group]) {
                std::vector<int> bits(w);
                for (int b = 0; b < w; ++b) bits[b] = (t >> (w - 1 - b)) & 1;
                mc.member_ts.push_back(std::move(bits));
            }
            out.classes.push_back(std::move(mc));
        }
        out.coloring.color_of_arc[en.arc] = color;
    }
    out.coloring.color_count = color + 1;
    return out;
}

// First-fit over arcs in canonical order; a fallback for digraphs with no
// closed-form coloring.
inline ArcColoring greedy_injective_color(const Digraph& d) {
    ArcColoring c;
    c.color_of_arc.assign(d.arc_count(), -1);
    std::vector<std::vector<int>> members;
    const auto arcs = d.arcs();
    for (std::int64_t i = 0; i < d.arc_count(); ++i) {
        int chosen = -1;
        for (std::size_t s = 0; s < members.size() && chosen < 0; ++s) {
            bool ok = true;
            for (int j : members[s])
                if (arcs_conflict(d, arcs[i], arcs[j])) {
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
        c.color_of_arc[i] = chosen;
    }
    c.color_count = static_cast<int>(members.size());
    return c;
}

struct ExactColorResult {
    bool exceeds_max = false;
    int chromatic_index = 0;  // valid when !exceeds_max
    ArcColoring coloring;     // a witness coloring when !exceeds_max
};

// Exact minimum over the arc-conflict graph by branch and bound. Guarded to
// small instances; the conflict relation is pairwise, so this is ordinary
// graph coloring of the conflict graph.
inline ExactColorResult exact_min_injective_color(const Digraph& d, int max_colors) {
    const std::int64_t n64 = d.arc_count();
    if (n64 > 40) throw std::invalid_argument("exact_min_injective_color: instance too large (> 40 arcs)");
    const int n = static_cast<int>(n64);
    const auto arcs = d.arcs();

    std::vector<std::uint64_t> conflict(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (arcs_conflict(d, arcs[i], arcs[j])) {
                conflict[i] |= 1ull << j;
                conflict[j] |= 1ull << i;
            }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(conflict[a]) > std::popcount(conflict[b]);
    });

    const ArcColoring greedy = greedy_injective_color(d);
    int best = greedy.color_count;
    std::vector<int> best_assign = greedy.color_of_arc;

    std::vector<int> assign(n, -1);
    auto dfs = [&](auto&& self, int idx, int used) -> void {
        if (used >= best) return;  // cannot improve
        if (idx == n) {
            best = used;
            best_assign = assign;
            return;
        }
        const int v = order[idx];
        const int cap = std::min(used + 1, best - 1);
        for (int c = 0; c < cap; ++c) {
            bool ok = true;
            std::uint64_t nb = conflict[v];
            while (nb) {
                const int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (assign[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assign[v] = c;
            self(self, idx + 1, std::max(used, c + 1));
            assign[v] = -1;
        }
    };
    dfs(dfs, 0, 0);

    ExactColorResult res;
    if (best > max_colors) {
        res.exceeds_max = true;
        return res;
    }
    res.chromatic_index = best;
    res.coloring.color_count = best;
    res.coloring.color_of_arc = std::move(best_assign);
    return res;
}

}  // namespace arcpda
