#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arcpda {

using Arc = std::pair<int, int>;  // (tail, head)

// Immutable digraph. Arcs are kept as one sorted list (canonical iteration
// order: tail, then head) plus a membership structure for O(1) queries:
// a flat K*K bitset while it fits, per-row binary search beyond that.
class Digraph {
public:
    static Digraph from_arcs(int vertex_count, std::vector<Arc> arcs) {
        if (vertex_count < 0) throw std::invalid_argument("Digraph: negative vertex count");
        Digraph d;
        d.k_ = vertex_count;
        std::sort(arcs.begin(), arcs.end());
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const auto& [u, v] = arcs[i];
            if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
                throw std::invalid_argument("Digraph: arc endpoint out of range");
            if (i > 0 && arcs[i] == arcs[i - 1])
                throw std::invalid_argument("Digraph: duplicate arc");
        }
        d.arcs_ = std::move(arcs);
        d.row_offset_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
        for (const auto& [u, v] : d.arcs_) d.row_offset_[static_cast<std::size_t>(u) + 1]++;
        for (std::size_t i = 1; i < d.row_offset_.size(); ++i) d.row_offset_[i] += d.row_offset_[i - 1];
        d.use_bits_ = vertex_count <= kBitsetMaxVertices;
        if (d.use_bits_) {
            const std::uint64_t nbits = static_cast<std::uint64_t>(vertex_count) * vertex_count;
            d.bits_.assign((nbits + 63) / 64, 0);
            for (const auto& [u, v] : d.arcs_) {
                const std::uint64_t bit = static_cast<std::uint64_t>(u) * vertex_count + v;
                d.bits_[bit >> 6] |= (1ull << (bit & 63));
            }
        }
        return d;
    }

    int vertex_count() const { return k_; }
    std::int64_t arc_count() const { return static_cast<std::int64_t>(arcs_.size()); }
    std::span<const Arc> arcs() const { return arcs_; }

    std::span<const Arc> arcs_from(int u) const {
        return {arcs_.data() + row_offset_[u], arcs_.data() + row_offset_[static_cast<std::size_t>(u) + 1]};
    }

    bool has_arc(int u, int v) const {
        if (u < 0 || u >= k_ || v < 0 || v >= k_) return false;
        if (use_bits_) {
            const std::uint64_t bit = static_cast<std::uint64_t>(u) * k_ + v;
            return (bits_[bit >> 6] >> (bit & 63)) & 1;
        }
        const auto row = arcs_from(u);
        return std::binary_search(row.begin(), row.end(), Arc{u, v});
    }

    int out_degree(int u) const {
        return static_cast<int>(row_offset_[static_cast<std::size_t>(u) + 1] - row_offset_[u]);
    }

    std::vector<int> in_degrees() const {
        std::vector<int> deg(k_, 0);
        for (const auto& [u, v] : arcs_) deg[v]++;
        return deg;
    }

private:
    static constexpr int kBitsetMaxVertices = 16384;  // 32 MiB of adjacency bits

    int k_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::int64_t> row_offset_;
    std::vector<std::uint64_t> bits_;
    bool use_bits_ = false;
};

// Outcome of checking the three structural requirements: no self loops,
// every arc accompanied by its reverse, and a common in/out degree.
struct DigraphAudit {
    bool loop_free = true;
    bool reverse_closed = true;
    bool regular = true;
    int degree = 0;                       // common degree when regular
    std::optional<Arc> loop_witness;
    std::optional<Arc> missing_reverse_witness;
    std::optional<int> irregular_vertex_witness;

    bool pass() const { return loop_free && reverse_closed && regular; }

    std::string describe() const {
        if (pass()) return "ok, degree " + std::to_string(degree);
        std::string s;
        if (!loop_free)
            s += "self loop at vertex " + std::to_string(loop_witness->first) + "; ";
        if (!reverse_closed)
            s += "arc (" + std::to_string(missing_reverse_witness->first) + "," +
                 std::to_string(missing_reverse_witness->second) + ") lacks its reverse; ";
        if (!regular)
            s += "vertex " + std::to_string(*irregular_vertex_witness) + " breaks regularity; ";
        return s;
    }
};

inline DigraphAudit audit_digraph(const Digraph& d) {
    DigraphAudit a;
    for (const auto& [u, v] : d.arcs()) {
        if (u == v && a.loop_free) {
            a.loop_free = false;
            a.loop_witness = Arc{u, v};
        }
        if (!d.has_arc(v, u) && a.reverse_closed) {
            a.reverse_closed = false;
            a.missing_reverse_witness = Arc{u, v};
        }
    }
    const std::vector<int> in = d.in_degrees();
    const int k = d.vertex_count();
    a.degree = k > 0 ? d.out_degree(0) : 0;
    for (int v = 0; v < k; ++v) {
        if (d.out_degree(v) != a.degree || in[v] != a.degree) {
            a.regular = false;
            a.irregular_vertex_witness = v;
            break;
        }
    }
    return a;
}

}  // namespace arcpda
