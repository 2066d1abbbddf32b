#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arcpda/digraph.hpp"
#include "arcpda/errors.hpp"
#include "arcpda/radix.hpp"

namespace arcpda {

struct HammingFamilyParams {
    RadixSpec spec;
    int w = 1;  // arcs join vertices at Hamming distance exactly w, 1 <= w < total length
};

namespace detail {

inline std::int64_t checked_int64(__int128 v, const char* what) {
    if (v < 0 || v > static_cast<__int128>(INT64_MAX))
        throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

}  // namespace detail

inline std::int64_t binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    __int128 acc = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > static_cast<__int128>(INT64_MAX)) throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::int64_t>(acc);
}

inline std::int64_t int_pow(std::int64_t base, int exp) {
    __int128 acc = 1;
    for (int i = 0; i < exp; ++i) acc *= base;
    return detail::checked_int64(acc, "int_pow");
}

// Sum over all w-subsets A of digit positions of prod_{pos in A} v(pos),
// where v is (p-1) for the common degree and p(p-1) for the class count,
// computed blockwise by convolution.
inline std::int64_t subset_product_sum(const RadixSpec& spec, int w, bool include_radix_factor) {
    std::vector<__int128> poly(w + 1, 0);
    poly[0] = 1;
    for (const RadixBlock& b : spec.blocks()) {
        const __int128 v = include_radix_factor ? static_cast<__int128>(b.radix) * (b.radix - 1)
                                                : static_cast<__int128>(b.radix - 1);
        std::vector<__int128> block(w + 1, 0);
        __int128 vp = 1;
        for (int a = 0; a <= std::min(w, b.length); ++a) {
            block[a] = static_cast<__int128>(binomial(b.length, a)) * vp;
            vp *= v;
        }
        std::vector<__int128> next(w + 1, 0);
        for (int i = 0; i <= w; ++i)
            for (int j = 0; i + j <= w; ++j) next[i + j] += poly[i] * block[j];
        poly = std::move(next);
    }
    return detail::checked_int64(poly[w], "subset_product_sum");
}

inline std::int64_t hamming_degree(const RadixSpec& spec, int w) {
    return subset_product_sum(spec, w, false);
}

inline std::int64_t hamming_color_count(const RadixSpec& spec, int w) {
    return subset_product_sum(spec, w, true);
}

// Stars per column that never join a multicast pattern: the diagonal plus all
// vertex pairs strictly closer than w.
inline std::int64_t useless_star_count(const RadixSpec& spec, int w) {
    __int128 acc = 0;
    for (int i = 0; i < w; ++i) acc += hamming_degree(spec, i);
    return detail::checked_int64(acc, "useless_star_count");
}

// w may equal the digit count: all-coordinate flips still give a regular
// reverse-closed digraph (the two-vertex case lives there).
inline void validate(const HammingFamilyParams& p) {
    if (p.w < 1 || p.w > p.spec.total_length())
        throw std::invalid_argument("Hamming digraph: requires 1 <= w <= total digit count");
}

// All ordered pairs of mixed-radix vectors at Hamming distance exactly w.
// Reverse-closed and loop-free by symmetry of the distance; regular because
// the neighbor count of any vertex depends only on the radix layout.
inline Digraph build_hamming_digraph(const HammingFamilyParams& params, bool force = false) {
    validate(params);
    const RadixSpec& spec = params.spec;
    const std::int64_t k = spec.vertex_count();
    if (k > kMaxBuildVertices && !force)
        throw GuardrailError("Hamming digraph: vertex count " + std::to_string(k) +
                             " exceeds the build guardrail (use force to override)");
    const int len = spec.total_length();
    const int w = params.w;

    std::vector<Arc> arcs;
    Vertex coords(len);
    std::vector<int> chosen(w);

    // For each tail, walk all w-subsets of positions and all nonzero digit
    // replacements on them; the head index is adjusted digit by digit.
    for (std::int64_t tail = 0; tail < k; ++tail) {
        coords = index_to_vertex(spec, tail);
        auto recurse = [&](auto&& self, int depth, int first_pos, std::int64_t head) -> void {
            if (depth == w) {
                arcs.push_back({static_cast<int>(tail), static_cast<int>(head)});
                return;
            }
            for (int pos = first_pos; pos <= len - (w - depth); ++pos) {
                const int r = spec.radix_at(pos);
                for (int d = 1; d < r; ++d) {
                    const int digit = (coords[pos] + d) % r;
                    self(self, depth + 1, pos + 1,
                         head + (digit - coords[pos]) * spec.weight_at(pos));
                }
            }
        };
        recurse(recurse, 0, 0, tail);
    }
    return Digraph::from_arcs(static_cast<int>(k), std::move(arcs));
}

}  // namespace arcpda
