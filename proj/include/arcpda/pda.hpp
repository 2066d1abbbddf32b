#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arcpda/coloring.hpp"
#include "arcpda/digraph.hpp"
#include "arcpda/errors.hpp"
#include "arcpda/rational.hpp"

namespace arcpda {

constexpr std::int32_t kStar = -1;

struct SchemeParams {
    std::int64_t K = 0, F = 0, Z = 0, S = 0;
    Rational memory_ratio() const { return {Z, F}; }
    Rational rate() const { return {S, F}; }
};

// F x K grid over {star} u [0, S-1]. Rows index packets, columns index users.
// Construction validates only cell ranges; the three defining conditions are
// the verifier's job so that it can serve externally loaded arrays too.
class PdaArray {
public:
    static PdaArray from_cells(std::int64_t rows, std::int64_t cols, std::int64_t stars_per_col,
                               std::int64_t color_count, std::vector<std::int32_t> cells) {
        if (rows < 1 || cols < 1 || stars_per_col < 0 || color_count < 0)
            throw std::invalid_argument("PdaArray: bad dimensions");
        if (static_cast<std::int64_t>(cells.size()) != rows * cols)
            throw std::invalid_argument("PdaArray: cell count does not match dimensions");
        for (std::int32_t c : cells)
            if (c != kStar && (c < 0 || c >= color_count))
                throw std::invalid_argument("PdaArray: cell value out of range");
        PdaArray p;
        p.f_ = rows;
        p.k_ = cols;
        p.z_ = stars_per_col;
        p.s_ = color_count;
        p.cells_ = std::move(cells);
        return p;
    }

    std::int64_t F() const { return f_; }
    std::int64_t K() const { return k_; }
    std::int64_t Z() const { return z_; }
    std::int64_t S() const { return s_; }
    SchemeParams params() const { return {k_, f_, z_, s_}; }

    std::int32_t at(std::int64_t row, std::int64_t col) const { return cells_[row * k_ + col]; }
    const std::vector<std::int32_t>& cells() const { return cells_; }

    // cells grouped by integer value; positions[s] lists (row, col) pairs
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> positions_by_value() const {
        std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> pos(s_);
        for (std::int64_t r = 0; r < f_; ++r)
            for (std::int64_t c = 0; c < k_; ++c) {
                const std::int32_t v = at(r, c);
                if (v != kStar) pos[v].push_back({static_cast<std::int32_t>(r), static_cast<std::int32_t>(c)});
            }
        return pos;
    }

private:
    std::int64_t f_ = 0, k_ = 0, z_ = 0, s_ = 0;
    std::vector<std::int32_t> cells_;
};

struct PdaCheckReport {
    struct Cell {
        std::int64_t row, col;
    };
    bool c1 = true, c2 = true, c3 = true;
    // witnesses: first failure of each kind
    std::optional<std::int64_t> c1_column;
    std::optional<std::int64_t> c1_count;
    std::optional<std::int32_t> c2_missing_value;
    std::optional<std::pair<Cell, Cell>> c3_cells;
    std::string c3_kind;  // "same row", "same column", or "cross cell not star"

    bool pass() const { return c1 && c2 && c3; }

    std::string describe() const {
        if (pass()) return "ok";
        std::string s;
        if (!c1)
            s += "C1: column " + std::to_string(*c1_column) + " has " + std::to_string(*c1_count) +
                 " stars; ";
        if (!c2) s += "C2: integer " + std::to_string(*c2_missing_value) + " never appears; ";
        if (!c3)
            s += "C3 (" + c3_kind + "): cells (" + std::to_string(c3_cells->first.row) + "," +
                 std::to_string(c3_cells->first.col) + ") and (" + std::to_string(c3_cells->second.row) +
                 "," + std::to_string(c3_cells->second.col) + "); ";
        return s;
    }
};

inline PdaCheckReport verify_pda(const PdaArray& p) {
    PdaCheckReport rep;
    for (std::int64_t c = 0; c < p.K() && rep.c1; ++c) {
        std::int64_t stars = 0;
        for (std::int64_t r = 0; r < p.F(); ++r) stars += (p.at(r, c) == kStar);
        if (stars != p.Z()) {
            rep.c1 = false;
            rep.c1_column = c;
            rep.c1_count = stars;
        }
    }
    const auto pos = p.positions_by_value();
    for (std::int32_t s = 0; s < p.S() && rep.c2; ++s)
        if (pos[s].empty()) {
            rep.c2 = false;
            rep.c2_missing_value = s;
        }
    for (std::int32_t s = 0; s < p.S() && rep.c3; ++s) {
        const auto& cells = pos[s];
        for (std::size_t i = 0; i < cells.size() && rep.c3; ++i) {
            for (std::size_t j = i + 1; j < cells.size() && rep.c3; ++j) {
                const auto [r1, c1] = cells[i];
                const auto [r2, c2] = cells[j];
                if (r1 == r2 || c1 == c2) {
                    rep.c3 = false;
                    rep.c3_kind = r1 == r2 ? "same row" : "same column";
                    rep.c3_cells = {{r1, c1}, {r2, c2}};
                } else if (p.at(r1, c2) != kStar || p.at(r2, c1) != kStar) {
                    rep.c3 = false;
                    rep.c3_kind = "cross cell not star";
                    rep.c3_cells = {{r1, c1}, {r2, c2}};
                }
            }
        }
    }
    return rep;
}

// Square array read off an injective arc-colored digraph: stars at non-arcs,
// the arc's color elsewhere. The coloring is re-verified before building.
inline PdaArray pda_from_coloring(const Digraph& d, const ArcColoring& c) {
    const InjectivityReport inj = verify_injective(d, c);
    if (!inj.pass)
        throw VerificationError("pda_from_coloring: coloring is not injective (" +
                                std::to_string(inj.violations.size()) + " conflicting arc pairs)");
    const std::int64_t k = d.vertex_count();
    std::vector<std::int32_t> cells(static_cast<std::size_t>(k) * k, kStar);
    const auto arcs = d.arcs();
    for (std::int64_t i = 0; i < d.arc_count(); ++i)
        cells[static_cast<std::int64_t>(arcs[i].first) * k + arcs[i].second] = c.color_of_arc[i];
    const std::int64_t degree = k > 0 ? d.out_degree(0) : 0;
    return PdaArray::from_cells(k, k, k - degree, c.color_count, std::move(cells));
}

// Baseline array with rows indexed by the t-subsets of the user set: user k's
// column holds a star where k belongs to the row's subset, and otherwise the
// lexicographic rank of the (t+1)-subset formed by adjoining k.
inline PdaArray mn_pda(int k, int t) {
    if (t < 1 || t >= k) throw std::invalid_argument("mn_pda: requires 1 <= t < K");
    if (k > 62) throw std::invalid_argument("mn_pda: K too large for subset enumeration");

    // enumeration is lexicographic on the sorted element lists by construction
    auto subsets_of_size = [k](int size) {
        std::vector<std::uint64_t> out;
        std::vector<int> pick(size);
        auto rec = [&](auto&& self, int depth, int first) -> void {
            if (depth == size) {
                std::uint64_t m = 0;
                for (int e : pick) m |= 1ull << e;
                out.push_back(m);
                return;
            }
            for (int v = first; v < k; ++v) {
                pick[depth] = v;
                self(self, depth + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
        return out;
    };

    const auto rows = subsets_of_size(t);
    const auto multicasts = subsets_of_size(t + 1);
    std::unordered_map<std::uint64_t, std::int32_t> rank;
    for (std::size_t i = 0; i < multicasts.size(); ++i) rank[multicasts[i]] = static_cast<std::int32_t>(i);

    const std::int64_t f = static_cast<std::int64_t>(rows.size());
    if (f * k > (std::int64_t(1) << 26))
        throw GuardrailError("mn_pda: array would exceed the desk-scale cell budget");
    std::vector<std::int32_t> cells(static_cast<std::size_t>(f) * k, kStar);
    for (std::int64_t r = 0; r < f; ++r)
        for (int u = 0; u < k; ++u)
            if (!((rows[r] >> u) & 1)) cells[r * k + u] = rank.at(rows[r] | (1ull << u));

    std::int64_t z = 0;  // C(k-1, t-1) counted directly
    for (std::uint64_t m : rows) z += (m >> 0) & 1;
    return PdaArray::from_cells(f, k, z, static_cast<std::int64_t>(multicasts.size()), std::move(cells));
}

// A star is useful when some integer appears in both its row and its column;
// only those stars ever cancel interference. Counts are per column.
struct UselessStarReport {
    std::vector<std::int64_t> per_column;
    bool uniform = true;
    std::int64_t z_prime = 0;  // the common count when uniform, else the maximum
    std::vector<std::vector<std::int32_t>> useless_rows_per_column;
};

inline UselessStarReport useless_stars(const PdaArray& p) {
    const PdaCheckReport chk = verify_pda(p);
    if (!chk.pass())
        throw std::invalid_argument("useless_stars: not a valid array (" + chk.describe() + ")");

    // mark (row of s, column of s) combinations per integer s
    const std::int64_t f = p.F(), k = p.K();
    std::vector<std::uint64_t> useful((static_cast<std::uint64_t>(f) * k + 63) / 64, 0);
    for (const auto& cells : p.positions_by_value()) {
        for (const auto& [r1, c1] : cells) {
            for (const auto& [r2, c2] : cells) {
                if (r1 == r2) continue;
                const std::uint64_t bit = static_cast<std::uint64_t>(r1) * k + c2;
                useful[bit >> 6] |= 1ull << (bit & 63);
            }
        }
    }

    UselessStarReport rep;
    rep.per_column.assign(k, 0);
    rep.useless_rows_per_column.assign(k, {});
    for (std::int64_t r = 0; r < f; ++r)
        for (std::int64_t c = 0; c < k; ++c) {
            if (p.at(r, c) != kStar) continue;
            const std::uint64_t bit = static_cast<std::uint64_t>(r) * k + c;
            if (!((useful[bit >> 6] >> (bit & 63)) & 1)) {
                rep.per_column[c]++;
                rep.useless_rows_per_column[c].push_back(static_cast<std::int32_t>(r));
            }
        }
    rep.z_prime = rep.per_column.empty() ? 0 : rep.per_column[0];
    for (std::int64_t c : rep.per_column) {
        if (c != rep.z_prime) rep.uniform = false;
        rep.z_prime = std::max(rep.z_prime, c);
    }
    if (rep.uniform && !rep.per_column.empty()) rep.z_prime = rep.per_column[0];
    return rep;
}

}  // namespace arcpda
