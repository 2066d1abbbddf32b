#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "arcpda/cayley.hpp"
#include "arcpda/coloring.hpp"
#include "arcpda/errors.hpp"
#include "arcpda/hamming.hpp"
#include "arcpda/pda.hpp"
#include "arcpda/radix.hpp"
#include "arcpda/rational.hpp"

namespace arcpda {

enum class Family { Mn, Theorem4, Theorem5, Corollary2, Corollary3, Corollary4, Theorem6 };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Mn: return "mn";
        case Family::Theorem4: return "theorem4";
        case Family::Theorem5: return "theorem5";
        case Family::Corollary2: return "corollary2";
        case Family::Corollary3: return "corollary3";
        case Family::Corollary4: return "corollary4";
        case Family::Theorem6: return "theorem6";
    }
    return "?";
}

inline Family family_from_name(const std::string& s) {
    for (Family f : {Family::Mn, Family::Theorem4, Family::Theorem5, Family::Corollary2,
                     Family::Corollary3, Family::Corollary4, Family::Theorem6})
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown family '" + s + "'");
}

struct FamilyReport {
    Family family;
    std::string params;
    std::int64_t K = 0, F = 0, Z = 0, S = 0;
    Rational memory_ratio;
    Rational rate;
    // coded-placement families only
    std::int64_t z_prime = -1;
    std::int64_t base_F = -1, base_Z = -1;
    std::vector<std::string> notes;
};

inline FamilyReport family_mn(std::int64_t k, std::int64_t t) {
    if (t < 1 || t >= k) throw std::invalid_argument("mn: requires 1 <= t < K");
    FamilyReport r;
    r.family = Family::Mn;
    r.params = "K=" + std::to_string(k) + " t=" + std::to_string(t);
    r.K = k;
    r.F = binomial(k, t);
    r.Z = binomial(k - 1, t - 1);
    r.S = binomial(k, t + 1);
    r.memory_ratio = {t, k};
    r.rate = {k - t, 1 + t};
    return r;
}

inline FamilyReport family_theorem4(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("theorem4: requires n >= 3");
    const CayleyParams cp = cayley_params(n);
    const std::int64_t two_m = std::int64_t(1) << cp.factors.size();
    const __int128 product = static_cast<__int128>(n) * cp.totient;
    if (product % two_m != 0) throw std::logic_error("theorem4: color count is not integral");
    FamilyReport r;
    r.family = Family::Theorem4;
    r.params = "n=" + std::to_string(n);
    r.K = r.F = n;
    r.Z = n - cp.totient;
    r.S = detail::checked_int64(product / two_m, "theorem4 S");
    r.memory_ratio = {r.Z, r.F};
    r.rate = {r.S, r.F};
    return r;
}

inline FamilyReport family_theorem5(const RadixSpec& spec, int w) {
    validate(HammingFamilyParams{spec, w});
    FamilyReport r;
    r.family = Family::Theorem5;
    r.params = "radices=" + spec.str() + " w=" + std::to_string(w);
    r.K = r.F = spec.vertex_count();
    r.Z = r.K - hamming_degree(spec, w);
    r.S = hamming_color_count(spec, w);
    r.memory_ratio = {r.Z, r.F};
    r.rate = {r.S, r.F};
    return r;
}

inline FamilyReport family_corollary2(int n0, int w, int p0) {
    const RadixSpec spec = RadixSpec::make({{p0, n0}});
    FamilyReport r = family_theorem5(spec, w);
    r.family = Family::Corollary2;
    r.params = "n0=" + std::to_string(n0) + " w=" + std::to_string(w) + " p0=" + std::to_string(p0);
    return r;
}

// Binary merged coloring family. S is the closed-form bound; for
// n0 < 2w-1 the constructed coloring may use fewer colors.
inline FamilyReport family_corollary3(int n0, int w) {
    if (w < 2 || n0 <= w || n0 > 2 * w - 1)
        throw std::invalid_argument("corollary3: requires w < n0 <= 2w-1");
    FamilyReport r;
    r.family = Family::Corollary3;
    r.params = "n0=" + std::to_string(n0) + " w=" + std::to_string(w);
    r.K = r.F = int_pow(2, n0);
    r.Z = r.K - binomial(n0, w);
    if (n0 == 2 * w - 1) {
        r.S = detail::checked_int64(static_cast<__int128>(binomial(n0, w)) * (std::int64_t(1) << (w - 1)),
                              "corollary3 S");
    } else {
        __int128 group_bound = 1;
        for (int i = 1; i <= n0 - w; ++i) group_bound += binomial(w, i);
        r.S = detail::checked_int64(static_cast<__int128>(binomial(n0, w)) * group_bound, "corollary3 S");
        r.notes.push_back("color count is an upper bound; the merged construction may use fewer");
    }
    r.memory_ratio = {r.Z, r.F};
    r.rate = {r.S, r.F};
    return r;
}

inline FamilyReport family_theorem6(const RadixSpec& spec, int w) {
    const FamilyReport base = family_theorem5(spec, w);
    FamilyReport r;
    r.family = Family::Theorem6;
    r.params = base.params;
    r.z_prime = useless_star_count(spec, w);
    r.base_F = base.F;
    r.base_Z = base.Z;
    r.K = base.K;
    r.F = base.F - r.z_prime;
    r.Z = base.Z - r.z_prime;
    r.S = base.S;
    r.memory_ratio = {r.Z, r.F};
    r.rate = {r.S, r.F};
    return r;
}

inline FamilyReport family_corollary4(int n0, int w, int p0) {
    const RadixSpec spec = RadixSpec::make({{p0, n0}});
    FamilyReport r = family_theorem6(spec, w);
    r.family = Family::Corollary4;
    r.params = "n0=" + std::to_string(n0) + " w=" + std::to_string(w) + " p0=" + std::to_string(p0);
    return r;
}

struct BuiltFamily {
    FamilyReport report;
    PdaArray pda;
};

// Constructs the array behind a family report and cross-checks the measured
// parameters against the closed forms. The returned array always passes the
// verifier; mismatches with the formulas are internal errors.
inline BuiltFamily build_family_pda(Family family, const RadixSpec* spec_opt, int w, int n0, int p0,
                                    std::int64_t n, std::int64_t mn_k, std::int64_t mn_t,
                                    bool force = false) {
    auto require = [](bool ok, const char* msg) {
        if (!ok) throw VerificationError(msg);
    };
    switch (family) {
        case Family::Mn: {
            FamilyReport rep = family_mn(mn_k, mn_t);
            PdaArray pda = mn_pda(static_cast<int>(mn_k), static_cast<int>(mn_t));
            require(pda.K() == rep.K && pda.F() == rep.F && pda.Z() == rep.Z && pda.S() == rep.S,
                    "mn: measured parameters differ from the closed forms");
            require(verify_pda(pda).pass(), "mn: built array failed verification");
            return {std::move(rep), std::move(pda)};
        }
        case Family::Theorem4: {
            FamilyReport rep = family_theorem4(n);
            CayleyColoring cc = cayley_strong_color(n, force);
            require(cc.verification.pass, "theorem4: strong coloring failed verification");
            if (cc.used_fallback)
                rep.notes.push_back("componentwise pairing failed; greedy strong coloring used");
            else
                require(cc.coloring.color_count == rep.S,
                        "theorem4: constructed color count differs from the closed form");
            PdaArray pda = pda_from_coloring(cc.digraph, cc.coloring);
            require(verify_pda(pda).pass(), "theorem4: built array failed verification");
            rep.S = pda.S();
            rep.rate = {rep.S, rep.F};
            return {std::move(rep), std::move(pda)};
        }
        case Family::Theorem5:
        case Family::Corollary2:
        case Family::Theorem6:
        case Family::Corollary4: {
            RadixSpec spec = spec_opt ? *spec_opt : RadixSpec::make({{p0, n0}});
            const bool coded = family == Family::Theorem6 || family == Family::Corollary4;
            FamilyReport rep;
            if (family == Family::Theorem5) rep = family_theorem5(spec, w);
            else if (family == Family::Corollary2) rep = family_corollary2(n0, w, p0);
            else if (family == Family::Theorem6) rep = family_theorem6(spec, w);
            else rep = family_corollary4(n0, w, p0);

            const HammingFamilyParams params{spec, w};
            const Digraph d = build_hamming_digraph(params, force);
            const PartitionColoring pc = partition_color(d, params);
            PdaArray pda = pda_from_coloring(d, pc.coloring);
            require(verify_pda(pda).pass(), "built array failed verification");
            const std::int64_t base_F = coded ? rep.base_F : rep.F;
            const std::int64_t base_Z = coded ? rep.base_Z : rep.Z;
            require(pda.K() == rep.K && pda.F() == base_F && pda.Z() == base_Z && pda.S() == rep.S,
                    "measured parameters differ from the closed forms");
            if (coded) {
                const UselessStarReport us = useless_stars(pda);
                require(us.uniform, "useless star count is not uniform across columns");
                require(us.z_prime == rep.z_prime,
                        "scanned useless star count differs from the closed form");
            }
            return {std::move(rep), std::move(pda)};
        }
        case Family::Corollary3: {
            FamilyReport rep = family_corollary3(n0, w);
            const RadixSpec spec = RadixSpec::make({{2, n0}});
            const HammingFamilyParams params{spec, w};
            const Digraph d = build_hamming_digraph(params, force);
            const MergedColoring mc = merged_color_binary(d, n0, w);
            PdaArray pda = pda_from_coloring(d, mc.coloring);
            require(verify_pda(pda).pass(), "corollary3: built array failed verification");
            require(pda.S() <= rep.S, "corollary3: constructed colors exceed the bound");
            if (n0 == 2 * w - 1)
                require(pda.S() == rep.S, "corollary3: pairing must meet the bound exactly");
            if (pda.S() != rep.S)
                rep.notes.push_back("constructed coloring uses " + std::to_string(pda.S()) +
                                    " colors, below the bound " + std::to_string(rep.S));
            return {std::move(rep), std::move(pda)};
        }
    }
    throw std::logic_error("build_family_pda: unreachable");
}

}  // namespace arcpda
