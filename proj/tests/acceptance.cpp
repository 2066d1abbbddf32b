// Acceptance suite: one scenario per criterion, one pass/fail line each.
// Run with no arguments for the full suite or with a criterion number.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "arcpda/arcpda.hpp"
#include "helpers.hpp"

using namespace arcpda;

namespace {

struct Checker {
    std::vector<std::string> failures;
    void check(bool ok, const std::string& msg) {
        if (!ok) failures.push_back(msg);
    }
};

int run_cli(const std::string& args, const std::string& out_file) {
    const std::string cmd = std::string(ARCPDA_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return {};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    std::fclose(f);
    return out;
}

bool has_line(const std::string& text, const std::string& line) {
    return text.find(line + "\n") != std::string::npos;
}

// equality under a color bijection with rows and columns already aligned
bool equal_up_to_colors(const PdaArray& a, const PdaArray& b) {
    if (a.F() != b.F() || a.K() != b.K() || a.S() != b.S()) return false;
    std::vector<std::int32_t> fwd(a.S(), -1), rev(b.S(), -1);
    for (std::int64_t r = 0; r < a.F(); ++r)
        for (std::int64_t c = 0; c < a.K(); ++c) {
            const std::int32_t x = a.at(r, c), y = b.at(r, c);
            if ((x == kStar) != (y == kStar)) return false;
            if (x == kStar) continue;
            if (fwd[x] == -1 && rev[y] == -1) {
                fwd[x] = y;
                rev[y] = x;
            } else if (fwd[x] != y || rev[y] != x) {
                return false;
            }
        }
    return true;
}

// equality under independent row/column permutations plus a color bijection
bool equal_up_to_any_relabeling(const PdaArray& a, const PdaArray& b) {
    if (a.F() != b.F() || a.K() != b.K() || a.S() != b.S()) return false;
    std::vector<int> rows(a.F()), cols(a.K());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = static_cast<int>(i);
    do {
        std::vector<int> cperm(cols.size());
        for (std::size_t i = 0; i < cols.size(); ++i) cperm[i] = static_cast<int>(i);
        do {
            std::vector<std::int32_t> cells(a.F() * a.K());
            for (std::int64_t r = 0; r < a.F(); ++r)
                for (std::int64_t c = 0; c < a.K(); ++c) cells[r * a.K() + c] = b.at(rows[r], cperm[c]);
            const PdaArray permuted =
                PdaArray::from_cells(a.F(), a.K(), b.Z(), b.S(), std::move(cells));
            if (equal_up_to_colors(a, permuted)) return true;
        } while (std::next_permutation(cperm.begin(), cperm.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
    return false;
}

double round_to(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return std::atof(buf);
}

// ---------------------------------------------------------------- criteria

// Reference (4,4,2,4) scheme through the command line: valid array, the
// relabeling comparison against the reference array, and an exact-rate run.
void criterion1(Checker& c) {
    c.check(run_cli("build --family corollary2 --n0 2 --w 1 --p0 2 --out acc1.pda",
                    "acc1_build.txt") == 0,
            "CLI build exited nonzero");
    PdaArray built = read_pda_file("acc1.pda");
    c.check(verify_pda(built).pass(), "built array failed verification");
    c.check(built.K() == 4 && built.F() == 4 && built.Z() == 2 && built.S() == 4,
            "built array is not a (4,4,2,4) scheme");

    const PdaArray reference = testdata::example1_array();
    const bool colors_only = equal_up_to_colors(built, reference);
    const bool any_relabeling = equal_up_to_any_relabeling(built, reference);
    c.check(colors_only || any_relabeling,
            "no relabeling maps the built array onto the reference array: the digraph route "
            "stars the whole diagonal while the reference array has integers at (0,0) and "
            "(1,1), and even with free row/column permutations the reference pairs colors "
            "{0,3} and {1,2} on common row pairs while the built array's four color classes "
            "occupy four distinct row pairs");

    c.check(run_cli("simulate acc1.pda --files 4 --symbols 16 --demands 0,1,2,3", "acc1_sim.txt") == 0,
            "CLI simulate exited nonzero");
    const std::string sim = slurp("acc1_sim.txt");
    c.check(has_line(sim, "transmissions=4"), "expected exactly 4 multicasts");
    c.check(has_line(sim, "rate=1"), "expected rate exactly 1");
    c.check(has_line(sim, "decode_ok=true"), "expected every user to decode");
    // each multicast serves exactly two users
    for (const auto& cells : built.positions_by_value())
        c.check(cells.size() == 2, "a multicast does not serve exactly 2 users");
}

// Two-block (12,12,8,10) scheme: verified array and the ten frozen classes.
void criterion2(Checker& c) {
    const HammingFamilyParams params{RadixSpec::make({{2, 2}, {3, 1}}), 1};
    const Digraph d = build_hamming_digraph(params);
    const PartitionColoring pc = partition_color(d, params);
    const PdaArray p = pda_from_coloring(d, pc.coloring);
    c.check(verify_pda(p).pass(), "array failed verification");
    c.check(p.K() == 12 && p.F() == 12 && p.Z() == 8 && p.S() == 10,
            "array is not a (12,12,8,10) scheme");

    const auto listed = testdata::example4_classes();
    c.check(pc.coloring.color_count == 10, "expected ten partition classes");
    int matched = 0;
    for (const auto& cls : listed) {
        std::set<std::pair<int, int>> want;
        for (const auto& [x, y] : cls.arcs)
            want.insert({static_cast<int>(vertex_to_index(params.spec, x)),
                         static_cast<int>(vertex_to_index(params.spec, y))});
        for (int color = 0; color < pc.coloring.color_count; ++color) {
            if (pc.keys[color].e != cls.e || pc.keys[color].t != cls.t) continue;
            if (testdata::class_arc_set(d, pc.coloring, color) == want) ++matched;
        }
    }
    c.check(matched == 10, "only " + std::to_string(matched) + "/10 classes match the listed sets");
}

// Merged coloring of the 8-vertex distance-2 digraph: six colors, and the
// exact search confirms five colors are impossible.
void criterion3(Checker& c) {
    const Digraph d = build_hamming_digraph({RadixSpec::make({{2, 3}}), 2});
    const MergedColoring mc = merged_color_binary(d, 3, 2);
    c.check(mc.coloring.color_count == 6, "merged coloring should use exactly 6 colors");
    c.check(verify_injective(d, mc.coloring).pass, "merged coloring failed verification");

    const ExactColorResult five = exact_min_injective_color(d, 5);
    c.check(five.exceeds_max, "a 5-color assignment was found; 6 is not minimal");
    const ExactColorResult six = exact_min_injective_color(d, 6);
    c.check(!six.exceeds_max && six.chromatic_index == 6,
            "exact search does not settle on 6 colors");
    std::cout << "  [exact search: minimum over 5 colors "
              << (five.exceeds_max ? "does not exist" : "exists") << ", minimum = "
              << (six.exceeds_max ? std::string(">6") : std::to_string(six.chromatic_index)) << "]\n";
}

// Cayley-family closed forms against the published rows, plus verified
// strong colorings with the exact class count.
void criterion4(Checker& c) {
    struct Row {
        std::int64_t n;
        double mn, rate;
    };
    for (const Row& row : {Row{63, 0.43, 9.0}, Row{105, 0.54, 6.0}, Row{465, 0.48, 30.0},
                           Row{1953, 0.45, 135.0}}) {
        const FamilyReport r = family_theorem4(row.n);
        c.check(r.K == row.n && r.F == row.n, "n=" + std::to_string(row.n) + ": K or F is off");
        c.check(round_to(r.memory_ratio.to_double(), 2) == row.mn,
                "n=" + std::to_string(row.n) + ": memory ratio is off");
        c.check(round_to(r.rate.to_double(), 1) == row.rate,
                "n=" + std::to_string(row.n) + ": rate is off");
    }
    for (std::int64_t n : {5, 6, 10, 15, 21, 105}) {
        const CayleyColoring cc = cayley_strong_color(n);
        const std::int64_t expected = cc.params.n * cc.params.totient /
                                      (std::int64_t(1) << cc.params.factors.size());
        c.check(cc.verification.pass, "n=" + std::to_string(n) + ": strong coloring check failed");
        c.check(!cc.used_fallback, "n=" + std::to_string(n) + ": candidate construction fell back");
        c.check(cc.coloring.color_count == expected,
                "n=" + std::to_string(n) + ": expected " + std::to_string(expected) + " colors, got " +
                    std::to_string(cc.coloring.color_count));
        c.check(verify_injective(cc.digraph, cc.coloring).pass,
                "n=" + std::to_string(n) + ": arc view failed the injective check");
    }
}

// Merged-family closed forms: two rows reproduced, two flagged.
void criterion5(Checker& c) {
    const FamilyReport r15 = family_corollary3(15, 8);
    c.check(r15.K == 32768 && round_to(r15.memory_ratio.to_double(), 2) == 0.80 &&
                round_to(r15.rate.to_double(), 1) == 25.1,
            "(15,8) row is off");
    const FamilyReport r16 = family_corollary3(16, 9);
    c.check(r16.K == 65536 && round_to(r16.memory_ratio.to_double(), 2) == 0.83 &&
                round_to(r16.rate.to_double(), 1) == 87.6,
            "(16,9) row is off");

    const FamilyReport r13 = family_corollary3(13, 7);
    c.check(std::abs(r13.rate.to_double() - 13.4) < 0.05, "(13,7) formula rate should be ~13.4");
    const FamilyReport r23 = family_corollary3(23, 15);
    c.check(std::abs(r23.rate.to_double() - 1333.7) < 0.15, "(23,15) formula rate should be ~1333.7");

    int flagged = 0;
    for (const TableRow& row : table_iii()) {
        if (row.quoted) continue;
        const bool is_13 = row.params == "n0=13 w=7";
        const bool is_23 = row.params == "n0=23 w=15";
        if ((is_13 || is_23) && !row.note.empty()) ++flagged;
        if (row.params == "n0=15 w=8")
            c.check(row.users == "32768" && row.memory == "0.80" && row.rate == "25.1",
                    "(15,8) table row is off");
        if (row.params == "n0=16 w=9")
            c.check(row.users == "65536" && row.memory == "0.83" && row.rate == "87.6",
                    "(16,9) table row is off");
    }
    c.check(flagged == 2, "the two inconsistent rows must carry an annotation");
}

// Coded-placement closed forms: subpacketization exactly, ratios to a decimal.
void criterion6(Checker& c) {
    struct Row {
        int n0, w, p0;
        std::int64_t f;
        double mn, rate;
        bool flagged;
    };
    const Row rows[] = {
        {7, 6, 6, 187500, 0.4, 27216.0, false},
        {8, 7, 6, 1015625, 0.4, 172268.3, true},  // published rate 172270.0 is off the formula
        {8, 6, 4, 44469, 0.5, 1880.1, false},
        {6, 4, 5, 14080, 0.7, 170.5, false},
    };
    for (const Row& row : rows) {
        const FamilyReport r = family_corollary4(row.n0, row.w, row.p0);
        const std::string tag =
            "(" + std::to_string(row.n0) + "," + std::to_string(row.w) + "," + std::to_string(row.p0) + ")";
        c.check(r.F == row.f, tag + ": subpacketization is off");
        c.check(round_to(r.memory_ratio.to_double(), 1) == row.mn, tag + ": memory ratio is off");
        c.check(round_to(r.rate.to_double(), 1) == row.rate, tag + ": rate is off");
    }
    for (const TableRow& row : table_iv())
        if (!row.quoted && row.params == "n0=8 w=7 p0=6")
            c.check(!row.note.empty(), "(8,7,6) must be annotated against the published rate");
}

// The construction grid: audits, verified colorings, verified arrays, closed
// forms, and one hundred seeded end-to-end runs per scheme.
void criterion7(Checker& c) {
    std::vector<std::pair<RadixSpec, int>> grid;
    for (int p0 : {2, 3, 5})
        for (int n0 = 2; n0 <= 6; ++n0) {
            if (int_pow(p0, n0) > 4096) continue;
            for (int w = 1; w < n0; ++w) grid.push_back({RadixSpec::make({{p0, n0}}), w});
        }
    const int pairs[3][2] = {{2, 3}, {2, 5}, {3, 5}};
    for (const auto& pr : pairs)
        for (int a = 1; a < 11; ++a) {
            if (int_pow(pr[0], a) > 1296) break;
            for (int b = 1; b < 11; ++b) {
                if (int_pow(pr[0], a) * int_pow(pr[1], b) > 1296) break;
                for (int w = 1; w <= std::min(2, a + b - 1); ++w)
                    grid.push_back({RadixSpec::make({{pr[0], a}, {pr[1], b}}), w});
            }
        }

    std::int64_t schemes = 0, runs = 0;
    for (const auto& [spec, w] : grid) {
        const HammingFamilyParams params{spec, w};
        const std::string tag = spec.str() + " w=" + std::to_string(w);
        const Digraph d = build_hamming_digraph(params);
        const DigraphAudit audit = audit_digraph(d);
        c.check(audit.pass(), tag + ": digraph audit failed");
        const PartitionColoring pc = partition_color(d, params);
        c.check(verify_injective(d, pc.coloring).pass, tag + ": coloring check failed");
        const PdaArray p = pda_from_coloring(d, pc.coloring);
        c.check(verify_pda(p).pass(), tag + ": array check failed");
        const FamilyReport rep = family_theorem5(spec, w);
        c.check(p.K() == rep.K && p.F() == rep.F && p.Z() == rep.Z && p.S() == rep.S,
                tag + ": measured parameters differ from the closed forms");
        ++schemes;

        const UncodedSimulator sim(p, 2);
        bool all_ok = true;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const FileStore store = FileStore::random(4, p.F(), 2, seed);
            const SimulationReport r = sim.run(store, random_demands(p.K(), 4, seed), seed);
            all_ok = all_ok && r.decode_ok && r.transmissions == p.S();
            ++runs;
        }
        c.check(all_ok, tag + ": an end-to-end run failed or sent a wrong load");
    }
    std::cout << "  [" << schemes << " schemes, " << runs << " end-to-end runs]\n";
}

// Coded placement: parameters and full decode across the instance list, and
// bit-identity with the uncoded pipeline when nothing is removed.
void criterion8(Checker& c) {
    struct Instance {
        std::string tag;
        PdaArray pda;
    };
    std::vector<Instance> instances;
    {
        const HammingFamilyParams params{RadixSpec::make({{2, 2}, {3, 1}}), 1};
        const Digraph d = build_hamming_digraph(params);
        instances.push_back({"2:2,3:1 w=1", pda_from_coloring(d, partition_color(d, params).coloring)});
    }
    const int small[][3] = {{4, 3, 2}, {5, 4, 2}, {6, 4, 2}, {6, 5, 2}, {5, 4, 3}, {5, 3, 3}, {4, 3, 4}};
    for (const auto& row : small) {
        const BuiltFamily built =
            build_family_pda(Family::Corollary4, nullptr, row[1], row[0], row[2], 0, 0, 0);
        instances.push_back({"corollary4 (" + std::to_string(row[0]) + "," + std::to_string(row[1]) +
                                 "," + std::to_string(row[2]) + ")",
                             std::move(built.pda)});
    }

    for (const Instance& inst : instances) {
        const PdaArray& p = inst.pda;
        const UselessStarReport us = useless_stars(p);
        c.check(us.uniform, inst.tag + ": useless stars are not uniform");
        const CodedPlacementSimulator sim(p, us, 2);
        c.check(sim.info_packets() == p.F() - us.z_prime, inst.tag + ": wrong subpacketization");
        bool all_ok = true;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const FileStore info = FileStore::random(4, sim.info_packets(), 2, seed);
            const SimulationReport r = sim.run(info, random_demands(p.K(), 4, seed), seed);
            all_ok = all_ok && r.decode_ok && r.transmissions == p.S() &&
                     r.memory_ratio == Rational(p.Z() - us.z_prime, p.F() - us.z_prime) &&
                     r.rate == Rational(p.S(), p.F() - us.z_prime);
        }
        c.check(all_ok, inst.tag + ": a coded end-to-end run failed");
    }

    // no useless stars: the coded pipeline reduces to the uncoded one
    const PdaArray mn = mn_pda(4, 2);
    const UselessStarReport us = useless_stars(mn);
    c.check(us.z_prime == 0, "baseline array should have no useless stars");
    const CodedPlacementSimulator sim(mn, us, 4);
    const FileStore store = FileStore::random(4, mn.F(), 4, 99);
    const FileStore coded = sim.encode_store(store);
    bool identical = true;
    for (std::int64_t n = 0; n < store.file_count; ++n)
        identical = identical && coded.files[n] == store.files[n];
    c.check(identical, "identity code changed the packets");
    const DemandVector d = {0, 1, 2, 3};
    identical = deliver(mn, store, d) == deliver(mn, coded, d);
    c.check(identical, "coded payloads differ from uncoded payloads");
    const SimulationReport ur = run_uncoded(mn, 4, 4, d, 99);
    const SimulationReport cr = sim.run(store, d, 99);
    c.check(ur.decode_ok && cr.decode_ok && ur.rate == cr.rate &&
                ur.memory_ratio == cr.memory_ratio && ur.bytes_on_link == cr.bytes_on_link,
            "coded and uncoded reports differ with nothing removed");
}

// Erasure code: exhaustive small subsets, sampled large subsets.
void criterion9(Checker& c) {
    std::mt19937_64 gen(2024);
    std::int64_t decodes = 0;
    for (int f = 1; f <= 12; ++f) {
        for (int k = 1; k <= f; ++k) {
            const MdsCodec codec(f, k);
            std::vector<gf::FieldSymbol> info(k);
            for (auto& x : info) x = static_cast<gf::FieldSymbol>(gen());
            const auto code = codec.encode(info);
            std::vector<std::int64_t> idx(k);
            bool ok = true;
            auto rec = [&](auto&& self, int depth, int first) -> void {
                if (!ok) return;
                if (depth == k) {
                    std::vector<gf::FieldSymbol> val(k);
                    for (int i = 0; i < k; ++i) val[i] = code[idx[i]];
                    ok = ok && codec.decode(idx, val) == info;
                    ++decodes;
                    return;
                }
                for (int j = first; j < f; ++j) {
                    idx[depth] = j;
                    self(self, depth + 1, j + 1);
                }
            };
            rec(rec, 0, 0);
            c.check(ok, "an (F=" + std::to_string(f) + ",k=" + std::to_string(k) + ") subset failed");
        }
    }

    const struct {
        std::int64_t f, kmax;
        int trials;
    } plans[] = {{64, 64, 300}, {256, 128, 300}, {1024, 128, 300}, {4096, 192, 100}};
    for (const auto& plan : plans) {
        bool ok = true;
        for (int t = 0; t < plan.trials; ++t) {
            const std::int64_t k = 1 + static_cast<std::int64_t>(gen() % plan.kmax);
            const MdsCodec codec(plan.f, k);
            std::vector<gf::FieldSymbol> info(k);
            for (auto& x : info) x = static_cast<gf::FieldSymbol>(gen());
            const auto code = codec.encode(info);
            std::set<std::int64_t> pick;
            while (static_cast<std::int64_t>(pick.size()) < k)
                pick.insert(static_cast<std::int64_t>(gen() % plan.f));
            std::vector<std::int64_t> idx(pick.begin(), pick.end());
            std::vector<gf::FieldSymbol> val;
            for (std::int64_t j : idx) val.push_back(code[j]);
            ok = ok && codec.decode(idx, val) == info;
            ++decodes;
        }
        c.check(ok, "a random subset failed at F=" + std::to_string(plan.f));
    }
    std::cout << "  [" << decodes << " decodes]\n";
}

// Targeted mutations of the reference array, each caught with its witness,
// and the multicast-pattern break observed as a decode failure.
void criterion10(Checker& c) {
    const PdaArray good = testdata::example1_array();

    // C1: turn the integer at (0,0) into a star; column 0 gains a third star
    {
        std::vector<std::int32_t> cells = good.cells();
        cells[0] = kStar;
        const PdaCheckReport rep = verify_pda(PdaArray::from_cells(4, 4, 2, 4, std::move(cells)));
        c.check(!rep.c1 && rep.c2 && rep.c3, "star-count mutation must fail exactly C1");
        c.check(rep.c1_column.has_value() && *rep.c1_column == 0 && *rep.c1_count == 3,
                "star-count witness is wrong");
    }
    // C2: declare five colors; 4 never appears
    {
        const PdaCheckReport rep = verify_pda(PdaArray::from_cells(4, 4, 2, 5, good.cells()));
        c.check(rep.c1 && !rep.c2 && rep.c3, "coverage mutation must fail exactly C2");
        c.check(rep.c2_missing_value.has_value() && *rep.c2_missing_value == 4,
                "coverage witness is wrong");
    }
    // C3: duplicate the integer 3 into row 0
    std::vector<std::int32_t> cells = good.cells();
    cells[0] = 3;
    const PdaArray broken = PdaArray::from_cells(4, 4, 2, 4, std::move(cells));
    {
        const PdaCheckReport rep = verify_pda(broken);
        c.check(rep.c1 && rep.c2 && !rep.c3, "pattern mutation must fail exactly C3");
        c.check(rep.c3_cells.has_value() && rep.c3_kind == "same row" &&
                    rep.c3_cells->first.row == 0 && rep.c3_cells->first.col == 0 &&
                    rep.c3_cells->second.row == 0 && rep.c3_cells->second.col == 3,
                "pattern witness is wrong");
    }
    // ... and the same mutation breaks decoding in simulation
    const FileStore store = FileStore::random(4, 4, 8, 41);
    const Caches caches = place_uncoded(broken, store);
    const auto payloads = deliver(broken, store, {0, 1, 2, 3});
    const DecodeResult res = decode_all(broken, store, caches, payloads, {0, 1, 2, 3});
    c.check(!res.all_ok(), "the broken pattern still decoded");
    bool witnessed = false;
    for (const DecodeFailure& f : res.failures)
        if ((f.user == 0 || f.user == 3) && f.slot == 3) witnessed = true;
    c.check(witnessed, "decode failure witness does not point at the broken slot");
}

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;
    std::function<void(Checker&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "reference scheme reproduction via the CLI", 1.0, criterion1},
        {2, "two-block (12,12,8,10) scheme and its ten classes", 1.0, criterion2},
        {3, "merged coloring of the 8-vertex digraph is minimal at 6", 120.0, criterion3},
        {4, "Cayley family rows and verified strong colorings", 60.0, criterion4},
        {5, "merged-family rows, inconsistent rows flagged", 1.0, criterion5},
        {6, "coded-placement family rows", 1.0, criterion6},
        {7, "construction grid with end-to-end runs", 600.0, criterion7},
        {8, "coded placement end to end", 300.0, criterion8},
        {9, "erasure code subsets", 120.0, criterion9},
        {10, "targeted mutations are caught and observed", 60.0, criterion10},
    };

    int selected = 0;
    if (argc > 1) selected = std::atoi(argv[1]);

    int failed = 0;
    for (const Criterion& cr : criteria) {
        if (selected && cr.id != selected) continue;
        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(checker);
        } catch (const std::exception& e) {
            checker.check(false, std::string("unhandled error: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        checker.check(elapsed < cr.time_limit_s,
                      "runtime " + std::to_string(elapsed) + "s exceeds " +
                          std::to_string(cr.time_limit_s) + "s");
        const bool pass = checker.failures.empty();
        std::printf("criterion %2d: %s (%.2fs) — %s\n", cr.id, pass ? "PASS" : "FAIL", elapsed,
                    cr.name);
        for (const std::string& msg : checker.failures) std::printf("    - %s\n", msg.c_str());
        if (!pass) ++failed;
    }
    return failed;
}
