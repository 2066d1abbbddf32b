#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arcpda/gf65536.hpp"
#include "arcpda/mds.hpp"
#include "arcpda/pda.hpp"
#include "arcpda/rational.hpp"

namespace arcpda {

// N files, each split into equal packets of B field symbols.
struct FileStore {
    std::int64_t file_count = 0;
    std::int64_t packets_per_file = 0;
    int symbols_per_packet = 0;
    std::vector<std::vector<gf::FieldSymbol>> files;  // [n][packet * B + b]

    static FileStore random(std::int64_t n_files, std::int64_t packets, int symbols,
                            std::uint64_t seed) {
        FileStore fs;
        fs.file_count = n_files;
        fs.packets_per_file = packets;
        fs.symbols_per_packet = symbols;
        std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ull);
        fs.files.assign(n_files, {});
        for (auto& f : fs.files) {
            f.resize(static_cast<std::size_t>(packets) * symbols);
            for (auto& sym : f) sym = static_cast<gf::FieldSymbol>(gen());
        }
        return fs;
    }

    std::span<const gf::FieldSymbol> packet(std::int64_t n, std::int64_t j) const {
        return {files[n].data() + j * symbols_per_packet, static_cast<std::size_t>(symbols_per_packet)};
    }
};

using DemandVector = std::vector<std::int32_t>;

// Demands are drawn with a plain modulo so runs replay identically everywhere.
inline DemandVector random_demands(std::int64_t users, std::int64_t n_files, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    DemandVector d(users);
    for (auto& x : d) x = static_cast<std::int32_t>(gen() % n_files);
    return d;
}

inline void validate_demands(const PdaArray& p, const FileStore& store, const DemandVector& d) {
    if (static_cast<std::int64_t>(d.size()) != p.K())
        throw std::invalid_argument("demand vector length must equal K");
    for (std::int32_t x : d)
        if (x < 0 || x >= store.file_count)
            throw std::invalid_argument("demand index " + std::to_string(x) + " out of range");
}

// Star rows per user: user k caches packet j of every file iff cell (j,k) is
// a star. Cached bytes always equal the store's packets, so reads go through
// the store; membership is what placement decides.
struct Caches {
    std::vector<std::vector<std::int32_t>> rows;  // per user, ascending
};

inline Caches place_uncoded(const PdaArray& p, const FileStore& store) {
    if (store.packets_per_file != p.F())
        throw std::invalid_argument("place_uncoded: store must hold F packets per file");
    Caches caches;
    caches.rows.assign(p.K(), {});
    for (std::int64_t c = 0; c < p.K(); ++c)
        for (std::int64_t r = 0; r < p.F(); ++r)
            if (p.at(r, c) == kStar) caches.rows[c].push_back(static_cast<std::int32_t>(r));
    return caches;
}

// One multicast per integer: the xor of the requested packets at its cells.
inline std::vector<std::vector<gf::FieldSymbol>> deliver(const PdaArray& p, const FileStore& store,
                                                         const DemandVector& d) {
    validate_demands(p, store, d);
    const int b = store.symbols_per_packet;
    std::vector<std::vector<gf::FieldSymbol>> payloads(p.S());
    for (auto& pl : payloads) pl.assign(b, 0);
    for (std::int64_t r = 0; r < p.F(); ++r)
        for (std::int64_t c = 0; c < p.K(); ++c) {
            const std::int32_t s = p.at(r, c);
            if (s == kStar) continue;
            const auto pkt = store.packet(d[c], r);
            for (int i = 0; i < b; ++i) payloads[s][i] ^= pkt[i];
        }
    return payloads;
}

struct DecodeFailure {
    std::int64_t user = -1;
    std::int64_t slot = -1;
    std::int64_t row = -1;
    std::string reason;
};

struct DecodeResult {
    std::vector<char> ok;  // per user
    std::vector<DecodeFailure> failures;
    std::vector<std::vector<gf::FieldSymbol>> reconstructed;  // per user, when kept

    bool all_ok() const {
        for (char c : ok)
            if (!c) return false;
        return true;
    }
};

// Every user rebuilds its requested file: cached packets are read directly;
// each integer cell's packet comes from that slot's payload after xor-ing out
// the interfering packets, all of which must sit in the user's cache.
inline DecodeResult decode_all(const PdaArray& p, const FileStore& store, const Caches& caches,
                               const std::vector<std::vector<gf::FieldSymbol>>& payloads,
                               const DemandVector& d, bool keep_files = false) {
    validate_demands(p, store, d);
    if (static_cast<std::int64_t>(payloads.size()) != p.S())
        throw std::invalid_argument("decode_all: expected S payloads");
    if (static_cast<std::int64_t>(caches.rows.size()) != p.K())
        throw std::invalid_argument("decode_all: caches do not cover all users");
    const int b = store.symbols_per_packet;
    const auto by_value = p.positions_by_value();

    DecodeResult res;
    res.ok.assign(p.K(), 1);
    if (keep_files) res.reconstructed.assign(p.K(), {});

    std::vector<gf::FieldSymbol> packet(b);
    std::vector<gf::FieldSymbol> rebuilt;
    for (std::int64_t user = 0; user < p.K(); ++user) {
        rebuilt.assign(static_cast<std::size_t>(p.F()) * b, 0);
        for (std::int64_t r = 0; r < p.F(); ++r) {
            const std::int32_t s = p.at(r, user);
            if (s == kStar) {
                const auto pkt = store.packet(d[user], r);
                std::copy(pkt.begin(), pkt.end(), rebuilt.begin() + r * b);
                continue;
            }
            packet.assign(payloads[s].begin(), payloads[s].end());
            bool good = true;
            for (const auto& [r2, c2] : by_value[s]) {
                if (r2 == r && c2 == user) continue;
                if (p.at(r2, user) != kStar) {
                    res.ok[user] = 0;
                    res.failures.push_back({user, s, r2,
                                            "interfering packet " + std::to_string(r2) +
                                                " is not cached by user " + std::to_string(user)});
                    good = false;
                    break;
                }
                const auto pkt = store.packet(d[c2], r2);
                for (int i = 0; i < b; ++i) packet[i] ^= pkt[i];
            }
            if (good) std::copy(packet.begin(), packet.end(), rebuilt.begin() + r * b);
        }
        if (res.ok[user] && rebuilt != store.files[d[user]]) {
            res.ok[user] = 0;
            res.failures.push_back({user, -1, -1, "reconstructed file differs from the original"});
        }
        if (keep_files) res.reconstructed[user] = rebuilt;
    }
    return res;
}

struct SimulationReport {
    std::string family = "file";
    std::int64_t K = 0, F = 0, Z = 0, S = 0;
    std::int64_t z_prime = 0;  // stars removed by coded placement; 0 for uncoded runs
    Rational memory_ratio;
    Rational rate;
    std::int64_t transmissions = 0;
    std::int64_t bytes_on_link = 0;
    std::int64_t per_user_cache_packets = 0;
    bool decode_ok = false;
    std::uint64_t seed = 0;
    std::vector<DecodeFailure> failures;
};

inline std::string format_report(const SimulationReport& r) {
    std::string out;
    out += "family=" + r.family + "\n";
    out += "K=" + std::to_string(r.K) + "\n";
    out += "F=" + std::to_string(r.F) + "\n";
    out += "Z=" + std::to_string(r.Z) + "\n";
    out += "S=" + std::to_string(r.S) + "\n";
    out += "Zprime=" + std::to_string(r.z_prime) + "\n";
    out += "memory_ratio=" + r.memory_ratio.str() + "\n";
    out += "rate=" + r.rate.str() + "\n";
    out += "transmissions=" + std::to_string(r.transmissions) + "\n";
    out += "bytes=" + std::to_string(r.bytes_on_link) + "\n";
    out += std::string("decode_ok=") + (r.decode_ok ? "true" : "false") + "\n";
    out += "seed=" + std::to_string(r.seed) + "\n";
    return out;
}

// Reusable uncoded pipeline: the per-color cell lists and per-user integer
// cells are grouped once, so repeated demand runs skip the grid scans. Cached
// packets are plain store reads, so only recovered packets need comparing.
class UncodedSimulator {
public:
    UncodedSimulator(PdaArray p, int symbols_per_packet) : p_(std::move(p)), b_(symbols_per_packet) {
        by_value_ = p_.positions_by_value();
        integer_cells_.assign(p_.K(), {});
        for (std::int32_t s = 0; s < p_.S(); ++s)
            for (const auto& [r, c] : by_value_[s]) integer_cells_[c].push_back({r, s});
    }

    const PdaArray& pda() const { return p_; }

    SimulationReport run(const FileStore& store, const DemandVector& demands, std::uint64_t seed,
                         const std::string& family = "file") const {
        validate_demands(p_, store, demands);
        SimulationReport rep;
        rep.family = family;
        rep.K = p_.K();
        rep.F = p_.F();
        rep.Z = p_.Z();
        rep.S = p_.S();
        rep.z_prime = 0;
        rep.memory_ratio = {p_.Z(), p_.F()};
        rep.rate = {p_.S(), p_.F()};
        rep.transmissions = p_.S();
        rep.bytes_on_link = p_.S() * b_ * 2;
        rep.per_user_cache_packets = p_.Z() * store.file_count;
        rep.seed = seed;

        // delivery
        std::vector<std::vector<gf::FieldSymbol>> payloads(p_.S());
        for (std::int32_t s = 0; s < p_.S(); ++s) {
            auto& pl = payloads[s];
            pl.assign(b_, 0);
            for (const auto& [r, c] : by_value_[s]) {
                const auto pkt = store.packet(demands[c], r);
                for (int i = 0; i < b_; ++i) pl[i] ^= pkt[i];
            }
        }

        // per-user recovery of every non-cached packet
        bool all_ok = true;
        std::vector<gf::FieldSymbol> packet(b_);
        for (std::int64_t user = 0; user < p_.K(); ++user) {
            bool good = true;
            for (const auto& [row, s] : integer_cells_[user]) {
                packet.assign(payloads[s].begin(), payloads[s].end());
                for (const auto& [r2, c2] : by_value_[s]) {
                    if (r2 == row && c2 == user) continue;
                    if (p_.at(r2, user) != kStar) {
                        rep.failures.push_back({user, s, r2,
                                                "interfering packet " + std::to_string(r2) +
                                                    " is not cached by user " + std::to_string(user)});
                        good = false;
                        break;
                    }
                    const auto pkt = store.packet(demands[c2], r2);
                    for (int i = 0; i < b_; ++i) packet[i] ^= pkt[i];
                }
                if (!good) break;
                const auto want = store.packet(demands[user], row);
                if (!std::equal(packet.begin(), packet.end(), want.begin())) {
                    rep.failures.push_back(
                        {user, s, row, "recovered packet differs from the original"});
                    good = false;
                    break;
                }
            }
            all_ok = all_ok && good;
        }
        rep.decode_ok = all_ok;
        return rep;
    }

private:
    PdaArray p_;
    int b_;
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> by_value_;
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> integer_cells_;  // (row, s)
};

// Full uncoded pipeline on freshly drawn payload bytes.
inline SimulationReport run_uncoded(const PdaArray& p, std::int64_t n_files, int symbols_per_packet,
                                    const DemandVector& demands, std::uint64_t seed,
                                    const std::string& family = "file") {
    const FileStore store = FileStore::random(n_files, p.F(), symbols_per_packet, seed);
    const Caches caches = place_uncoded(p, store);
    const auto payloads = deliver(p, store, demands);
    const DecodeResult dec = decode_all(p, store, caches, payloads, demands);

    SimulationReport rep;
    rep.family = family;
    rep.K = p.K();
    rep.F = p.F();
    rep.Z = p.Z();
    rep.S = p.S();
    rep.z_prime = 0;
    rep.memory_ratio = {p.Z(), p.F()};
    rep.rate = {static_cast<std::int64_t>(payloads.size()), p.F()};
    rep.transmissions = static_cast<std::int64_t>(payloads.size());
    rep.bytes_on_link = rep.transmissions * symbols_per_packet * 2;
    rep.per_user_cache_packets = p.Z() * n_files;
    rep.decode_ok = dec.all_ok();
    rep.seed = seed;
    rep.failures = dec.failures;
    return rep;
}

inline SimulationReport run_uncoded(const PdaArray& p, std::int64_t n_files, int symbols_per_packet,
                                    std::uint64_t seed, const std::string& family = "file") {
    return run_uncoded(p, n_files, symbols_per_packet, random_demands(p.K(), n_files, seed), seed,
                       family);
}

// Coded placement: files carry F-Z' information packets, MDS-encoded to F
// coded packets aligned with the array rows. Users cache coded packets only
// at useful stars; delivery is unchanged; every user gathers F-Z' distinct
// coded packets of its file and inverts the code.
class CodedPlacementSimulator {
public:
    CodedPlacementSimulator(const PdaArray& p, const UselessStarReport& useless, int symbols_per_packet)
        : p_(p), b_(symbols_per_packet), useless_(useless) {
        if (static_cast<std::int64_t>(useless.per_column.size()) != p.K())
            throw std::invalid_argument("coded placement: useless-star report does not match the array");
        z_prime_ = useless.z_prime;  // max when non-uniform, common value otherwise
        non_uniform_warning_ = !useless.uniform;
        k_info_ = p.F() - z_prime_;
        codec_.emplace(p.F(), k_info_);

        useless_mask_.assign(static_cast<std::size_t>(p.F()) * p.K(), 0);
        for (std::int64_t c = 0; c < p.K(); ++c)
            for (std::int32_t r : useless.useless_rows_per_column[c])
                useless_mask_[static_cast<std::int64_t>(r) * p.K() + c] = 1;

        by_value_ = p.positions_by_value();
        gather_rows_.assign(p.K(), {});
        operators_.assign(p.K(), {});
        for (std::int64_t user = 0; user < p.K(); ++user) {
            auto& rows = gather_rows_[user];
            for (std::int64_t r = 0; r < p.F(); ++r) {
                const bool star = p.at(r, user) == kStar;
                const bool useless_star = star && useless_mask_[r * p.K() + user];
                if (!useless_star) rows.push_back(r);  // useful star or integer cell
            }
            if (static_cast<std::int64_t>(rows.size()) < k_info_)
                throw std::logic_error("coded placement: user gathers fewer than F-Z' packets");
            if (useless.uniform && static_cast<std::int64_t>(rows.size()) != k_info_)
                throw std::logic_error("coded placement: uniform array must gather exactly F-Z'");
            rows.resize(k_info_);  // smallest k indices when non-uniform
            operators_[user] = codec_->decode_operator(rows);
        }
    }

    const MdsCodec& codec() const { return *codec_; }
    std::int64_t z_prime() const { return z_prime_; }
    std::int64_t info_packets() const { return k_info_; }

    // Encode an information store (F-Z' packets per file) to coded packets.
    FileStore encode_store(const FileStore& info) const {
        if (info.packets_per_file != k_info_ || info.symbols_per_packet != b_)
            throw std::invalid_argument("coded placement: store must hold F-Z' packets per file");
        FileStore coded;
        coded.file_count = info.file_count;
        coded.packets_per_file = p_.F();
        coded.symbols_per_packet = b_;
        coded.files.assign(info.file_count, {});
        std::vector<gf::FieldSymbol> column(k_info_);
        for (std::int64_t n = 0; n < info.file_count; ++n) {
            coded.files[n].assign(static_cast<std::size_t>(p_.F()) * b_, 0);
            for (int b = 0; b < b_; ++b) {
                for (std::int64_t i = 0; i < k_info_; ++i) column[i] = info.files[n][i * b_ + b];
                const auto code = codec_->encode(column);
                for (std::int64_t j = 0; j < p_.F(); ++j) coded.files[n][j * b_ + b] = code[j];
            }
        }
        return coded;
    }

    SimulationReport run(const FileStore& info, const DemandVector& demands, std::uint64_t seed,
                         const std::string& family = "file") const {
        const FileStore coded = encode_store(info);
        validate_demands(coded, demands);
        const auto payloads = deliver(p_, coded, demands);

        SimulationReport rep;
        rep.family = family;
        rep.K = p_.K();
        rep.F = p_.F();
        rep.Z = p_.Z();
        rep.S = p_.S();
        rep.z_prime = z_prime_;
        rep.memory_ratio = {p_.Z() - z_prime_, p_.F() - z_prime_};
        rep.rate = {static_cast<std::int64_t>(payloads.size()), p_.F() - z_prime_};
        rep.transmissions = static_cast<std::int64_t>(payloads.size());
        rep.bytes_on_link = rep.transmissions * b_ * 2;
        rep.per_user_cache_packets = (p_.Z() - z_prime_) * info.file_count;
        rep.seed = seed;
        if (non_uniform_warning_)
            rep.failures.push_back({-1, -1, -1, "warning: non-uniform useless-star counts; using the maximum"});

        std::vector<gf::FieldSymbol> packet(b_), gathered, info_out(k_info_);
        bool all_ok = true;
        for (std::int64_t user = 0; user < p_.K(); ++user) {
            gathered.assign(static_cast<std::size_t>(k_info_) * b_, 0);
            bool good = true;
            for (std::int64_t gi = 0; gi < k_info_ && good; ++gi) {
                const std::int64_t r = gather_rows_[user][gi];
                const std::int32_t s = p_.at(r, user);
                if (s == kStar) {
                    // useful star: the coded packet is cached
                    const auto pkt = coded.packet(demands[user], r);
                    std::copy(pkt.begin(), pkt.end(), gathered.begin() + gi * b_);
                    continue;
                }
                packet.assign(payloads[s].begin(), payloads[s].end());
                for (const auto& [r2, c2] : by_value_[s]) {
                    if (r2 == r && c2 == user) continue;
                    const bool star = p_.at(r2, user) == kStar;
                    const bool useful = star && !useless_mask_[static_cast<std::int64_t>(r2) * p_.K() + user];
                    if (!useful) {
                        rep.failures.push_back({user, s, r2,
                                                "interference row " + std::to_string(r2) +
                                                    " is not a cached (useful-star) packet"});
                        good = false;
                        break;
                    }
                    const auto pkt = coded.packet(demands[c2], r2);
                    for (int i = 0; i < b_; ++i) packet[i] ^= pkt[i];
                }
                if (good) std::copy(packet.begin(), packet.end(), gathered.begin() + gi * b_);
            }
            if (good) {
                // invert the code column by column and compare with the original
                const auto& op = operators_[user];
                for (int b = 0; b < b_ && good; ++b) {
                    for (std::int64_t i = 0; i < k_info_; ++i) {
                        gf::FieldSymbol acc = 0;
                        for (std::int64_t r = 0; r < k_info_; ++r)
                            acc ^= gf::mul(op[i * k_info_ + r], gathered[r * b_ + b]);
                        info_out[i] = acc;
                    }
                    for (std::int64_t i = 0; i < k_info_ && good; ++i)
                        if (info_out[i] != info.files[demands[user]][i * b_ + b]) {
                            rep.failures.push_back(
                                {user, -1, i, "decoded information packet differs from the original"});
                            good = false;
                        }
                }
            }
            all_ok = all_ok && good;
        }
        rep.decode_ok = all_ok;
        return rep;
    }

private:
    static void validate_demands(const FileStore& store, const DemandVector& d) {
        for (std::int32_t x : d)
            if (x < 0 || x >= store.file_count) throw std::invalid_argument("demand index out of range");
    }

    PdaArray p_;
    int b_;
    UselessStarReport useless_;
    std::int64_t z_prime_ = 0;
    std::int64_t k_info_ = 0;
    bool non_uniform_warning_ = false;
    std::optional<MdsCodec> codec_;
    std::vector<char> useless_mask_;
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> by_value_;
    std::vector<std::vector<std::int64_t>> gather_rows_;
    std::vector<std::vector<gf::FieldSymbol>> operators_;
};

inline SimulationReport run_coded_placement(const PdaArray& p, const UselessStarReport& useless,
                                            std::int64_t n_files, int symbols_per_packet,
                                            const DemandVector& demands, std::uint64_t seed,
                                            const std::string& family = "file") {
    CodedPlacementSimulator sim(p, useless, symbols_per_packet);
    const FileStore info =
        FileStore::random(n_files, sim.info_packets(), symbols_per_packet, seed);
    return sim.run(info, demands, seed, family);
}

}  // namespace arcpda
