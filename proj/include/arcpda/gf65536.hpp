#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace arcpda::gf {

// GF(2^16) under the primitive modulus x^16 + x^12 + x^3 + x + 1. Addition is
// bitwise xor, so xor-multicast payloads and field addition coincide.
using FieldSymbol = std::uint16_t;

inline constexpr std::uint32_t kOrder = 65536;
inline constexpr std::uint32_t kModulus = 0x1100B;
inline constexpr FieldSymbol kGenerator = 2;

struct Tables {
    std::vector<std::uint16_t> alog;  // alog[i] = g^i, doubled to skip the mod
    std::vector<std::int32_t> log;    // log[x] for x != 0

    Tables() : alog(2 * (kOrder - 1)), log(kOrder, -1) {
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < kOrder - 1; ++i) {
            if (log[x] != -1) throw std::logic_error("GF(2^16): modulus is not primitive");
            alog[i] = static_cast<std::uint16_t>(x);
            log[x] = static_cast<std::int32_t>(i);
            x <<= 1;
            if (x & kOrder) x ^= kModulus;
        }
        for (std::uint32_t i = kOrder - 1; i < alog.size(); ++i) alog[i] = alog[i - (kOrder - 1)];
    }
};

inline const Tables& tables() {
    static const Tables t;
    return t;
}

inline FieldSymbol add(FieldSymbol a, FieldSymbol b) { return a ^ b; }

inline FieldSymbol mul(FieldSymbol a, FieldSymbol b) {
    if (a == 0 || b == 0) return 0;
    const Tables& t = tables();
    return t.alog[t.log[a] + t.log[b]];
}

inline FieldSymbol inv(FieldSymbol a) {
    if (a == 0) throw std::invalid_argument("GF(2^16): zero has no inverse");
    const Tables& t = tables();
    return t.alog[(kOrder - 1) - t.log[a]];
}

inline FieldSymbol pow_generator(std::uint32_t e) { return tables().alog[e % (kOrder - 1)]; }

}  // namespace arcpda::gf
