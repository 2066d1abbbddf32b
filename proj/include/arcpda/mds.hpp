#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "arcpda/gf65536.hpp"

namespace arcpda {

// Systematic [F, k] erasure code in evaluation form over GF(2^16): a message
// defines the unique polynomial of degree < k through the first k evaluation
// points; the codeword is its value at all F points. Any k coded symbols
// recover the message. Evaluation points are 0 followed by consecutive powers
// of the field generator, so they are distinct for every F <= 65536.
class MdsCodec {
public:
    MdsCodec(std::int64_t total_symbols, std::int64_t info_symbols)
        : f_(total_symbols), k_(info_symbols) {
        if (k_ < 1 || f_ < k_ || f_ > static_cast<std::int64_t>(gf::kOrder))
            throw std::invalid_argument("MdsCodec: requires 1 <= k <= F <= 65536");
        points_.resize(f_);
        points_[0] = 0;
        for (std::int64_t j = 1; j < f_; ++j) points_[j] = gf::pow_generator(static_cast<std::uint32_t>(j - 1));
        build_generator();
    }

    std::int64_t total_symbols() const { return f_; }
    std::int64_t info_symbols() const { return k_; }
    const std::vector<gf::FieldSymbol>& evaluation_points() const { return points_; }

    // k x F, row-major; the first k columns are the identity.
    const std::vector<gf::FieldSymbol>& generator() const { return generator_; }
    gf::FieldSymbol generator_at(std::int64_t i, std::int64_t j) const { return generator_[i * f_ + j]; }

    std::vector<gf::FieldSymbol> encode(std::span<const gf::FieldSymbol> info) const {
        if (static_cast<std::int64_t>(info.size()) != k_)
            throw std::invalid_argument("mds_encode: expected k info symbols");
        std::vector<gf::FieldSymbol> out(f_, 0);
        for (std::int64_t i = 0; i < k_; ++i) out[i] = info[i];
        for (std::int64_t j = k_; j < f_; ++j) {
            gf::FieldSymbol acc = 0;
            for (std::int64_t i = 0; i < k_; ++i) acc ^= gf::mul(generator_[i * f_ + j], info[i]);
            out[j] = acc;
        }
        return out;
    }

    // Gauss-Jordan inverse of the k-column submatrix picked by `indices`;
    // row i of the result maps received values onto info symbol i.
    std::vector<gf::FieldSymbol> decode_operator(std::span<const std::int64_t> indices) const {
        if (static_cast<std::int64_t>(indices.size()) != k_)
            throw std::invalid_argument("mds_decode: expected exactly k symbol indices");
        std::vector<char> seen(f_, 0);
        for (std::int64_t j : indices) {
            if (j < 0 || j >= f_) throw std::invalid_argument("mds_decode: index out of range");
            if (seen[j]) throw std::invalid_argument("mds_decode: repeated index");
            seen[j] = 1;
        }
        // aug = [A | I], A[r][i] = G[i][indices[r]]
        const std::int64_t n = k_;
        std::vector<gf::FieldSymbol> aug(n * 2 * n, 0);
        for (std::int64_t r = 0; r < n; ++r) {
            for (std::int64_t i = 0; i < n; ++i) aug[r * 2 * n + i] = generator_[i * f_ + indices[r]];
            aug[r * 2 * n + n + r] = 1;
        }
        for (std::int64_t col = 0; col < n; ++col) {
            std::int64_t pivot = -1;
            for (std::int64_t r = col; r < n; ++r)
                if (aug[r * 2 * n + col] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) throw std::logic_error("mds_decode: singular submatrix");
            if (pivot != col)
                for (std::int64_t c = 0; c < 2 * n; ++c) std::swap(aug[pivot * 2 * n + c], aug[col * 2 * n + c]);
            const gf::FieldSymbol scale = gf::inv(aug[col * 2 * n + col]);
            for (std::int64_t c = 0; c < 2 * n; ++c)
                aug[col * 2 * n + c] = gf::mul(aug[col * 2 * n + c], scale);
            for (std::int64_t r = 0; r < n; ++r) {
                if (r == col) continue;
                const gf::FieldSymbol factor = aug[r * 2 * n + col];
                if (factor == 0) continue;
                for (std::int64_t c = 0; c < 2 * n; ++c)
                    aug[r * 2 * n + c] ^= gf::mul(factor, aug[col * 2 * n + c]);
            }
        }
        // m = A^{-1} v: operator row i is row i of A^{-1}
        std::vector<gf::FieldSymbol> op(n * n);
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t r = 0; r < n; ++r) op[i * n + r] = aug[i * 2 * n + n + r];
        return op;
    }

    std::vector<gf::FieldSymbol> decode(std::span<const std::int64_t> indices,
                                        std::span<const gf::FieldSymbol> values) const {
        if (values.size() != indices.size())
            throw std::invalid_argument("mds_decode: index/value length mismatch");
        const auto op = decode_operator(indices);
        std::vector<gf::FieldSymbol> info(k_, 0);
        for (std::int64_t i = 0; i < k_; ++i) {
            gf::FieldSymbol acc = 0;
            for (std::int64_t r = 0; r < k_; ++r) acc ^= gf::mul(op[i * k_ + r], values[r]);
            info[i] = acc;
        }
        return info;
    }

    bool submatrix_invertible(std::span<const std::int64_t> indices) const {
        try {
            decode_operator(indices);
            return true;
        } catch (const std::logic_error&) {
            return false;
        }
    }

private:
    void build_generator() {
        generator_.assign(static_cast<std::size_t>(k_) * f_, 0);
        for (std::int64_t i = 0; i < k_; ++i) generator_[i * f_ + i] = 1;
        if (f_ == k_) return;
        // denom_i = prod_{r != i} (p_i - p_r) over the first k points
        std::vector<gf::FieldSymbol> denom(k_, 1);
        for (std::int64_t i = 0; i < k_; ++i)
            for (std::int64_t r = 0; r < k_; ++r)
                if (r != i) denom[i] = gf::mul(denom[i], points_[i] ^ points_[r]);
        std::vector<gf::FieldSymbol> prefix(k_ + 1), suffix(k_ + 1);
        for (std::int64_t j = k_; j < f_; ++j) {
            const gf::FieldSymbol x = points_[j];
            prefix[0] = 1;
            for (std::int64_t r = 0; r < k_; ++r) prefix[r + 1] = gf::mul(prefix[r], x ^ points_[r]);
            suffix[k_] = 1;
            for (std::int64_t r = k_ - 1; r >= 0; --r) suffix[r] = gf::mul(suffix[r + 1], x ^ points_[r]);
            for (std::int64_t i = 0; i < k_; ++i) {
                const gf::FieldSymbol numer = gf::mul(prefix[i], suffix[i + 1]);
                generator_[i * f_ + j] = gf::mul(numer, gf::inv(denom[i]));
            }
        }
    }

    std::int64_t f_, k_;
    std::vector<gf::FieldSymbol> points_;
    std::vector<gf::FieldSymbol> generator_;
};

}  // namespace arcpda
