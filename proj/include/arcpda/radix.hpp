#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcpda {

// A vertex is its coordinate vector, block-aligned.
using Vertex = std::vector<int>;

struct RadixBlock {
    int radix;   // digit alphabet size, >= 2
    int length;  // number of digits in this block, >= 1
};

// Mixed-radix coordinate system: a sequence of blocks, each holding `length`
// digits of the same radix. Radices are pairwise distinct across blocks.
// Canonical vertex numbering is positional with block 0 most significant and
// digits within a block most-significant-first.
class RadixSpec {
public:
    static RadixSpec make(std::vector<RadixBlock> blocks) {
        if (blocks.empty()) throw std::invalid_argument("RadixSpec: needs at least one block");
        RadixSpec s;
        s.blocks_ = std::move(blocks);
        for (const auto& b : s.blocks_) {
            if (b.radix < 2) throw std::invalid_argument("RadixSpec: radix must be >= 2");
            if (b.length < 1) throw std::invalid_argument("RadixSpec: block length must be >= 1");
        }
        for (std::size_t i = 0; i < s.blocks_.size(); ++i)
            for (std::size_t j = i + 1; j < s.blocks_.size(); ++j)
                if (s.blocks_[i].radix == s.blocks_[j].radix)
                    throw std::invalid_argument("RadixSpec: radices must be pairwise distinct");
        for (std::size_t b = 0; b < s.blocks_.size(); ++b)
            for (int i = 0; i < s.blocks_[b].length; ++i) {
                s.radix_of_pos_.push_back(s.blocks_[b].radix);
                s.block_of_pos_.push_back(static_cast<int>(b));
            }
        __int128 count = 1;
        for (int r : s.radix_of_pos_) {
            count *= r;
            if (count > (static_cast<__int128>(1) << 62))
                throw std::invalid_argument("RadixSpec: vertex count overflows");
        }
        s.vertex_count_ = static_cast<std::int64_t>(count);
        s.weight_.assign(s.radix_of_pos_.size(), 1);
        for (int p = static_cast<int>(s.weight_.size()) - 2; p >= 0; --p)
            s.weight_[p] = s.weight_[p + 1] * s.radix_of_pos_[p + 1];
        return s;
    }

    // Grammar: comma-separated radix:length pairs, e.g. "2:2,3:1".
    static RadixSpec parse(const std::string& text) {
        std::vector<RadixBlock> blocks;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string::npos) comma = text.size();
            const std::string item = text.substr(pos, comma - pos);
            const std::size_t colon = item.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("RadixSpec: expected radix:length, got '" + item + "'");
            try {
                blocks.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
            } catch (const std::exception&) {
                throw std::invalid_argument("RadixSpec: bad integer in '" + item + "'");
            }
            pos = comma + 1;
        }
        return make(std::move(blocks));
    }

    int block_count() const { return static_cast<int>(blocks_.size()); }
    int total_length() const { return static_cast<int>(radix_of_pos_.size()); }
    std::int64_t vertex_count() const { return vertex_count_; }
    int radix_at(int pos) const { return radix_of_pos_[pos]; }
    int block_of(int pos) const { return block_of_pos_[pos]; }
    std::int64_t weight_at(int pos) const { return weight_[pos]; }
    const std::vector<RadixBlock>& blocks() const { return blocks_; }

    std::string str() const {
        std::string out;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (b) out += ',';
            out += std::to_string(blocks_[b].radix) + ':' + std::to_string(blocks_[b].length);
        }
        return out;
    }

private:
    std::vector<RadixBlock> blocks_;
    std::vector<int> radix_of_pos_;
    std::vector<int> block_of_pos_;
    std::vector<std::int64_t> weight_;
    std::int64_t vertex_count_ = 0;
};

inline Vertex index_to_vertex(const RadixSpec& spec, std::int64_t index) {
    if (index < 0 || index >= spec.vertex_count())
        throw std::invalid_argument("index_to_vertex: index out of range");
    Vertex v(spec.total_length());
    for (int p = spec.total_length() - 1; p >= 0; --p) {
        v[p] = static_cast<int>(index % spec.radix_at(p));
        index /= spec.radix_at(p);
    }
    return v;
}

inline std::int64_t vertex_to_index(const RadixSpec& spec, const Vertex& v) {
    if (static_cast<int>(v.size()) != spec.total_length())
        throw std::invalid_argument("vertex_to_index: length mismatch");
    std::int64_t idx = 0;
    for (int p = 0; p < spec.total_length(); ++p) {
        if (v[p] < 0 || v[p] >= spec.radix_at(p))
            throw std::invalid_argument("vertex_to_index: digit out of range");
        idx += v[p] * spec.weight_at(p);
    }
    return idx;
}

inline int hamming_distance(const Vertex& x, const Vertex& y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] != y[i]);
    return d;
}

// Per-coordinate (x - y) mod p, p taken from the coordinate's block.
inline Vertex block_subtract(const RadixSpec& spec, const Vertex& x, const Vertex& y) {
    if (static_cast<int>(x.size()) != spec.total_length() || x.size() != y.size())
        throw std::invalid_argument("block_subtract: spec mismatch");
    Vertex e(x.size());
    for (int p = 0; p < spec.total_length(); ++p) {
        const int r = spec.radix_at(p);
        e[p] = ((x[p] - y[p]) % r + r) % r;
    }
    return e;
}

// Positions carrying a nonzero residue, ascending.
inline std::vector<int> support(const Vertex& e) {
    std::vector<int> out;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace arcpda
