#pragma once

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "arcpda/arcpda.hpp"

namespace testdata {

using arcpda::PdaArray;
using arcpda::Vertex;
using arcpda::kStar;

// The reference (4,4,2,4) array used throughout the delivery examples.
inline PdaArray example1_array() {
    const std::int32_t s = kStar;
    const std::vector<std::int32_t> cells = {
        0, s, s, 3,  //
        s, 1, 2, s,  //
        1, s, s, 2,  //
        s, 0, 3, s,  //
    };
    return PdaArray::from_cells(4, 4, 2, 4, cells);
}

struct ListedClass {
    Vertex e;
    std::vector<int> t;
    std::vector<std::pair<Vertex, Vertex>> arcs;  // (tail, head) coordinate pairs
};

// The ten arc classes of the two-block example (radices 2:2,3:1, distance 1),
// keyed by difference vector and head restriction.
inline std::vector<ListedClass> example4_classes() {
    auto A = [](std::initializer_list<std::pair<Vertex, Vertex>> arcs) {
        return std::vector<std::pair<Vertex, Vertex>>(arcs);
    };
    std::vector<ListedClass> out;
    out.push_back({{0, 1, 0}, {0}, A({
        {{0, 1, 0}, {0, 0, 0}}, {{0, 1, 1}, {0, 0, 1}}, {{0, 1, 2}, {0, 0, 2}},
        {{1, 1, 0}, {1, 0, 0}}, {{1, 1, 1}, {1, 0, 1}}, {{1, 1, 2}, {1, 0, 2}},
    })});
    out.push_back({{0, 1, 0}, {1}, A({
        {{0, 0, 0}, {0, 1, 0}}, {{0, 0, 1}, {0, 1, 1}}, {{0, 0, 2}, {0, 1, 2}},
        {{1, 0, 0}, {1, 1, 0}}, {{1, 0, 1}, {1, 1, 1}}, {{1, 0, 2}, {1, 1, 2}},
    })});
    out.push_back({{0, 0, 1}, {0}, A({
        {{0, 0, 1}, {0, 0, 0}}, {{1, 0, 1}, {1, 0, 0}}, {{0, 1, 1}, {0, 1, 0}},
        {{1, 1, 1}, {1, 1, 0}},
    })});
    out.push_back({{0, 0, 1}, {1}, A({
        {{0, 0, 2}, {0, 0, 1}}, {{1, 0, 2}, {1, 0, 1}}, {{0, 1, 2}, {0, 1, 1}},
        {{1, 1, 2}, {1, 1, 1}},
    })});
    out.push_back({{0, 0, 1}, {2}, A({
        {{0, 0, 0}, {0, 0, 2}}, {{1, 0, 0}, {1, 0, 2}}, {{0, 1, 0}, {0, 1, 2}},
        {{1, 1, 0}, {1, 1, 2}},
    })});
    out.push_back({{0, 0, 2}, {0}, A({
        {{0, 0, 2}, {0, 0, 0}}, {{1, 0, 2}, {1, 0, 0}}, {{0, 1, 2}, {0, 1, 0}},
        {{1, 1, 2}, {1, 1, 0}},
    })});
    out.push_back({{0, 0, 2}, {1}, A({
        {{0, 0, 0}, {0, 0, 1}}, {{1, 0, 0}, {1, 0, 1}}, {{0, 1, 0}, {0, 1, 1}},
        {{1, 1, 0}, {1, 1, 1}},
    })});
    out.push_back({{0, 0, 2}, {2}, A({
        {{0, 0, 1}, {0, 0, 2}}, {{1, 0, 1}, {1, 0, 2}}, {{0, 1, 1}, {0, 1, 2}},
        {{1, 1, 1}, {1, 1, 2}},
    })});
    out.push_back({{1, 0, 0}, {0}, A({
        {{1, 0, 0}, {0, 0, 0}}, {{1, 1, 0}, {0, 1, 0}}, {{1, 0, 1}, {0, 0, 1}},
        {{1, 1, 1}, {0, 1, 1}}, {{1, 0, 2}, {0, 0, 2}}, {{1, 1, 2}, {0, 1, 2}},
    })});
    out.push_back({{1, 0, 0}, {1}, A({
        {{0, 0, 0}, {1, 0, 0}}, {{0, 1, 0}, {1, 1, 0}}, {{0, 0, 1}, {1, 0, 1}},
        {{0, 1, 1}, {1, 1, 1}}, {{0, 0, 2}, {1, 0, 2}}, {{0, 1, 2}, {1, 1, 2}},
    })});
    return out;
}

// Arc set of a color class as a set of index pairs.
inline std::set<std::pair<int, int>> class_arc_set(const arcpda::Digraph& d,
                                                   const arcpda::ArcColoring& c, int color) {
    std::set<std::pair<int, int>> out;
    for (std::int64_t i = 0; i < d.arc_count(); ++i)
        if (c.color_of_arc[i] == color) out.insert(d.arcs()[i]);
    return out;
}

}  // namespace testdata
