// Shared instances used across the test suites.

#pragma once

#include "splitmat/graph.hpp"
#include "splitmat/io.hpp"

namespace fixtures {

using namespace splitmat;

// U_{2,3}: one triangle.
inline BinaryMatroid triangle() {
    return BinaryMatroid({"a", "b", "c"}, GF2Matrix::from_strings({"101", "011"}));
}

// U_{3,4}: cycle matroid of the 4-cycle.
inline BinaryMatroid c4() {
    return BinaryMatroid({"e1", "e2", "e3", "e4"},
                         GF2Matrix::from_strings({"1001", "0101", "0011"}));
}

// Triangle with a doubled edge: c and d are parallel.
inline BinaryMatroid doubled_triangle() {
    return BinaryMatroid({"a", "b", "c", "d"}, GF2Matrix::from_strings({"1011", "0111"}));
}

// M(K4): three unit columns plus the three pairwise sums.
inline BinaryMatroid k4() {
    return BinaryMatroid({"e1", "e2", "e3", "e4", "e5", "e6"},
                         GF2Matrix::from_strings({"100110", "010101", "001011"}));
}

inline BinaryMatroid two_triangles() {
    return BinaryMatroid({"a", "b", "c", "d", "e", "f"},
                         GF2Matrix::from_strings({"101000", "011000", "000101", "000011"}));
}

inline BinaryMatroid three_triangles() {
    return BinaryMatroid(
        {"a", "b", "c", "d", "e", "f", "g", "h", "i"},
        GF2Matrix::from_strings({"101000000", "011000000", "000101000", "000011000",
                                 "000000101", "000000011"}));
}

inline MultiGraph triangle_graph() {
    return MultiGraph({{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}});
}

inline MultiGraph c4_graph() {
    return MultiGraph({{"e1", "1", "2"}, {"e2", "2", "3"}, {"e3", "3", "4"}, {"e4", "4", "1"}});
}

inline MultiGraph path2_graph() {
    return MultiGraph({{"p", "1", "2"}, {"q", "2", "3"}});
}

// Two triangles glued at the vertex v; d(v) = 4.
inline MultiGraph bowtie_graph() {
    return MultiGraph({{"p", "v", "1"},
                       {"q", "1", "2"},
                       {"s", "v", "2"},
                       {"t", "v", "3"},
                       {"u", "3", "4"},
                       {"w", "v", "4"}});
}

inline MultiGraph k4_graph() {
    return MultiGraph({{"e1", "1", "2"},
                       {"e2", "1", "3"},
                       {"e3", "1", "4"},
                       {"e4", "2", "3"},
                       {"e5", "2", "4"},
                       {"e6", "3", "4"}});
}

inline MultiGraph k5_graph() {
    std::vector<GraphEdge> edges;
    int t = 0;
    for (char u = '1'; u <= '5'; ++u)
        for (char v = static_cast<char>(u + 1); v <= '5'; ++v)
            edges.push_back({"e" + std::to_string(++t), std::string(1, u), std::string(1, v)});
    return MultiGraph(std::move(edges));
}

// Complete bipartite K_{4,4}: sides u1..u4 and w1..w4.
inline MultiGraph k44_graph() {
    std::vector<GraphEdge> edges;
    int t = 0;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            edges.push_back({"e" + std::to_string(++t), "u" + std::to_string(i), "w" + std::to_string(j)});
    return MultiGraph(std::move(edges));
}

// Circulant graph C_n(steps): vertices 0..n-1, i adjacent to i+s mod n for
// each step s; every step must be strictly below n/2 so each edge is
// generated once.
inline MultiGraph circulant_graph(int n, const std::vector<int>& steps) {
    std::vector<GraphEdge> edges;
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (const int s : steps)
            edges.push_back({"e" + std::to_string(++t), "v" + std::to_string(i),
                             "v" + std::to_string((i + s) % n)});
    return MultiGraph(std::move(edges));
}

inline std::vector<std::string> sorted_labels(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace fixtures
