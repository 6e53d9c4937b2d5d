#pragma once

#include "sturm/sturm.hpp"

#include <map>
#include <string>
#include <vector>

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(STURM_FIXTURE_DIR) + "/" + name; }

// Octahedral 3-ball in its figure labels: equilibria listed along x = 0 and x = 1.
inline const std::vector<int> octa_h0 = {1,  10, 20, 9,  4,  13, 24, 17, 6,  18, 5, 14, 25, 15,
                                         22, 16, 23, 12, 19, 27, 21, 7,  26, 8,  3, 11, 2};
inline const std::vector<int> octa_h1 = {1,  8,  19, 9,  4,  12, 23, 17, 6,  16, 3,  11, 22, 15,
                                         25, 18, 24, 13, 20, 27, 26, 7,  21, 10, 5,  14, 2};
inline const std::vector<int> octa_sigma = {1,  24, 19, 4,  5,  18, 17, 8,  9,  16, 25, 26, 15, 14,
                                            13, 10, 7,  6,  3,  20, 23, 22, 21, 2,  11, 12, 27};

inline sturm::Permutation octahedron() { return sturm::Permutation(octa_sigma); }

// Figure label of the equilibrium at axis position a.
inline int figure_label(int a) { return octa_h1[a - 1]; }

inline int axis_position(int figure) {
    for (int a = 1; a <= static_cast<int>(octa_h1.size()); ++a)
        if (octa_h1[a - 1] == figure)
            return a;
    return 0;
}

inline std::map<int, int> figure_labels() {
    std::map<int, int> m;
    for (int a = 1; a <= static_cast<int>(octa_h1.size()); ++a)
        m[a] = octa_h1[a - 1];
    return m;
}

// Morse indices of the octahedron by figure label.
inline int octa_morse(int figure) {
    if (figure <= 6)
        return 0;
    if (figure <= 18)
        return 1;
    if (figure <= 26)
        return 2;
    return 3;
}

inline sturm::CellComplex octahedron_complex() { return sturm::load_complex(path("octahedron.json")); }

// Single face bounded by two edges from N to S.
inline sturm::CellComplex bigon() {
    return sturm::complex_from_json(sturm::json::parse(R"({
        "cells": [{"id": 1, "dim": 0}, {"id": 2, "dim": 0}, {"id": 3, "dim": 1},
                  {"id": 4, "dim": 1}, {"id": 5, "dim": 2}],
        "edges": [{"id": 3, "tail": 1, "head": 2}, {"id": 4, "tail": 1, "head": 2}],
        "faces": [{"id": 5, "cycle": [1, 3, 2, 4]}]
    })"));
}

// Single face bounded by four edges, N -> a -> S and N -> b -> S.
inline sturm::CellComplex square() {
    return sturm::complex_from_json(sturm::json::parse(R"({
        "cells": [{"id": 1, "dim": 0}, {"id": 2, "dim": 0}, {"id": 3, "dim": 0}, {"id": 4, "dim": 0},
                  {"id": 5, "dim": 1}, {"id": 6, "dim": 1}, {"id": 7, "dim": 1}, {"id": 8, "dim": 1},
                  {"id": 9, "dim": 2}],
        "edges": [{"id": 5, "tail": 1, "head": 3}, {"id": 6, "tail": 3, "head": 2},
                  {"id": 7, "tail": 1, "head": 4}, {"id": 8, "tail": 4, "head": 2}],
        "faces": [{"id": 9, "cycle": [1, 5, 3, 6, 2, 8, 4, 7]}]
    })"));
}

// Template pair whose hemisphere swap is not a trivial equivalence.
inline const std::vector<int> swap_a = {1, 12, 3, 4, 11, 6, 7, 10, 9, 8, 5, 2, 13};
inline const std::vector<int> swap_b = {1, 12, 9, 4, 5, 8, 7, 6, 3, 10, 11, 2, 13};

inline const std::vector<std::vector<int>> templates9 = {
    {1, 6, 7, 8, 3, 4, 5, 2, 9}, {1, 8, 3, 4, 7, 6, 5, 2, 9}, {1, 8, 5, 4, 3, 6, 7, 2, 9}, {1, 8, 5, 6, 7, 2, 3, 4, 9}};

} // namespace fixtures
