#pragma once

#include "sturm/cell_complex.hpp"

#include <array>
#include <vector>

namespace sturm {

struct PathPair {
    std::vector<int> h0;
    std::vector<int> h1;
    Permutation sigma;
};

// Hamiltonian cell orders from north to south obeying the traversal rules,
// per iota; at most `limit` solutions each.
std::array<std::vector<std::vector<int>>, 2> design_paths(const SignedTemplate& t, std::size_t limit = 2);

// Throws NoPath, MultiplePaths.
PathPair zs_pair(const SignedTemplate& t);
PathPair zs_pair(const CellComplex& planar);
// ZS-pair with the roles of h0 and h1 exchanged.
PathPair sz_pair(const SignedTemplate& t);
PathPair sz_pair(const CellComplex& planar);

// Throws NoPath, MultiplePaths, TemplateCheckFailed.
PathPair szs_pair(const SignedTemplate& t);
PathPair szs_pair(const CellComplex& c, const Decoration& d);

bool roundtrip(const Permutation& p);
bool planar_roundtrip(const Permutation& p);

} // namespace sturm
