#pragma once

#include "sturm/invariants.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sturm {

enum class Pole { North, South };

struct Serpent {
    int iota = 0;
    Pole pole = Pole::North;
    std::vector<int> members;      // in h_iota order
    std::optional<int> terminator; // first label after the run, if any
    bool full = false;
};

// Index by serpent_index(iota, pole).
using SerpentSet = std::array<Serpent, 4>;
inline int serpent_index(int iota, Pole pole) { return 2 * iota + (pole == Pole::South ? 1 : 0); }

SerpentSet polar_serpents(const Permutation& p);

struct BallAnatomy {
    int center = 0;
    // w[iota][0] = w^iota_-, w[iota][1] = w^iota_+
    std::array<std::array<int, 2>, 2> w{};
    SerpentSet serpents;
    // partition[j][0] = E'^j_-, partition[j][1] = E'^j_+
    std::array<std::array<std::set<int>, 2>, 3> partition;
};

// Throws NotSturm, NoCenter, MultipleCenters, PartitionMismatch.
BallAnatomy ball_anatomy(const Permutation& p);

struct TemplateVerdict {
    bool single_center = false;   // (i)
    bool overlaps = false;        // (ii)
    bool polar_arcs = false;      // (iii)
    bool neighbours = false;      // (iv)
    bool neighbours_unordered = false;
    bool ok() const { return single_center && overlaps && polar_arcs && neighbours; }
};

TemplateVerdict is_three_meander_template(const Permutation& p);

struct SignBoundReport {
    bool morse_bound = true;  // i(v) <= j on E'^j
    bool closure_bound = true; // z(v - O) <= j on closures
    bool exact_signs = true;  // z(v - O) = j_delta
    bool internal = true;     // z(v1 - v2) < j within closed one-signed sets
    std::vector<std::string> failures;
    bool ok() const { return morse_bound && closure_bound && exact_signs && internal; }
};

SignBoundReport check_sign_bounds(const Permutation& p, const BallAnatomy& anatomy, const ZeroMatrix& zm);

bool is_sturm_3ball(const Permutation& p);

// Closure of the signed part at `level`: that part together with every lower level of both signs.
std::set<int> closed_part(const BallAnatomy& a, int level, int delta);

} // namespace sturm
