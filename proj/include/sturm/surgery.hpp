#pragma once

#include "sturm/ball_template.hpp"

#include <map>
#include <set>
#include <vector>

namespace sturm {

enum class Side { Upper, Lower };

struct Nose {
    int v1 = 0;
    int v2 = 0;
    Side side = Side::Upper;
    bool operator==(const Nose& o) const { return v1 == o.v1 && v2 == o.v2 && side == o.side; }
};

// Non-polar noses with v1 < v2.
std::vector<Nose> find_noses(const Permutation& p);

// Survivor relabelling: old axis label -> new axis label.
using Relabel = std::map<int, int>;

struct RetractResult {
    Permutation sigma;
    Relabel relabel;
};

// Throws NotANose, PolarNose.
RetractResult retract_nose(const Permutation& p, int v1, int v2);

// Deletes labels from both boundary orders and relabels survivors order-preservingly.
RetractResult delete_labels(const Permutation& p, const std::set<int>& removed);

enum class ScoopSide { East, West };

struct ScoopResult {
    Permutation sigma_scooped;
    std::set<int> removed;
    Relabel relabel;
};

// Throws NotBallTemplate, ValidationFailed.
ScoopResult scoop(const Permutation& p, ScoopSide side);

// Searches for a sequence of nose retractions realizing the deletion; empty if none found.
std::vector<std::pair<int, int>> scoop_retraction_sequence(const Permutation& p, const std::set<int>& removed);

} // namespace sturm
