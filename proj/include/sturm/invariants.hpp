#pragma once

#include "sturm/meander.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sturm {

// Signed zero numbers for axis labels, plus the Morse vector.
class ZeroMatrix {
public:
    ZeroMatrix(int n, MorseVector morse);

    int size() const { return n_; }
    // Unsigned zero number z(w - v); symmetric.
    int z(int v, int w) const { return z_[idx(v, w)]; }
    // Sign subscript of z(w - v): sign(h0^-1(w) - h0^-1(v)), 0 on the diagonal.
    int sign(int v, int w) const { return s_[idx(v, w)]; }
    const MorseVector& morse() const { return morse_; }
    int morse(int v) const { return morse_[v - 1]; }

    void set(int v, int w, int z, int sign) {
        z_[idx(v, w)] = z;
        s_[idx(v, w)] = sign;
    }

    bool operator==(const ZeroMatrix& o) const { return n_ == o.n_ && z_ == o.z_ && s_ == o.s_ && morse_ == o.morse_; }

private:
    std::size_t idx(int v, int w) const { return static_cast<std::size_t>(v - 1) * n_ + (w - 1); }
    int n_;
    std::vector<int> z_;
    std::vector<int> s_;
    MorseVector morse_;
};

// Recursion along h0; throws NotSturm.
ZeroMatrix zero_numbers(const Permutation& p);
// The same matrix by the recursion along h1.
ZeroMatrix zero_numbers_h1(const Permutation& p);

// Blocking test between v1 and v2 in h0 order; the h1 variant uses the axis order.
bool k_adjacent(const Permutation& p, const ZeroMatrix& zm, int v1, int v2, int k);
bool k_adjacent_h1(const Permutation& p, const ZeroMatrix& zm, int v1, int v2, int k);

struct ConnectionGraph {
    std::set<std::pair<int, int>> hetero; // v ~> w
    std::set<std::pair<int, int>> edges;  // Morse gap exactly one
    std::map<std::pair<int, int>, int> signs;

    bool connects(int v, int w) const { return hetero.count({v, w}) != 0; }
    std::vector<int> targets(int v) const;
};

ConnectionGraph connection_graph(const Permutation& p, const ZeroMatrix& zm);
ConnectionGraph connection_graph_h1(const Permutation& p, const ZeroMatrix& zm);

// Signed cell hemispheres S[v][j][minus/plus], with cell dimensions and
// codimension-one boundaries. Built either from a permutation (the signed
// hemisphere template) or from a decorated cell complex (formal hemispheres).
struct SignedTemplate {
    using Halves = std::array<std::set<int>, 2>; // [0] = minus, [1] = plus
    std::map<int, int> dim;
    std::map<int, std::set<int>> boundary;
    std::map<int, std::vector<Halves>> hemi;
    int north = 0;
    int south = 0;

    const std::set<int>& part(int v, int j, char sign) const;
    std::vector<int> cells() const;
};

using HemisphereTemplate = SignedTemplate;

HemisphereTemplate hemisphere_template(const Permutation& p, const ZeroMatrix& zm, const ConnectionGraph& cg);

// Convenience bundle of the analysis chain for a Sturm permutation.
struct Analysis {
    Permutation sigma;
    ZeroMatrix zm;
    ConnectionGraph cg;
    HemisphereTemplate ht;
};

Analysis analyze(const Permutation& p);

// Target w(s) of the cascade started by v with sign sequence s ("-+-" etc.);
// s[j] is the sign at level j. Throws NonUnique.
std::optional<int> cascade_target(const SignedTemplate& t, int v, std::string_view s);

// Neighbour rules along h_iota for a cell of dimension 1..3.
struct TraversalRule {
    std::string before;
    std::string after;
};
TraversalRule traversal_rule(int dim, int iota);

struct TraversalViolation {
    int v;
    int iota;
    bool before; // predecessor side, otherwise successor side
    std::optional<int> expected;
    int actual;
};

struct TraversalReport {
    std::vector<TraversalViolation> violations;
    int checked = 0;
    bool ok() const { return violations.empty(); }
};

TraversalReport check_traversal_table(const Permutation& p, const HemisphereTemplate& ht);

} // namespace sturm
