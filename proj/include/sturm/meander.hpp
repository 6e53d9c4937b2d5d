#pragma once

#include "sturm/errors.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sturm {

// One-based permutation in one-line form: sigma(j) for j = 1..n.
// Axis positions double as equilibrium labels (h1 = id, h0 = sigma^-1).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int j) const { return map_[j - 1]; }
    int inv(int k) const { return inv_[k - 1]; }
    const std::vector<int>& one_line() const { return map_; }

    // h0 and h1 as label sequences along the curve and along the axis.
    std::vector<int> h0() const { return inv_; }
    std::vector<int> h1() const;

    Permutation inverse() const { return Permutation(inv_); }
    std::string str() const;

    bool operator==(const Permutation& o) const { return map_ == o.map_; }
    bool operator<(const Permutation& o) const { return map_ < o.map_; }

private:
    std::vector<int> map_;
    std::vector<int> inv_;
};

Permutation parse_permutation(std::string_view text);

// sigma = h0^-1 o h1 for two orders of the same label set.
Permutation permutation_from_orders(const std::vector<int>& h0, const std::vector<int>& h1);

struct Meander {
    std::vector<Arc> upper_arcs;
    std::vector<Arc> lower_arcs;
    std::vector<int> curve_order; // curve_order[k-1] = sigma^-1(k)
};

Meander build_meander(const Permutation& p);

// Morse numbers i[v-1] for axis labels v.
using MorseVector = std::vector<int>;

// Recursion along h1; throws NotDissipative.
MorseVector morse_numbers(const Permutation& p);
// Same numbers by recursion along h0; throws NotDissipative.
MorseVector morse_numbers_h0(const Permutation& p);

struct SturmVerdict {
    bool odd = false;
    bool dissipative = false;
    bool meander = false;
    bool morse = false;
    bool sturm() const { return odd && dissipative && meander && morse; }
};

SturmVerdict is_sturm(const Permutation& p);

// Throws NotSturm unless is_sturm(p).sturm().
void require_sturm(const Permutation& p);

constexpr int kDefaultMaxN = 11;

// All Sturm permutations of size n in lexicographic order.
std::vector<Permutation> enumerate_sturm(int n, int max_n = kDefaultMaxN, int jobs = 1);

struct TrivialEquivalences {
    Permutation inverse;
    Permutation kappa_conjugate;
    Permutation both;
};

TrivialEquivalences trivial_equivalences(const Permutation& p);

} // namespace sturm
