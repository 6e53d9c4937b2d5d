#pragma once

// Brute-force reference implementations that share no code with the library.
// They work on plain vectors.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

inline int sgn(int x) { return (x > 0) - (x < 0); }

// s[j-1] = sigma(j).
using Perm = std::vector<int>;

inline Perm inverse(const Perm& s) {
    Perm inv(s.size());
    for (std::size_t j = 0; j < s.size(); ++j)
        inv[s[j] - 1] = static_cast<int>(j) + 1;
    return inv;
}

// Axis positions of the crossings in the order the curve visits them.
inline std::vector<int> curve_positions(const Perm& s) { return inverse(s); }

// Two chords on the same side cross when exactly one endpoint of one lies strictly inside the other.
inline bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
    auto inside = [](int x, std::pair<int, int> c) { return std::min(c.first, c.second) < x && x < std::max(c.first, c.second); };
    int count = inside(b.first, a) + inside(b.second, a);
    return count == 1;
}

inline bool is_meander(const Perm& s) {
    auto pos = curve_positions(s);
    std::vector<std::pair<int, int>> above, below;
    for (std::size_t k = 0; k + 1 < pos.size(); ++k)
        (k % 2 == 0 ? above : below).push_back({pos[k], pos[k + 1]});
    for (auto* side : {&above, &below})
        for (std::size_t a = 0; a < side->size(); ++a)
            for (std::size_t b = 0; b < side->size(); ++b)
                if (a != b && chords_cross((*side)[a], (*side)[b]))
                    return false;
    return true;
}

// Morse numbers indexed by axis position, accumulated along the curve.
inline std::vector<int> morse_along_curve(const Perm& s) {
    const int n = static_cast<int>(s.size());
    auto pos = curve_positions(s);
    std::vector<int> m(n, 0);
    int value = 0;
    for (int k = 1; k < n; ++k) {
        int step = (k % 2 == 1 ? 1 : -1) * sgn(pos[k] - pos[k - 1]);
        value += step;
        m[pos[k] - 1] = value;
    }
    return m;
}

// Morse numbers indexed by axis position, accumulated along the axis.
inline std::vector<int> morse_along_axis(const Perm& s) {
    const int n = static_cast<int>(s.size());
    std::vector<int> m(n, 0);
    for (int j = 1; j < n; ++j)
        m[j] = m[j - 1] + (j % 2 == 1 ? 1 : -1) * sgn(s[j] - s[j - 1]);
    return m;
}

inline bool is_sturm(const Perm& s) {
    const int n = static_cast<int>(s.size());
    if (n % 2 == 0 || s.front() != 1 || s.back() != n)
        return false;
    if (!is_meander(s))
        return false;
    auto m = morse_along_curve(s);
    if (m.back() != 0)
        return false;
    return std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; });
}

// Every Sturm permutation of size n by scanning the whole symmetric group.
inline std::vector<Perm> all_sturm(int n) {
    Perm s(n);
    std::iota(s.begin(), s.end(), 1);
    std::vector<Perm> out;
    do {
        if (is_sturm(s))
            out.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

// Closed-form zero number z(u_b - u_a) for axis positions a < b.
inline int zero_number(const Perm& s, int a, int b) {
    if (a > b)
        std::swap(a, b);
    auto m = morse_along_axis(s);
    if (a == b)
        return m[a - 1];
    auto alt = [](int l) { return l % 2 == 0 ? 1 : -1; };
    int twice = 2 * m[a - 1] + alt(b) * sgn(s[b - 1] - s[a - 1]) - 1;
    for (int l = a + 1; l < b; ++l)
        twice += 2 * alt(l) * sgn(s[l - 1] - s[a - 1]);
    return twice / 2;
}

// Sign of u_b - u_a at the left boundary, read from the curve order.
inline int zero_sign(const Perm& s, int a, int b) { return sgn(s[b - 1] - s[a - 1]); }

} // namespace oracle
