#include "sturm/invariants.hpp"

#include <algorithm>

namespace sturm {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }
int alt(int j) { return (j % 2 == 1) ? 1 : -1; }

// Unsigned zero numbers by the recursion along the curve of p, with the
// diagonal step anchored at the base signs (-1)^(k+1) upward and (-1)^k downward.
std::vector<std::vector<int>> curve_recursion(const Permutation& p, const MorseVector& i) {
    const int n = p.size();
    std::vector<std::vector<int>> z(n + 1, std::vector<int>(n + 1, 0));
    for (int k = 1; k <= n; ++k) {
        const int w = p.inv(k);
        const int base = i[w - 1];
        z[w][w] = base;
        int cur = base;
        for (int j = k; j < n; ++j) {
            int a = sgn(p.inv(j + 1) - w);
            int b = (j == k) ? alt(k) : sgn(p.inv(j) - w);
            cur += alt(j) * (a - b) / 2;
            z[p.inv(j + 1)][w] = cur;
        }
        cur = base;
        for (int j = k - 1; j >= 1; --j) {
            int a = (j + 1 == k) ? -alt(k) : sgn(p.inv(j + 1) - w);
            int b = sgn(p.inv(j) - w);
            cur -= alt(j) * (a - b) / 2;
            z[p.inv(j)][w] = cur;
        }
    }
    return z;
}

ZeroMatrix assemble(const Permutation& p, const MorseVector& i, const std::vector<std::vector<int>>& z,
                    const std::vector<int>& label_map) {
    const int n = p.size();
    ZeroMatrix zm(n, i);
    for (int v = 1; v <= n; ++v)
        for (int w = 1; w <= n; ++w)
            zm.set(v, w, z[label_map[v]][label_map[w]], sgn(p(w) - p(v)));
    return zm;
}

} // namespace

ZeroMatrix::ZeroMatrix(int n, MorseVector morse)
    : n_(n), z_(static_cast<std::size_t>(n) * n, 0), s_(static_cast<std::size_t>(n) * n, 0), morse_(std::move(morse)) {}

ZeroMatrix zero_numbers(const Permutation& p) {
    require_sturm(p);
    auto i = morse_numbers(p);
    auto z = curve_recursion(p, i);
    std::vector<int> id(p.size() + 1);
    for (int v = 0; v <= p.size(); ++v)
        id[v] = v;
    return assemble(p, i, z, id);
}

ZeroMatrix zero_numbers_h1(const Permutation& p) {
    require_sturm(p);
    auto i = morse_numbers(p);
    // Reversing x swaps h0 and h1: label v of p becomes label p(v) of p^-1.
    Permutation q = p.inverse();
    MorseVector iq(p.size());
    for (int v = 1; v <= p.size(); ++v)
        iq[p(v) - 1] = i[v - 1];
    auto z = curve_recursion(q, iq);
    std::vector<int> map(p.size() + 1, 0);
    for (int v = 1; v <= p.size(); ++v)
        map[v] = p(v);
    return assemble(p, i, z, map);
}

bool k_adjacent(const Permutation& p, const ZeroMatrix& zm, int v1, int v2, int k) {
    const int s = sgn(p(v2) - p(v1));
    const int lo = std::min(p(v1), p(v2)), hi = std::max(p(v1), p(v2));
    for (int m = lo + 1; m < hi; ++m) {
        int w = p.inv(m);
        if (zm.z(v1, w) == k && zm.z(w, v2) == k && zm.sign(v1, w) == s && zm.sign(w, v2) == s)
            return false;
    }
    return true;
}

bool k_adjacent_h1(const Permutation&, const ZeroMatrix& zm, int v1, int v2, int k) {
    const int s = sgn(v2 - v1);
    const int lo = std::min(v1, v2), hi = std::max(v1, v2);
    for (int w = lo + 1; w < hi; ++w) {
        // Signs at x = 1 follow the axis order; z is symmetric in x.
        bool same = sgn(w - v1) == s && sgn(v2 - w) == s;
        if (same && zm.z(v1, w) == k && zm.z(w, v2) == k)
            return false;
    }
    return true;
}

std::vector<int> ConnectionGraph::targets(int v) const {
    std::vector<int> out;
    for (auto it = hetero.lower_bound({v, 0}); it != hetero.end() && it->first == v; ++it)
        out.push_back(it->second);
    return out;
}

static ConnectionGraph build_graph(const Permutation& p, const ZeroMatrix& zm,
                                   bool (*adj)(const Permutation&, const ZeroMatrix&, int, int, int)) {
    ConnectionGraph cg;
    const int n = p.size();
    for (int v = 1; v <= n; ++v)
        for (int w = 1; w <= n; ++w) {
            if (v == w || zm.morse(v) <= zm.morse(w))
                continue;
            if (!adj(p, zm, v, w, zm.z(v, w)))
                continue;
            cg.hetero.insert({v, w});
            cg.signs[{v, w}] = zm.sign(v, w);
            if (zm.morse(v) == zm.morse(w) + 1)
                cg.edges.insert({v, w});
        }
    return cg;
}

ConnectionGraph connection_graph(const Permutation& p, const ZeroMatrix& zm) { return build_graph(p, zm, k_adjacent); }

ConnectionGraph connection_graph_h1(const Permutation& p, const ZeroMatrix& zm) {
    return build_graph(p, zm, k_adjacent_h1);
}

const std::set<int>& SignedTemplate::part(int v, int j, char sign) const {
    static const std::set<int> empty;
    auto it = hemi.find(v);
    if (it == hemi.end() || j < 0 || j >= static_cast<int>(it->second.size()))
        return empty;
    return it->second[j][sign == '+' ? 1 : 0];
}

std::vector<int> SignedTemplate::cells() const {
    std::vector<int> out;
    for (auto& [c, d] : dim)
        out.push_back(c);
    return out;
}

HemisphereTemplate hemisphere_template(const Permutation& p, const ZeroMatrix& zm, const ConnectionGraph& cg) {
    HemisphereTemplate t;
    const int n = p.size();
    for (int v = 1; v <= n; ++v) {
        t.dim[v] = zm.morse(v);
        t.boundary[v];
        t.hemi[v].resize(zm.morse(v));
    }
    for (auto [v, w] : cg.hetero) {
        int j = zm.z(v, w);
        if (j >= zm.morse(v))
            throw ValidationFailed("z(" + std::to_string(w) + "-" + std::to_string(v) + ") = " + std::to_string(j) +
                                   " is not below i(" + std::to_string(v) + ")");
        t.hemi[v][j][zm.sign(v, w) > 0 ? 1 : 0].insert(w);
    }
    for (auto [v, w] : cg.edges)
        t.boundary[v].insert(w);
    t.north = p.inv(1);
    t.south = p.inv(n);
    return t;
}

Analysis analyze(const Permutation& p) {
    auto zm = zero_numbers(p);
    auto cg = connection_graph(p, zm);
    auto ht = hemisphere_template(p, zm, cg);
    return {p, std::move(zm), std::move(cg), std::move(ht)};
}

std::optional<int> cascade_target(const SignedTemplate& t, int v, std::string_view s) {
    auto dit = t.dim.find(v);
    if (dit == t.dim.end() || static_cast<int>(s.size()) != dit->second || s.empty())
        return std::nullopt;
    auto dim_of = [&](int u) {
        auto it = t.dim.find(u);
        return it == t.dim.end() ? -1 : it->second;
    };
    auto reaches = [&](auto&& self, int u, int level) -> bool {
        if (dim_of(u) != level || !t.part(v, level, s[level]).count(u))
            return false;
        if (level == 0)
            return true;
        auto bit = t.boundary.find(u);
        if (bit == t.boundary.end())
            return false;
        for (int x : bit->second)
            if (self(self, x, level - 1))
                return true;
        return false;
    };
    const int top = static_cast<int>(s.size()) - 1;
    std::vector<int> found;
    for (int u : t.part(v, top, s[top]))
        if (reaches(reaches, u, top))
            found.push_back(u);
    if (found.size() > 1)
        throw NonUnique("cascade " + std::string(s) + " from " + std::to_string(v) + " has " +
                        std::to_string(found.size()) + " targets");
    if (found.empty())
        return std::nullopt;
    return found.front();
}

TraversalRule traversal_rule(int dim, int iota) {
    switch (dim) {
    case 1: return {"-", "+"};
    case 2: return iota == 0 ? TraversalRule{"+-", "-+"} : TraversalRule{"++", "--"};
    case 3: return iota == 0 ? TraversalRule{"-+-", "+-+"} : TraversalRule{"---", "+++"};
    default: return {"", ""};
    }
}

TraversalReport check_traversal_table(const Permutation& p, const HemisphereTemplate& ht) {
    TraversalReport rep;
    const int n = p.size();
    for (int iota = 0; iota <= 1; ++iota) {
        std::vector<int> order = iota == 0 ? p.h0() : p.h1();
        for (int m = 0; m < n; ++m) {
            const int v = order[m];
            const int d = ht.dim.at(v);
            if (d < 1 || d > 3)
                continue;
            auto rule = traversal_rule(d, iota);
            for (int side = 0; side < 2; ++side) {
                int nb_pos = side == 0 ? m - 1 : m + 1;
                if (nb_pos < 0 || nb_pos >= n)
                    continue;
                int nb = order[nb_pos];
                if (ht.dim.at(nb) > d)
                    continue;
                ++rep.checked;
                auto expected = cascade_target(ht, v, side == 0 ? rule.before : rule.after);
                if (!expected || *expected != nb)
                    rep.violations.push_back({v, iota, side == 0, expected, nb});
            }
        }
    }
    return rep;
}

} // namespace sturm
