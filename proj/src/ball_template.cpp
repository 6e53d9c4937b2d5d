#include "sturm/ball_template.hpp"

#include <algorithm>
#include <sstream>

namespace sturm {

namespace {

std::string set_text(const std::set<int>& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : s) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<int> order_of(const Permutation& p, int iota) { return iota == 0 ? p.h0() : p.h1(); }

std::vector<int> positions(const std::vector<int>& order) {
    std::vector<int> pos(order.size() + 1, 0);
    for (std::size_t m = 0; m < order.size(); ++m)
        pos[order[m]] = static_cast<int>(m) + 1;
    return pos;
}

SerpentSet serpents_with(const Permutation& p, const MorseVector& i) {
    const int n = p.size();
    SerpentSet out;
    for (int iota = 0; iota <= 1; ++iota) {
        auto seq = order_of(p, iota);
        auto other = order_of(p, 1 - iota);
        Serpent& north = out[serpent_index(iota, Pole::North)];
        north.iota = iota;
        north.pole = Pole::North;
        int m = 0;
        while (m < n && i[seq[m] - 1] <= 1)
            north.members.push_back(seq[m++]);
        if (m < n)
            north.terminator = seq[m];
        Serpent& south = out[serpent_index(iota, Pole::South)];
        south.iota = iota;
        south.pole = Pole::South;
        m = n - 1;
        while (m >= 0 && i[seq[m] - 1] <= 1)
            --m;
        south.members.assign(seq.begin() + (m + 1), seq.end());
        if (m >= 0)
            south.terminator = seq[m];
        auto contains = [](const Serpent& s, int v) {
            return std::find(s.members.begin(), s.members.end(), v) != s.members.end();
        };
        if (n >= 2) {
            north.full = contains(north, other[n - 2]);
            south.full = contains(south, other[1]);
        } else {
            north.full = south.full = true;
        }
    }
    return out;
}

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

} // namespace

SerpentSet polar_serpents(const Permutation& p) {
    require_sturm(p);
    return serpents_with(p, morse_numbers(p));
}

BallAnatomy ball_anatomy(const Permutation& p) {
    require_sturm(p);
    const int n = p.size();
    auto i = morse_numbers(p);
    std::vector<int> tops;
    for (int v = 1; v <= n; ++v)
        if (i[v - 1] >= 3)
            tops.push_back(v);
    if (tops.empty())
        throw NoCenter(p.str() + " has no label of Morse number 3");
    if (tops.size() > 1 || i[tops[0] - 1] != 3)
        throw MultipleCenters(p.str() + " has " + std::to_string(tops.size()) + " labels of Morse number >= 3");

    BallAnatomy a;
    const int O = tops[0];
    a.center = O;
    for (int iota = 0; iota <= 1; ++iota) {
        auto seq = order_of(p, iota);
        auto pos = positions(seq);
        a.w[iota][0] = seq[pos[O] - 2];
        a.w[iota][1] = seq[pos[O]];
    }
    a.serpents = serpents_with(p, i);
    const int N = 1, S = n;

    // Serpent runs.
    auto& part = a.partition;
    part[0][0] = {N};
    part[0][1] = {S};
    auto run = [&](int iota, Pole pole) { return as_set(a.serpents[serpent_index(iota, pole)].members); };
    for (int delta = 0; delta <= 1; ++delta) {
        auto s1 = run(delta, Pole::North);
        auto s2 = run(1 - delta, Pole::South);
        s1.insert(s2.begin(), s2.end());
        s1.erase(N);
        s1.erase(S);
        part[1][delta] = s1;
    }
    for (int v = 1; v <= n; ++v) {
        if (v == O || v == N || v == S || part[1][0].count(v) || part[1][1].count(v))
            continue;
        part[2][v > O ? 1 : 0].insert(v);
    }

    std::ostringstream why;
    std::set<int> seen;
    std::size_t total = 0;
    for (auto& level : part)
        for (auto& s : level) {
            seen.insert(s.begin(), s.end());
            total += s.size();
        }
    if (total != static_cast<std::size_t>(n - 1) || seen.count(O))
        why << "serpent runs do not partition the labels other than O; ";

    // Window characterization on the axis.
    std::array<std::set<int>, 2> window;
    for (int v = a.w[0][0]; v <= a.w[1][0]; ++v)
        if (!part[1][1].count(v))
            window[0].insert(v);
    for (int v = a.w[1][1]; v <= a.w[0][1]; ++v)
        if (!part[1][0].count(v))
            window[1].insert(v);
    for (int d = 0; d <= 1; ++d)
        if (window[d] != part[2][d])
            why << "window E'2" << (d ? '+' : '-') << " = " << set_text(window[d]) << " vs " << set_text(part[2][d])
                << "; ";

    // Signed zero numbers relative to O.
    auto zm = zero_numbers(p);
    std::array<std::array<std::set<int>, 2>, 3> zc;
    for (int v = 1; v <= n; ++v) {
        if (v == O)
            continue;
        int j = zm.z(O, v);
        if (j > 2) {
            why << "z(" << v << "-O) = " << j << "; ";
            continue;
        }
        zc[j][zm.sign(O, v) > 0 ? 1 : 0].insert(v);
    }
    for (int j = 0; j < 3; ++j)
        for (int d = 0; d <= 1; ++d)
            if (zc[j][d] != part[j][d])
                why << "z-class " << j << (d ? '+' : '-') << " = " << set_text(zc[j][d]) << " vs "
                    << set_text(part[j][d]) << "; ";
    if (!why.str().empty())
        throw PartitionMismatch(p.str() + ": " + why.str());
    return a;
}

TemplateVerdict is_three_meander_template(const Permutation& p) {
    TemplateVerdict t;
    if (!is_sturm(p).sturm())
        return t;
    const int n = p.size();
    auto i = morse_numbers(p);
    std::vector<int> tops;
    for (int v = 1; v <= n; ++v)
        if (i[v - 1] >= 3)
            tops.push_back(v);
    t.single_center = tops.size() == 1 && i[tops[0] - 1] == 3;
    if (!t.single_center)
        return t;
    const int O = tops[0];
    auto sp = serpents_with(p, i);
    std::array<std::vector<int>, 2> seq{order_of(p, 0), order_of(p, 1)};
    std::array<std::vector<int>, 2> pos{positions(seq[0]), positions(seq[1])};

    auto meets = [&](int a, int b) {
        auto x = as_set(sp[a].members);
        for (int v : sp[b].members)
            if (x.count(v))
                return true;
        return false;
    };
    t.overlaps = meets(serpent_index(0, Pole::North), serpent_index(1, Pole::South)) &&
                 meets(serpent_index(1, Pole::North), serpent_index(0, Pole::South));

    t.polar_arcs = true;
    for (int iota = 0; iota <= 1; ++iota)
        for (Pole pole : {Pole::North, Pole::South}) {
            int e1 = pole == Pole::North ? seq[iota][0] : seq[iota][n - 2];
            int e2 = pole == Pole::North ? seq[iota][1] : seq[iota][n - 1];
            int a = pos[1 - iota][e1], b = pos[1 - iota][e2], o = pos[1 - iota][O];
            if (!(std::min(a, b) < o && o < std::max(a, b)))
                t.polar_arcs = false;
        }

    t.neighbours = t.neighbours_unordered = true;
    for (int iota = 0; iota <= 1; ++iota) {
        int wm = seq[iota][pos[iota][O] - 2], wp = seq[iota][pos[iota][O]];
        auto tn = sp[serpent_index(1 - iota, Pole::North)].terminator;
        auto ts = sp[serpent_index(1 - iota, Pole::South)].terminator;
        if (!tn || !ts) {
            t.neighbours = t.neighbours_unordered = false;
            continue;
        }
        if (!(*tn == wm && *ts == wp))
            t.neighbours = false;
        if (std::set<int>{*tn, *ts} != std::set<int>{wm, wp})
            t.neighbours_unordered = false;
    }
    return t;
}

std::set<int> closed_part(const BallAnatomy& a, int level, int delta) {
    std::set<int> out = a.partition[level][delta];
    for (int j = 0; j < level; ++j)
        for (int d = 0; d <= 1; ++d)
            out.insert(a.partition[j][d].begin(), a.partition[j][d].end());
    return out;
}

SignBoundReport check_sign_bounds(const Permutation& p, const BallAnatomy& a, const ZeroMatrix& zm) {
    SignBoundReport r;
    auto i = morse_numbers(p);
    const int O = a.center;
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        r.failures.push_back(msg);
    };
    for (int j = 0; j < 3; ++j)
        for (int d = 0; d <= 1; ++d) {
            const char sc = d ? '+' : '-';
            for (int v : a.partition[j][d]) {
                if (i[v - 1] > j)
                    fail(r.morse_bound, "i(" + std::to_string(v) + ") > " + std::to_string(j));
                if (zm.z(O, v) != j || (zm.sign(O, v) > 0) != (d == 1))
                    fail(r.exact_signs, "z(" + std::to_string(v) + "-O) != " + std::to_string(j) + sc);
            }
            auto clos = closed_part(a, j, d);
            for (int v : clos)
                if (zm.z(O, v) > j)
                    fail(r.closure_bound, "z(" + std::to_string(v) + "-O) > " + std::to_string(j));
            if (j == 0)
                continue;
            for (int v1 : clos)
                for (int v2 : clos)
                    if (v1 < v2 && zm.z(v1, v2) >= j)
                        fail(r.internal, "z(" + std::to_string(v1) + "-" + std::to_string(v2) +
                                             ") >= " + std::to_string(j) + " in closed E'" + std::to_string(j) + sc);
        }
    return r;
}

bool is_sturm_3ball(const Permutation& p) {
    if (!is_sturm(p).sturm())
        return false;
    auto i = morse_numbers(p);
    const int n = p.size();
    std::vector<int> tops;
    for (int v = 1; v <= n; ++v)
        if (i[v - 1] >= 3)
            tops.push_back(v);
    if (tops.size() != 1 || i[tops[0] - 1] != 3)
        return false;
    const int O = tops[0];
    auto zm = zero_numbers(p);
    for (int v = 1; v <= n; ++v)
        if (v != O && !k_adjacent(p, zm, O, v, zm.z(O, v)))
            return false;
    return true;
}

} // namespace sturm
