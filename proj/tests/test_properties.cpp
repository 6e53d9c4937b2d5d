#include "fixtures.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace sturm;

namespace {

const std::vector<Permutation>& sturm_upto(int n) {
    static std::map<int, std::vector<Permutation>> cache;
    auto& v = cache[n];
    if (v.empty())
        for (int k = 1; k <= n; k += 2)
            for (auto& p : enumerate_sturm(k))
                v.push_back(p);
    return v;
}

int max_morse(const Permutation& p) {
    auto m = morse_numbers(p);
    return *std::max_element(m.begin(), m.end());
}

std::set<int> closure_cells(const SignedTemplate& t, int v, int j, int d) {
    std::set<int> out = t.hemi.at(v)[j][d];
    for (int k = 0; k < j; ++k)
        for (int e = 0; e < 2; ++e)
            out.insert(t.hemi.at(v)[k][e].begin(), t.hemi.at(v)[k][e].end());
    return out;
}

int traversal(const CellComplex& c, const CellComplex::Face& f, int e) {
    const auto* ed = c.edge(e);
    const auto& cy = f.cycle;
    for (std::size_t k = 1; k < cy.size(); k += 2)
        if (cy[k] == e) {
            int before = cy[k - 1], after = cy[(k + 1) % cy.size()];
            return ed->tail == before && ed->head == after ? 1 : -1;
        }
    return 0;
}

} // namespace

TEST_SUITE("properties") {

TEST_CASE("both Morse recursions agree on dissipative meanders") {
    for (const auto& p : sturm_upto(9)) {
        auto a = morse_numbers(p), b = morse_numbers_h0(p);
        CHECK(a == b);
        CHECK(a == oracle::morse_along_axis(p.one_line()));
        CHECK(a == oracle::morse_along_curve(p.one_line()));
    }
    for (int n : {3, 5, 7, 9}) {
        std::vector<int> s(n);
        std::iota(s.begin(), s.end(), 1);
        do {
            Permutation p(s);
            if (is_sturm(p).meander)
                CHECK(morse_numbers(p) == morse_numbers_h0(p));
        } while (std::next_permutation(s.begin() + 1, s.end() - 1));
    }
    CHECK(morse_numbers(Permutation({1, 2, 4, 3, 5})) != morse_numbers_h0(Permutation({1, 2, 4, 3, 5})));
}

TEST_CASE("arc counts and endpoint incidence") {
    for (const auto& p : sturm_upto(9)) {
        const int n = p.size();
        if (n == 1)
            continue;
        auto m = build_meander(p);
        CHECK(static_cast<int>(m.upper_arcs.size()) == (n - 1) / 2);
        CHECK(static_cast<int>(m.lower_arcs.size()) == (n - 1) / 2);
        std::vector<int> up(n + 1, 0), down(n + 1, 0);
        for (auto [a, b] : m.upper_arcs)
            ++up[a], ++up[b];
        for (auto [a, b] : m.lower_arcs)
            ++down[a], ++down[b];
        for (int x = 1; x <= n; ++x) {
            if (x == 1 || x == n)
                CHECK(up[x] + down[x] == 1);
            else
                CHECK((up[x] == 1 && down[x] == 1));
        }
    }
}

TEST_CASE("Sturm verdict is invariant under trivial equivalences") {
    for (int n : {1, 3, 5, 7}) {
        std::vector<int> s(n);
        std::iota(s.begin(), s.end(), 1);
        do {
            Permutation p(s);
            auto t = trivial_equivalences(p);
            bool v = is_sturm(p).sturm();
            CHECK(is_sturm(t.inverse).sturm() == v);
            CHECK(is_sturm(t.kappa_conjugate).sturm() == v);
            CHECK(is_sturm(t.both).sturm() == v);
            CHECK(oracle::is_sturm(s) == v);
        } while (std::next_permutation(s.begin(), s.end()));
    }
    std::vector<int> s{1, 2, 3, 4, 5, 6, 7, 8, 9};
    do {
        Permutation p(s);
        auto t = trivial_equivalences(p);
        bool v = is_sturm(p).sturm();
        CHECK(is_sturm(t.inverse).sturm() == v);
        CHECK(is_sturm(t.kappa_conjugate).sturm() == v);
        CHECK(is_sturm(t.both).sturm() == v);
    } while (std::next_permutation(s.begin() + 1, s.end() - 1));
}

TEST_CASE("alternating sum of Morse indices is one") {
    for (const auto& p : sturm_upto(11)) {
        int euler = 0;
        for (int i : morse_numbers(p))
            euler += i % 2 == 0 ? 1 : -1;
        CHECK(euler == 1);
    }
}

TEST_CASE("hemisphere template bounds") {
    for (const auto& p : sturm_upto(9)) {
        auto an = analyze(p);
        for (int v = 1; v <= p.size(); ++v) {
            const int iv = an.zm.morse(v);
            for (int j = 0; j < iv; ++j)
                for (int d = 0; d < 2; ++d) {
                    for (int w : an.ht.hemi.at(v)[j][d]) {
                        CHECK(an.zm.z(v, w) == j);
                        CHECK(an.zm.sign(v, w) == (d ? 1 : -1));
                    }
                    auto clos = closure_cells(an.ht, v, j, d);
                    for (int w : clos) {
                        CHECK(an.zm.morse(w) <= j);
                        CHECK(an.zm.z(v, w) <= j);
                    }
                    for (int a : clos)
                        for (int b : clos)
                            if (a < b && j > 0)
                                CHECK(an.zm.z(a, b) <= j - 1);
                }
        }
    }
}

TEST_CASE("nose retraction keeps survivor data") {
    for (const auto& p : sturm_upto(9)) {
        auto zm = zero_numbers(p);
        for (const auto& nose : find_noses(p)) {
            auto r = retract_nose(p, nose.v1, nose.v2);
            REQUIRE(is_sturm(r.sigma).sturm());
            auto zr = zero_numbers(r.sigma);
            for (auto [a, na] : r.relabel) {
                CHECK(zr.morse(na) == zm.morse(a));
                for (auto [b, nb] : r.relabel) {
                    CHECK(zr.z(na, nb) == zm.z(a, b));
                    CHECK(zr.sign(na, nb) == zm.sign(a, b));
                }
            }
        }
    }
}

TEST_CASE("planar faces are bounded by their connection targets") {
    for (const auto& p : sturm_upto(9)) {
        if (max_morse(p) > 2)
            continue;
        auto an = analyze(p);
        auto c = planar_complex_from_sigma(p);
        for (const auto& f : c.faces) {
            std::set<int> cycle(f.cycle.begin(), f.cycle.end());
            auto targets = an.cg.targets(f.id);
            CHECK(cycle == std::set<int>(targets.begin(), targets.end()));
        }
    }
}

TEST_CASE("templates are Sturm 3-balls") {
    int templates = 0;
    for (const auto& p : sturm_upto(11))
        if (is_three_meander_template(p).ok()) {
            ++templates;
            CHECK(is_sturm_3ball(p));
        }
    CHECK(templates == 21);
}

TEST_CASE("full serpents overlap their anti-polar serpents") {
    for (const auto& p : sturm_upto(11)) {
        auto s = polar_serpents(p);
        for (int iota = 0; iota < 2; ++iota)
            for (Pole pole : {Pole::North, Pole::South}) {
                const auto& x = s[serpent_index(iota, pole)];
                if (!x.full)
                    continue;
                const auto& y = s[serpent_index(1 - iota, pole == Pole::North ? Pole::South : Pole::North)];
                bool meet = std::any_of(x.members.begin(), x.members.end(), [&](int v) {
                    return std::find(y.members.begin(), y.members.end(), v) != y.members.end();
                });
                CHECK(meet);
            }
    }
}

TEST_CASE("barycenter neighbours are the extreme sources of the other order") {
    for (const auto& p : sturm_upto(11)) {
        if (!is_three_meander_template(p).ok())
            continue;
        auto m = morse_numbers(p);
        int o = static_cast<int>(std::find(m.begin(), m.end(), 3) - m.begin()) + 1;
        std::vector<int> order[2] = {p.h0(), p.h1()};
        for (int iota = 0; iota < 2; ++iota) {
            const auto& mine = order[iota];
            const auto& other = order[1 - iota];
            auto at = std::find(mine.begin(), mine.end(), o) - mine.begin();
            int before = mine[at - 1], after = mine[at + 1];
            int first = *std::find_if(other.begin(), other.end(), [&](int v) { return m[v - 1] == 2; });
            int last = *std::find_if(other.rbegin(), other.rend(), [&](int v) { return m[v - 1] == 2; });
            CHECK(before == first);
            CHECK(after == last);
        }
    }
}

TEST_CASE("reconstructed complexes carry the signed template") {
    for (const auto& p : sturm_upto(11)) {
        if (!is_sturm_3ball(p))
            continue;
        auto ball = complex_from_sigma(p);
        auto an = analyze(p);
        CHECK(ball.hemispheres.hemi == an.ht.hemi);
        CHECK(formal_hemispheres(ball.complex, ball.decoration).hemi == an.ht.hemi);
        for (const auto& f : ball.complex.faces) {
            const auto& h = an.ht.hemi.at(f.id);
            std::set<int> parts = h[1][0];
            parts.insert(h[1][1].begin(), h[1][1].end());
            parts.insert(h[0][0].begin(), h[0][0].end());
            parts.insert(h[0][1].begin(), h[0][1].end());
            CHECK(parts == std::set<int>(f.cycle.begin(), f.cycle.end()));
            CHECK(h[0][0].size() == 1);
            CHECK(h[0][1].size() == 1);
        }
    }
}

TEST_CASE("boundary sphere is consistently oriented") {
    for (const auto& p : sturm_upto(11)) {
        if (!is_sturm_3ball(p))
            continue;
        auto c = complex_from_sigma(p).complex;
        for (const auto& e : c.edges) {
            std::vector<int> dirs;
            for (const auto& f : c.faces)
                if (int t = traversal(c, f, e.id))
                    dirs.push_back(t);
            REQUIRE(dirs.size() == 2);
            CHECK(dirs[0] == -dirs[1]);
        }
    }
}

TEST_CASE("east and west scoops share exactly poles and meridians") {
    std::vector<Permutation> cases{fixtures::octahedron()};
    for (const auto& p : sturm_upto(11))
        if (is_three_meander_template(p).ok())
            cases.push_back(p);
    for (const auto& p : cases) {
        auto a = ball_anatomy(p);
        auto east = scoop(p, ScoopSide::East), west = scoop(p, ScoopSide::West);
        std::set<int> shared;
        for (auto [v, fresh] : east.relabel)
            if (west.relabel.count(v))
                shared.insert(v);
        std::set<int> expected;
        for (int j = 0; j < 2; ++j)
            for (int d = 0; d < 2; ++d)
                expected.insert(a.partition[j][d].begin(), a.partition[j][d].end());
        CHECK(shared == expected);
    }
}

TEST_CASE("scoops of every template match the closed hemispheres") {
    for (const auto& p : sturm_upto(11)) {
        if (!is_three_meander_template(p).ok())
            continue;
        auto ball = complex_from_sigma(p);
        auto east = closed_hemisphere(ball.complex, ball.decoration, true);
        auto west = closed_hemisphere(ball.complex, ball.decoration, false);
        CHECK(scoop(p, ScoopSide::West).sigma_scooped == zs_pair(east).sigma);
        CHECK(scoop(p, ScoopSide::East).sigma_scooped == sz_pair(west).sigma);
    }
}

TEST_CASE("3-ball and planar round trips") {
    for (const auto& p : sturm_upto(11)) {
        if (is_sturm_3ball(p))
            CHECK(roundtrip(p));
        if (max_morse(p) <= 2)
            CHECK(planar_roundtrip(p));
    }
}

} // TEST_SUITE
