#include "sturm/cell_complex.hpp"

#include "sturm/ball_template.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace sturm {

int CellComplex::dim(int id) const {
    for (const auto& c : cells)
        if (c.id == id)
            return c.dim;
    return -1;
}

bool CellComplex::has(int id) const { return dim(id) >= 0; }

const CellComplex::Edge* CellComplex::edge(int id) const {
    for (const auto& e : edges)
        if (e.id == id)
            return &e;
    return nullptr;
}

const CellComplex::Face* CellComplex::face(int id) const {
    for (const auto& f : faces)
        if (f.id == id)
            return &f;
    return nullptr;
}

std::set<int> CellComplex::boundary(int id) const {
    if (const Edge* e = edge(id))
        return {e->tail, e->head};
    if (const Face* f = face(id)) {
        std::set<int> out;
        for (std::size_t k = 1; k < f->cycle.size(); k += 2)
            out.insert(f->cycle[k]);
        return out;
    }
    if (ball && ball->id == id)
        return {ball->faces.begin(), ball->faces.end()};
    return {};
}

std::set<int> CellComplex::ids() const {
    std::set<int> out;
    for (const auto& c : cells)
        out.insert(c.id);
    return out;
}

namespace {


// +1 if the face cycle runs along the edge from tail to head, -1 against it, 0 if absent.
int traversal(const CellComplex& c, const CellComplex::Face& f, int e) {
    const auto& cy = f.cycle;
    const std::size_t m = cy.size();
    for (std::size_t k = 1; k < m; k += 2) {
        if (cy[k] != e)
            continue;
        const CellComplex::Edge* ed = c.edge(e);
        int before = cy[k - 1], after = cy[(k + 1) % m];
        if (ed->tail == before && ed->head == after)
            return 1;
        if (ed->tail == after && ed->head == before)
            return -1;
    }
    return 0;
}

std::vector<int> faces_with_edge(const CellComplex& c, int e) {
    std::vector<int> out;
    for (const auto& f : c.faces)
        for (std::size_t k = 1; k < f.cycle.size(); k += 2)
            if (f.cycle[k] == e)
                out.push_back(f.id);
    return out;
}

struct Orientation {
    std::vector<int> sources;
    std::vector<int> sinks;
    bool acyclic = true;
};

Orientation orientation(const CellComplex& c) {
    Orientation o;
    std::map<int, int> indeg, outdeg;
    std::map<int, std::vector<int>> succ;
    for (const auto& cell : c.cells)
        if (cell.dim == 0)
            indeg[cell.id] = outdeg[cell.id] = 0;
    for (const auto& e : c.edges) {
        ++indeg[e.head];
        ++outdeg[e.tail];
        succ[e.tail].push_back(e.head);
    }
    for (auto [v, d] : indeg) {
        if (d == 0)
            o.sources.push_back(v);
        if (outdeg[v] == 0)
            o.sinks.push_back(v);
    }
    auto in = indeg;
    std::vector<int> ready = o.sources;
    std::size_t done = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++done;
        for (int w : succ[v])
            if (--in[w] == 0)
                ready.push_back(w);
    }
    o.acyclic = done == indeg.size();
    return o;
}

bool check_regular(const CellComplex& c, std::vector<std::string>& notes) {
    bool ok = true;
    auto note = [&](const std::string& s) {
        ok = false;
        notes.push_back(s);
    };
    std::set<int> seen;
    for (const auto& cell : c.cells) {
        if (!seen.insert(cell.id).second)
            note("duplicate cell id " + std::to_string(cell.id));
        if (cell.dim < 0 || cell.dim > 3)
            note("cell " + std::to_string(cell.id) + " has dimension " + std::to_string(cell.dim));
    }
    std::set<int> edge_ids, face_ids;
    for (const auto& e : c.edges) {
        if (c.dim(e.id) != 1)
            note("edge " + std::to_string(e.id) + " is not a 1-cell");
        if (!edge_ids.insert(e.id).second)
            note("edge " + std::to_string(e.id) + " listed twice");
        if (c.dim(e.tail) != 0 || c.dim(e.head) != 0)
            note("edge " + std::to_string(e.id) + " has an endpoint that is not a vertex");
        if (e.tail == e.head)
            note("edge " + std::to_string(e.id) + " is a loop");
    }
    for (const auto& f : c.faces) {
        if (c.dim(f.id) != 2)
            note("face " + std::to_string(f.id) + " is not a 2-cell");
        if (!face_ids.insert(f.id).second)
            note("face " + std::to_string(f.id) + " listed twice");
        const auto& cy = f.cycle;
        if (cy.size() < 4 || cy.size() % 2 != 0) {
            note("face " + std::to_string(f.id) + " cycle has length " + std::to_string(cy.size()));
            continue;
        }
        std::set<int> vs, es;
        for (std::size_t k = 0; k < cy.size(); ++k) {
            bool vertex = k % 2 == 0;
            if (c.dim(cy[k]) != (vertex ? 0 : 1)) {
                note("face " + std::to_string(f.id) + " cycle does not alternate vertices and edges");
                break;
            }
            if (!(vertex ? vs : es).insert(cy[k]).second)
                note("face " + std::to_string(f.id) + " cycle is not simple");
            if (!vertex && traversal(c, f, cy[k]) == 0)
                note("face " + std::to_string(f.id) + " cycle uses edge " + std::to_string(cy[k]) +
                     " between the wrong vertices");
        }
    }
    for (const auto& cell : c.cells) {
        if (cell.dim == 1 && !edge_ids.count(cell.id))
            note("1-cell " + std::to_string(cell.id) + " has no endpoints");
        if (cell.dim == 2 && !face_ids.count(cell.id))
            note("2-cell " + std::to_string(cell.id) + " has no boundary cycle");
    }
    return ok;
}

bool check_closure(const CellComplex& c, std::vector<std::string>& notes) {
    bool ok = true;
    auto note = [&](const std::string& s) {
        ok = false;
        notes.push_back(s);
    };
    int V = 0, E = 0, F = 0, B = 0;
    for (const auto& cell : c.cells) {
        V += cell.dim == 0;
        E += cell.dim == 1;
        F += cell.dim == 2;
        B += cell.dim == 3;
    }
    if (B != 1 || !c.ball)
        note("expected exactly one 3-cell, found " + std::to_string(B));
    else {
        if (c.dim(c.ball->id) != 3)
            note("ball id is not a 3-cell");
        std::vector<int> bf = c.ball->faces, all;
        for (const auto& f : c.faces)
            all.push_back(f.id);
        std::sort(bf.begin(), bf.end());
        std::sort(all.begin(), all.end());
        if (bf != all)
            note("ball boundary differs from the set of faces");
    }
    for (const auto& e : c.edges) {
        auto fs = faces_with_edge(c, e.id);
        if (fs.size() != 2)
            note("edge " + std::to_string(e.id) + " lies in " + std::to_string(fs.size()) + " faces");
    }
    if (V - E + F != 2)
        note("Euler characteristic V - E + F = " + std::to_string(V - E + F));
    // Connectivity of the boundary through codimension-one incidences.
    std::map<int, int> parent;
    for (const auto& cell : c.cells)
        if (cell.dim < 3)
            parent[cell.id] = cell.id;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) {
        if (parent.count(a) && parent.count(b))
            parent[find(a)] = find(b);
    };
    for (const auto& e : c.edges)
        unite(e.id, e.tail), unite(e.id, e.head);
    for (const auto& f : c.faces)
        for (int x : f.cycle)
            unite(f.id, x);
    std::set<int> roots;
    for (auto& [x, p] : parent)
        roots.insert(find(x));
    if (roots.size() > 1)
        note("boundary sphere is not connected");
    return ok;
}

bool check_path(const CellComplex& c, const std::vector<int>& path, int north, int south, const char* name,
                std::vector<std::string>& notes) {
    auto fail = [&](const std::string& s) {
        notes.push_back(std::string("meridian ") + name + ": " + s);
        return false;
    };
    if (path.size() < 3 || path.size() % 2 == 0)
        return fail("must alternate vertices and edges from north to south");
    if (path.front() != north || path.back() != south)
        return fail("must run from north to south");
    std::set<int> seen;
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (!seen.insert(path[k]).second)
            return fail("repeats cell " + std::to_string(path[k]));
        if (k % 2 == 0) {
            if (c.dim(path[k]) != 0)
                return fail(std::to_string(path[k]) + " is not a vertex");
        } else {
            const auto* e = c.edge(path[k]);
            if (!e)
                return fail(std::to_string(path[k]) + " is not an edge");
            if (e->tail != path[k - 1] || e->head != path[k + 1])
                return fail("edge " + std::to_string(path[k]) + " is not traversed tail to head");
        }
    }
    return true;
}

struct Sides {
    int top = 0;
    int bottom = 0;
    std::vector<int> forward;  // cells strictly between top and bottom along the cycle
    std::vector<int> backward; // the complementary arc, listed from top to bottom
};

Sides face_sides(const CellComplex& c, const CellComplex::Face& f) {
    const auto& cy = f.cycle;
    const std::size_t m = cy.size();
    std::vector<std::size_t> tops, bottoms;
    for (std::size_t k = 0; k < m; k += 2) {
        int in = traversal(c, f, cy[(k + m - 1) % m]);
        int out = traversal(c, f, cy[k + 1]);
        // Edge before vertex k ends at it when traversed forward.
        bool prev_leaves = in == -1;
        bool next_leaves = out == 1;
        if (prev_leaves && next_leaves)
            tops.push_back(k);
        if (!prev_leaves && !next_leaves)
            bottoms.push_back(k);
    }
    if (tops.size() != 1 || bottoms.size() != 1)
        throw NoUniqueExtremum("face " + std::to_string(f.id) + " has " + std::to_string(tops.size()) + " maxima and " +
                               std::to_string(bottoms.size()) + " minima");
    Sides s;
    s.top = cy[tops[0]];
    s.bottom = cy[bottoms[0]];
    for (std::size_t k = (tops[0] + 1) % m; k != bottoms[0]; k = (k + 1) % m)
        s.forward.push_back(cy[k]);
    for (std::size_t k = (tops[0] + m - 1) % m; k != bottoms[0]; k = (k + m - 1) % m)
        s.backward.push_back(cy[k]);
    return s;
}

void add_face_hemispheres(SignedTemplate& t, const CellComplex& c, const CellComplex::Face& f, bool flipped) {
    Sides s = face_sides(c, f);
    auto& h = t.hemi[f.id];
    h.assign(2, {});
    h[0][0] = {s.top};
    h[0][1] = {s.bottom};
    std::set<int> fwd(s.forward.begin(), s.forward.end()), bwd(s.backward.begin(), s.backward.end());
    h[1][flipped ? 0 : 1] = fwd;
    h[1][flipped ? 1 : 0] = bwd;
}

void add_low_cells(SignedTemplate& t, const CellComplex& c) {
    for (const auto& cell : c.cells) {
        t.dim[cell.id] = cell.dim;
        t.boundary[cell.id] = c.boundary(cell.id);
        if (cell.dim == 1) {
            const auto* e = c.edge(cell.id);
            t.hemi[cell.id] = {SignedTemplate::Halves{std::set<int>{e->tail}, std::set<int>{e->head}}};
        } else if (cell.dim == 0) {
            t.hemi[cell.id] = {};
        }
    }
}

} // namespace

HemisphereSplit split_hemispheres(const CellComplex& c, const Decoration& d) {
    std::set<int> we_edges, ew_edges, meridian_cells;
    for (std::size_t k = 1; k < d.we.size(); k += 2)
        we_edges.insert(d.we[k]);
    for (std::size_t k = 1; k < d.ew.size(); k += 2)
        ew_edges.insert(d.ew[k]);
    meridian_cells.insert(d.we.begin(), d.we.end());
    meridian_cells.insert(d.ew.begin(), d.ew.end());

    std::map<int, int> parent;
    for (const auto& f : c.faces)
        parent[f.id] = f.id;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : c.edges) {
        if (meridian_cells.count(e.id))
            continue;
        auto fs = faces_with_edge(c, e.id);
        for (std::size_t k = 1; k < fs.size(); ++k)
            parent[find(fs[k])] = find(fs[0]);
    }
    std::map<int, std::vector<int>> comps;
    for (const auto& f : c.faces)
        comps[find(f.id)].push_back(f.id);
    if (comps.size() != 2)
        throw ValidationFailed("meridians split the faces into " + std::to_string(comps.size()) + " components");

    // East faces run along WE and against EW; West faces the other way round.
    std::map<int, int> vote; // root -> +1 east, -1 west
    for (const auto& f : c.faces) {
        for (std::size_t k = 1; k < f.cycle.size(); k += 2) {
            int e = f.cycle[k];
            int dir = traversal(c, f, e);
            int v = 0;
            if (we_edges.count(e))
                v = dir;
            else if (ew_edges.count(e))
                v = -dir;
            if (v == 0)
                continue;
            int r = find(f.id);
            if (vote.count(r) && vote[r] != v)
                throw ValidationFailed("face " + std::to_string(f.id) + " runs inconsistently along the meridians");
            vote[r] = v;
        }
    }
    int east_root = 0, west_root = 0;
    for (auto& [r, fs] : comps) {
        if (!vote.count(r))
            throw ValidationFailed("a hemisphere does not touch the meridians");
        (vote[r] > 0 ? east_root : west_root) = r;
    }
    if (east_root == 0 || west_root == 0 || east_root == west_root)
        throw ValidationFailed("both hemispheres carry the same orientation along the meridians");

    HemisphereSplit s;
    for (const auto& f : c.faces) {
        auto& side = find(f.id) == east_root ? s.east : s.west;
        side.insert(f.id);
        for (int x : f.cycle)
            if (!meridian_cells.count(x))
                side.insert(x);
    }
    for (int x : s.east)
        if (s.west.count(x))
            throw ValidationFailed("cell " + std::to_string(x) + " touches both hemispheres");
    return s;
}

TemplateValidation validate_template(const CellComplex& c, const Decoration& d) {
    TemplateValidation v;
    v.regular = check_regular(c, v.notes);
    if (!v.regular)
        return v;
    v.closure = check_closure(c, v.notes);

    auto o = orientation(c);
    v.bipolar = o.acyclic && o.sources.size() == 1 && o.sinks.size() == 1 && o.sources[0] == d.north &&
                o.sinks[0] == d.south;
    if (!v.bipolar)
        v.notes.push_back("edge orientation is not bipolar from " + std::to_string(d.north) + " to " +
                          std::to_string(d.south));

    v.oriented = v.closure;
    if (v.closure)
        for (const auto& e : c.edges) {
            auto fs = faces_with_edge(c, e.id);
            if (traversal(c, *c.face(fs[0]), e.id) + traversal(c, *c.face(fs[1]), e.id) != 0) {
                v.oriented = false;
                v.notes.push_back("faces " + std::to_string(fs[0]) + " and " + std::to_string(fs[1]) +
                                  " run the same way along edge " + std::to_string(e.id));
            }
        }

    v.meridians = check_path(c, d.we, d.north, d.south, "WE", v.notes) &&
                  check_path(c, d.ew, d.north, d.south, "EW", v.notes);
    if (v.meridians) {
        std::set<int> inner(d.we.begin() + 1, d.we.end() - 1);
        for (std::size_t k = 1; k + 1 < d.ew.size(); ++k)
            if (inner.count(d.ew[k])) {
                v.meridians = false;
                v.notes.push_back("meridians share cell " + std::to_string(d.ew[k]));
            }
        if (d.we == d.ew) {
            v.meridians = false;
            v.notes.push_back("meridians coincide");
        }
    }
    if (!v.meridians || !v.closure || !v.oriented)
        return v;

    HemisphereSplit s;
    try {
        s = split_hemispheres(c, d);
        v.hemispheres = true;
    } catch (const ValidationFailed& ex) {
        v.notes.push_back(ex.what());
        return v;
    }

    std::set<int> on_meridian(d.we.begin(), d.we.end());
    on_meridian.insert(d.ew.begin(), d.ew.end());
    v.clause_iii = true;
    for (const auto& e : c.edges) {
        if (on_meridian.count(e.id))
            continue;
        bool west = s.west.count(e.id) != 0;
        for (int end : {e.tail, e.head}) {
            if (!on_meridian.count(end) || end == d.north || end == d.south)
                continue;
            bool towards = e.head == end;
            if (west != towards) {
                v.clause_iii = false;
                v.notes.push_back(std::string(west ? "west" : "east") + " edge " + std::to_string(e.id) +
                                  (towards ? " points into " : " points out of ") + "meridian vertex " +
                                  std::to_string(end));
            }
        }
    }

    // The faces adjacent to the first and last edge of a meridian, on opposite
    // sides, share an edge of that meridian.
    auto overlap = [&](const std::vector<int>& mer) {
        int first = mer[1], last = mer[mer.size() - 2];
        auto pick = [&](int e, bool east) {
            for (int f : faces_with_edge(c, e))
                if ((east ? s.east : s.west).count(f))
                    return f;
            return 0;
        };
        int a = pick(first, false), b = pick(last, true);
        if (!a || !b)
            return false;
        auto ba = c.boundary(a), bb = c.boundary(b);
        for (std::size_t k = 1; k < mer.size(); k += 2)
            if (ba.count(mer[k]) && bb.count(mer[k]))
                return true;
        return false;
    };
    bool we_ok = overlap(d.we), ew_ok = overlap(d.ew);
    v.clause_iv = we_ok && ew_ok;
    if (!we_ok)
        v.notes.push_back("NE and SW faces share no edge of WE");
    if (!ew_ok)
        v.notes.push_back("NW and SE faces share no edge of EW");
    return v;
}

FormalHemispheres formal_hemispheres(const CellComplex& c, const Decoration& d) {
    auto v = validate_template(c, d);
    if (!v.ok()) {
        std::string why;
        for (auto& n : v.notes)
            why += n + "; ";
        throw ValidationFailed("not a 3-cell template: " + why);
    }
    auto s = split_hemispheres(c, d);
    FormalHemispheres t;
    add_low_cells(t, c);
    for (const auto& f : c.faces)
        add_face_hemispheres(t, c, f, s.west.count(f.id) != 0);

    for (std::size_t k = 1; k < d.we.size(); k += 2)
        for (int f : faces_with_edge(c, d.we[k]))
            if (!t.part(f, 1, '+').count(d.we[k]))
                throw SideRuleViolation("WE edge " + std::to_string(d.we[k]) + " is not on the plus side of face " +
                                        std::to_string(f));
    for (std::size_t k = 1; k < d.ew.size(); k += 2)
        for (int f : faces_with_edge(c, d.ew[k]))
            if (!t.part(f, 1, '-').count(d.ew[k]))
                throw SideRuleViolation("EW edge " + std::to_string(d.ew[k]) +
                                        " is not on the minus side of face " + std::to_string(f));

    auto& h = t.hemi[c.ball->id];
    h.assign(3, {});
    h[0][0] = {d.north};
    h[0][1] = {d.south};
    h[1][1] = std::set<int>(d.we.begin() + 1, d.we.end() - 1);
    h[1][0] = std::set<int>(d.ew.begin() + 1, d.ew.end() - 1);
    h[2][0] = s.west;
    h[2][1] = s.east;
    t.north = d.north;
    t.south = d.south;
    return t;
}

FormalHemispheres formal_hemispheres(const CellComplex& c) {
    std::vector<std::string> notes;
    if (!check_regular(c, notes))
        throw ValidationFailed("irregular complex: " + (notes.empty() ? std::string() : notes.front()));
    for (const auto& cell : c.cells)
        if (cell.dim > 2)
            throw ValidationFailed("planar complex contains a 3-cell");
    auto o = orientation(c);
    if (!o.acyclic || o.sources.size() != 1 || o.sinks.size() != 1)
        throw ValidationFailed("edge orientation is not bipolar");
    FormalHemispheres t;
    add_low_cells(t, c);
    for (const auto& f : c.faces)
        add_face_hemispheres(t, c, f, false);
    t.north = o.sources[0];
    t.south = o.sinks[0];
    return t;
}

namespace {

// Orders the open arc `cells` from `from` to `to` along edge incidences.
std::vector<int> arc_path(const SignedTemplate& t, const std::set<int>& cells, int from, int to, int owner) {
    std::vector<int> out;
    std::set<int> left = cells;
    int cur = from;
    while (true) {
        int next_edge = 0;
        for (int x : left)
            if (t.dim.at(x) == 1 && t.boundary.at(x).count(cur)) {
                if (next_edge)
                    throw ReconstructionAmbiguity("arc of " + std::to_string(owner) + " branches at " +
                                                  std::to_string(cur));
                next_edge = x;
            }
        if (!next_edge)
            throw ReconstructionAmbiguity("arc of " + std::to_string(owner) + " stops at " + std::to_string(cur));
        left.erase(next_edge);
        out.push_back(next_edge);
        int other = 0;
        for (int y : t.boundary.at(next_edge))
            if (y != cur)
                other = y;
        if (other == to)
            break;
        if (!left.count(other))
            throw ReconstructionAmbiguity("arc of " + std::to_string(owner) + " leaves through " +
                                          std::to_string(other));
        left.erase(other);
        out.push_back(other);
        cur = other;
    }
    if (!left.empty())
        throw ReconstructionAmbiguity("arc of " + std::to_string(owner) + " is not a simple path");
    return out;
}

int single(const std::set<int>& s, int owner, const char* what) {
    if (s.size() != 1)
        throw ReconstructionAmbiguity(std::string(what) + " of " + std::to_string(owner) + " has " +
                                      std::to_string(s.size()) + " cells");
    return *s.begin();
}

CellComplex skeleton_from_template(const Permutation& p, const HemisphereTemplate& ht, const std::set<int>& flipped) {
    CellComplex c;
    for (int v = 1; v <= p.size(); ++v)
        c.cells.push_back({v, ht.dim.at(v)});
    for (int v = 1; v <= p.size(); ++v) {
        int d = ht.dim.at(v);
        if (d == 1) {
            c.edges.push_back({v, single(ht.part(v, 0, '-'), v, "tail"), single(ht.part(v, 0, '+'), v, "head")});
        } else if (d == 2) {
            int top = single(ht.part(v, 0, '-'), v, "top");
            int bottom = single(ht.part(v, 0, '+'), v, "bottom");
            bool flip = flipped.count(v) != 0;
            auto fwd = arc_path(ht, ht.part(v, 1, flip ? '-' : '+'), top, bottom, v);
            auto bwd = arc_path(ht, ht.part(v, 1, flip ? '+' : '-'), top, bottom, v);
            CellComplex::Face f{v, {top}};
            f.cycle.insert(f.cycle.end(), fwd.begin(), fwd.end());
            f.cycle.push_back(bottom);
            f.cycle.insert(f.cycle.end(), bwd.rbegin(), bwd.rend());
            c.faces.push_back(std::move(f));
        }
    }
    return c;
}

std::vector<int> meridian_path(const HemisphereTemplate& ht, const std::set<int>& inner, int north, int south) {
    std::vector<int> path{north};
    auto arc = arc_path(ht, inner, north, south, 0);
    path.insert(path.end(), arc.begin(), arc.end());
    path.push_back(south);
    return path;
}

} // namespace

BallComplex complex_from_sigma(const Permutation& p) {
    if (!is_sturm_3ball(p))
        throw NotBall(p.str() + " is not a Sturm 3-ball");
    auto an = analyze(p);
    auto anatomy = ball_anatomy(p);
    BallComplex b;
    b.complex = skeleton_from_template(p, an.ht, anatomy.partition[2][0]);
    CellComplex::Ball ball{anatomy.center, {}};
    for (const auto& f : b.complex.faces)
        ball.faces.push_back(f.id);
    b.complex.ball = ball;
    b.decoration.north = an.ht.north;
    b.decoration.south = an.ht.south;
    b.decoration.we = meridian_path(an.ht, anatomy.partition[1][1], an.ht.north, an.ht.south);
    b.decoration.ew = meridian_path(an.ht, anatomy.partition[1][0], an.ht.north, an.ht.south);
    b.complex.decoration = b.decoration;
    b.hemispheres = formal_hemispheres(b.complex, b.decoration);
    return b;
}

CellComplex planar_complex_from_sigma(const Permutation& p) {
    require_sturm(p);
    auto i = morse_numbers(p);
    if (*std::max_element(i.begin(), i.end()) > 2)
        throw NotPlanar(p.str() + " has Morse numbers above 2");
    auto an = analyze(p);
    return skeleton_from_template(p, an.ht, {});
}

CellComplex closed_hemisphere(const CellComplex& c, const Decoration& d, bool east) {
    auto s = split_hemispheres(c, d);
    std::set<int> keep(d.we.begin(), d.we.end());
    keep.insert(d.ew.begin(), d.ew.end());
    const auto& side = east ? s.east : s.west;
    keep.insert(side.begin(), side.end());
    CellComplex h;
    for (const auto& cell : c.cells)
        if (keep.count(cell.id))
            h.cells.push_back(cell);
    for (const auto& e : c.edges)
        if (keep.count(e.id))
            h.edges.push_back(e);
    for (const auto& f : c.faces)
        if (keep.count(f.id))
            h.faces.push_back(f);
    return h;
}

std::vector<Decoration> infer_decorations(const CellComplex& c, std::size_t max_paths) {
    std::vector<Decoration> out;
    std::vector<std::string> notes;
    if (!check_regular(c, notes))
        return out;
    auto o = orientation(c);
    if (!o.acyclic || o.sources.size() != 1 || o.sinks.size() != 1)
        return out;
    const int north = o.sources[0], south = o.sinks[0];
    std::map<int, std::vector<const CellComplex::Edge*>> outgoing;
    for (const auto& e : c.edges)
        outgoing[e.tail].push_back(&e);
    std::vector<std::vector<int>> paths;
    std::vector<int> cur{north};
    std::function<void(int)> walk = [&](int v) {
        if (paths.size() >= max_paths)
            return;
        if (v == south) {
            paths.push_back(cur);
            return;
        }
        for (const auto* e : outgoing[v]) {
            cur.push_back(e->id);
            cur.push_back(e->head);
            walk(e->head);
            cur.pop_back();
            cur.pop_back();
        }
    };
    walk(north);
    for (std::size_t a = 0; a < paths.size(); ++a)
        for (std::size_t b = 0; b < paths.size(); ++b) {
            if (a == b)
                continue;
            std::set<int> inner(paths[a].begin() + 1, paths[a].end() - 1);
            bool disjoint = std::none_of(paths[b].begin() + 1, paths[b].end() - 1,
                                         [&](int x) { return inner.count(x) != 0; });
            if (!disjoint)
                continue;
            Decoration d{north, south, paths[a], paths[b]};
            if (validate_template(c, d).ok())
                out.push_back(d);
        }
    return out;
}

CellComplex relabel(const CellComplex& c, const std::map<int, int>& ids) {
    auto m = [&](int x) {
        auto it = ids.find(x);
        return it == ids.end() ? x : it->second;
    };
    CellComplex r;
    for (const auto& cell : c.cells)
        r.cells.push_back({m(cell.id), cell.dim});
    for (const auto& e : c.edges)
        r.edges.push_back({m(e.id), m(e.tail), m(e.head)});
    for (const auto& f : c.faces) {
        CellComplex::Face g{m(f.id), {}};
        for (int x : f.cycle)
            g.cycle.push_back(m(x));
        r.faces.push_back(std::move(g));
    }
    if (c.ball) {
        CellComplex::Ball b{m(c.ball->id), {}};
        for (int x : c.ball->faces)
            b.faces.push_back(m(x));
        r.ball = b;
    }
    if (c.decoration)
        r.decoration = relabel(*c.decoration, ids);
    return r;
}

Decoration relabel(const Decoration& d, const std::map<int, int>& ids) {
    auto m = [&](int x) {
        auto it = ids.find(x);
        return it == ids.end() ? x : it->second;
    };
    Decoration r{m(d.north), m(d.south), {}, {}};
    for (int x : d.we)
        r.we.push_back(m(x));
    for (int x : d.ew)
        r.ew.push_back(m(x));
    return r;
}

} // namespace sturm
