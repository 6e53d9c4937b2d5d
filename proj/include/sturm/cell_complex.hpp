#pragma once

#include "sturm/invariants.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sturm {

struct Decoration {
    int north = 0;
    int south = 0;
    std::vector<int> we; // alternating vertex/edge path from north to south
    std::vector<int> ew;
    bool operator==(const Decoration& o) const {
        return north == o.north && south == o.south && we == o.we && ew == o.ew;
    }
};

struct CellComplex {
    struct Cell {
        int id;
        int dim;
    };
    struct Edge {
        int id;
        int tail;
        int head;
    };
    struct Face {
        int id;
        std::vector<int> cycle; // v, e, v, e, ... closed implicitly
    };
    struct Ball {
        int id;
        std::vector<int> faces;
    };

    std::vector<Cell> cells;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    std::optional<Ball> ball;
    std::optional<Decoration> decoration;

    int dim(int id) const;
    bool has(int id) const;
    const Edge* edge(int id) const;
    const Face* face(int id) const;
    std::set<int> boundary(int id) const;
    std::set<int> ids() const;
};

struct TemplateValidation {
    bool regular = false;
    bool closure = false;
    bool bipolar = false;
    bool oriented = false;
    bool meridians = false;
    bool hemispheres = false;
    bool clause_iii = false;
    bool clause_iv = false;
    std::vector<std::string> notes;
    bool ok() const {
        return regular && closure && bipolar && oriented && meridians && hemispheres && clause_iii && clause_iv;
    }
};

TemplateValidation validate_template(const CellComplex& c, const Decoration& d);

// Open hemispheres of the boundary sphere; throws ValidationFailed when the
// meridians do not split the sphere into two consistently oriented parts.
struct HemisphereSplit {
    std::set<int> west;
    std::set<int> east;
};
HemisphereSplit split_hemispheres(const CellComplex& c, const Decoration& d);

using FormalHemispheres = SignedTemplate;

// 3-ball complex with template decoration. Throws ValidationFailed,
// NoUniqueExtremum, SideRuleViolation.
FormalHemispheres formal_hemispheres(const CellComplex& c, const Decoration& d);
// Planar complex without 3-cells; no side flips.
FormalHemispheres formal_hemispheres(const CellComplex& c);

struct BallComplex {
    CellComplex complex;
    Decoration decoration;
    FormalHemispheres hemispheres;
};

// Throws NotBall, ReconstructionAmbiguity.
BallComplex complex_from_sigma(const Permutation& p);
// Max Morse number at most 2. Throws NotSturm, NotPlanar, ReconstructionAmbiguity.
CellComplex planar_complex_from_sigma(const Permutation& p);

// Closed hemisphere as a planar complex (poles, meridians and one open hemisphere).
CellComplex closed_hemisphere(const CellComplex& c, const Decoration& d, bool east);

// All template decorations of a bare 3-ball complex.
std::vector<Decoration> infer_decorations(const CellComplex& c, std::size_t max_paths = 20000);

CellComplex relabel(const CellComplex& c, const std::map<int, int>& ids);
Decoration relabel(const Decoration& d, const std::map<int, int>& ids);

} // namespace sturm
