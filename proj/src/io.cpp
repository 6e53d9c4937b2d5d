#include "sturm/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sturm {

namespace {

template <typename T>
T field(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string(where) + " lacks '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string(where) + "." + key + ": " + e.what());
    }
}

json sets_json(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

} // namespace

CellComplex complex_from_json(const json& j) {
    CellComplex c;
    if (!j.is_object())
        throw ParseError("complex document must be an object");
    for (const auto& cell : field<json>(j, "cells", "complex"))
        c.cells.push_back({field<int>(cell, "id", "cell"), field<int>(cell, "dim", "cell")});
    if (j.contains("edges"))
        for (const auto& e : j.at("edges"))
            c.edges.push_back({field<int>(e, "id", "edge"), field<int>(e, "tail", "edge"), field<int>(e, "head", "edge")});
    if (j.contains("faces"))
        for (const auto& f : j.at("faces"))
            c.faces.push_back({field<int>(f, "id", "face"), field<std::vector<int>>(f, "cycle", "face")});
    if (j.contains("ball") && !j.at("ball").is_null()) {
        const auto& b = j.at("ball");
        c.ball = CellComplex::Ball{field<int>(b, "id", "ball"), field<std::vector<int>>(b, "faces", "ball")};
    }
    if (j.contains("decoration") && !j.at("decoration").is_null()) {
        const auto& d = j.at("decoration");
        c.decoration = Decoration{field<int>(d, "north", "decoration"), field<int>(d, "south", "decoration"),
                                  field<std::vector<int>>(d, "we", "decoration"),
                                  field<std::vector<int>>(d, "ew", "decoration")};
    }
    return c;
}

json complex_to_json(const CellComplex& c) {
    json j;
    j["cells"] = json::array();
    for (const auto& cell : c.cells)
        j["cells"].push_back({{"id", cell.id}, {"dim", cell.dim}});
    j["edges"] = json::array();
    for (const auto& e : c.edges)
        j["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
    j["faces"] = json::array();
    for (const auto& f : c.faces)
        j["faces"].push_back({{"id", f.id}, {"cycle", f.cycle}});
    if (c.ball)
        j["ball"] = {{"id", c.ball->id}, {"faces", c.ball->faces}};
    if (c.decoration)
        j["decoration"] = {{"north", c.decoration->north},
                           {"south", c.decoration->south},
                           {"we", c.decoration->we},
                           {"ew", c.decoration->ew}};
    return j;
}

CellComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return complex_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Permutation load_permutation(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos)
            line.erase(pos);
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            return parse_permutation(line);
    }
    throw ParseError(path + " contains no permutation");
}

json verdict_to_json(const SturmVerdict& v) {
    return {{"odd", v.odd}, {"dissipative", v.dissipative}, {"meander", v.meander}, {"morse", v.morse},
            {"sturm", v.sturm()}};
}

json template_to_json(const TemplateVerdict& v) {
    return {{"single_center", v.single_center}, {"overlaps", v.overlaps},     {"polar_arcs", v.polar_arcs},
            {"neighbours", v.neighbours},       {"template", v.ok()}};
}

json anatomy_to_json(const BallAnatomy& a) {
    json j;
    j["center"] = a.center;
    j["w"] = {{"0-", a.w[0][0]}, {"0+", a.w[0][1]}, {"1-", a.w[1][0]}, {"1+", a.w[1][1]}};
    j["partition"] = json::object();
    for (int level = 0; level < 3; ++level)
        j["partition"][std::to_string(level)] = {{"minus", sets_json(a.partition[level][0])},
                                                 {"plus", sets_json(a.partition[level][1])}};
    j["serpents"] = json::array();
    for (const auto& s : a.serpents) {
        json sj{{"iota", s.iota}, {"pole", s.pole == Pole::North ? "N" : "S"}, {"members", s.members}, {"full", s.full}};
        sj["terminator"] = s.terminator ? json(*s.terminator) : json(nullptr);
        j["serpents"].push_back(sj);
    }
    return j;
}

json validation_to_json(const TemplateValidation& v) {
    return {{"regular", v.regular},     {"closure", v.closure},       {"bipolar", v.bipolar},
            {"oriented", v.oriented},   {"meridians", v.meridians},   {"hemispheres", v.hemispheres},
            {"clause_iii", v.clause_iii}, {"clause_iv", v.clause_iv}, {"ok", v.ok()},
            {"notes", v.notes}};
}

json pair_to_json(const PathPair& pp) {
    return {{"h0", pp.h0}, {"h1", pp.h1}, {"sigma", pp.sigma.one_line()}};
}

json scoop_to_json(const ScoopResult& s) {
    json relabel = json::object();
    for (auto [a, b] : s.relabel)
        relabel[std::to_string(a)] = b;
    return {{"sigma", s.sigma_scooped.one_line()}, {"removed", sets_json(s.removed)}, {"relabel", relabel}};
}

json analysis_report(const Permutation& p) {
    json j;
    j["input"] = p.one_line();
    auto v = is_sturm(p);
    j["sturm"] = verdict_to_json(v);
    if (!v.sturm())
        return j;
    auto an = analyze(p);
    const int n = p.size();
    j["morse"] = an.zm.morse();
    json zu = json::array(), zs = json::array();
    for (int a = 1; a <= n; ++a) {
        std::vector<int> ru, rs;
        for (int b = 1; b <= n; ++b) {
            ru.push_back(an.zm.z(a, b));
            rs.push_back(an.zm.sign(a, b));
        }
        zu.push_back(ru);
        zs.push_back(rs);
    }
    j["zero"] = {{"unsigned", zu}, {"sign", zs}};
    j["hetero"] = json::array();
    for (auto [a, b] : an.cg.hetero)
        j["hetero"].push_back({a, b});
    j["hemispheres"] = json::object();
    for (auto& [c, levels] : an.ht.hemi) {
        if (levels.empty())
            continue;
        json cj = json::object();
        for (std::size_t lv = 0; lv < levels.size(); ++lv)
            cj[std::to_string(lv)] = {{"minus", sets_json(levels[lv][0])}, {"plus", sets_json(levels[lv][1])}};
        j["hemispheres"][std::to_string(c)] = cj;
    }
    auto tr = check_traversal_table(p, an.ht);
    j["traversal_table"] = {{"checked", tr.checked}, {"violations", tr.violations.size()}};
    auto tv = is_three_meander_template(p);
    j["template"] = template_to_json(tv);
    j["sturm_3ball"] = is_sturm_3ball(p);
    if (tv.single_center) {
        try {
            j["anatomy"] = anatomy_to_json(ball_anatomy(p));
        } catch (const Error& e) {
            j["anatomy_error"] = e.what();
        }
    }
    return j;
}

std::string render_svg(const Permutation& p) {
    const int n = p.size();
    const double step = 40, margin = 40;
    const double width = 2 * margin + step * (n - 1);
    double max_span = 1;
    Meander m;
    m.curve_order = p.h0();
    for (int k = 1; k < n; ++k) {
        int a = p.inv(k), b = p.inv(k + 1);
        Arc arc{std::min(a, b), std::max(a, b)};
        (k % 2 == 1 ? m.upper_arcs : m.lower_arcs).push_back(arc);
        max_span = std::max(max_span, static_cast<double>(arc.second - arc.first));
    }
    const double radius_max = max_span * step / 2;
    const double axis_y = margin + radius_max + 20;
    const double height = axis_y + radius_max + margin + 40;
    auto x_of = [&](int pos) { return margin + step * (pos - 1); };

    std::vector<int> morse;
    if (p(1) == 1 && p(n) == n)
        morse = morse_numbers(p);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <line x1=\"" << margin / 2 << "\" y1=\"" << axis_y << "\" x2=\"" << width - margin / 2 << "\" y2=\""
       << axis_y << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    auto arcs = [&](const std::vector<Arc>& list, bool upper) {
        for (auto [a, b] : list) {
            double r = (b - a) * step / 2;
            os << "  <path class=\"" << (upper ? "upper" : "lower") << "\" d=\"M " << x_of(a) << ' ' << axis_y
               << " A " << r << ' ' << r << " 0 0 " << (upper ? 1 : 0) << ' ' << x_of(b) << ' ' << axis_y
               << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        }
    };
    arcs(m.upper_arcs, true);
    arcs(m.lower_arcs, false);
    // Incoming end from the southwest and outgoing end towards the northeast.
    os << "  <line x1=\"" << x_of(p.inv(1)) << "\" y1=\"" << axis_y << "\" x2=\"" << x_of(p.inv(1)) << "\" y2=\""
       << axis_y + 20 << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    bool last_up = n % 2 == 1;
    os << "  <line x1=\"" << x_of(p.inv(n)) << "\" y1=\"" << axis_y << "\" x2=\"" << x_of(p.inv(n)) << "\" y2=\""
       << (last_up ? axis_y - 20 : axis_y + 20) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (int v = 1; v <= n; ++v) {
        os << "  <circle cx=\"" << x_of(v) << "\" cy=\"" << axis_y << "\" r=\"2.5\" fill=\"black\"/>\n";
        os << "  <text x=\"" << x_of(v) << "\" y=\"" << height - margin + 10
           << "\" font-size=\"11\" text-anchor=\"middle\">" << v << "</text>\n";
        if (!morse.empty())
            os << "  <text x=\"" << x_of(v) << "\" y=\"" << height - margin + 24
               << "\" font-size=\"9\" fill=\"#a00\" text-anchor=\"middle\">i=" << morse[v - 1] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace sturm
