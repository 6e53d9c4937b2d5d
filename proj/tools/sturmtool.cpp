#include "sturm/sturm.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using sturm::json;
using sturm::Permutation;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
    std::string perm;
    std::string file;
    bool json = false;
    std::string svg;
    int n = 0;
    bool ball = false;
    int jobs = 1;
    int max_n = sturm::kDefaultMaxN;
    std::string nose;
    bool east = false;
    bool west = false;
    bool sz = false;
    std::string labels;
    bool timing = false;
};

std::string join(const std::vector<int>& xs, const char* sep = " ") {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? sep : "") << xs[i];
    return out.str();
}

Permutation input_permutation(const Options& o) {
    if (!o.file.empty())
        return sturm::load_permutation(o.file);
    if (o.perm.empty())
        throw sturm::ParseError("no permutation given (positional argument or --file)");
    return sturm::parse_permutation(o.perm);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_svg(const Permutation& p, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw sturm::ParseError("cannot write " + path);
    out << sturm::render_svg(p);
}

int max_morse(const Permutation& p) {
    auto m = sturm::morse_numbers(p);
    return *std::max_element(m.begin(), m.end());
}

int cmd_check(const Options& o) {
    Permutation p = input_permutation(o);
    auto v = sturm::is_sturm(p);
    json j = sturm::verdict_to_json(v);
    bool pass = v.sturm();
    if (o.ball) {
        bool tmpl = pass && sturm::is_three_meander_template(p).ok();
        j["template"] = tmpl;
        pass = pass && tmpl;
    }
    if (o.json) {
        emit(j);
    } else {
        std::cout << "odd " << v.odd << " dissipative " << v.dissipative << " meander " << v.meander << " morse "
                  << v.morse << " sturm " << v.sturm();
        if (o.ball)
            std::cout << " template " << j["template"].get<bool>();
        std::cout << "\n";
    }
    return pass ? kOk : kFailed;
}

int cmd_analyze(const Options& o) {
    Permutation p = input_permutation(o);
    auto start = std::chrono::steady_clock::now();
    json r = sturm::analysis_report(p);
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.json) {
        emit(r);
    } else {
        std::cout << "sigma " << p.str() << "\n";
        std::cout << "sturm " << r["sturm"]["sturm"].get<bool>() << "\n";
        if (r.contains("morse"))
            std::cout << "morse " << join(r["morse"].get<std::vector<int>>()) << "\n";
        if (r.contains("hetero"))
            std::cout << "connections " << r["hetero"].size() << "\n";
        if (r.contains("template"))
            std::cout << "template " << r["template"]["template"].get<bool>() << "\n";
        if (r.contains("anatomy"))
            std::cout << "center " << r["anatomy"]["center"].get<int>() << "\n";
    }
    if (!o.svg.empty())
        write_svg(p, o.svg);
    if (o.timing)
        std::cerr << "analysis took " << elapsed << " ms\n";
    return r["sturm"]["sturm"].get<bool>() ? kOk : kFailed;
}

int cmd_design(const Options& o) {
    if (o.file.empty() && o.perm.empty())
        throw sturm::ParseError("design needs a complex file");
    sturm::CellComplex c = sturm::load_complex(o.file.empty() ? o.perm : o.file);
    sturm::PathPair pair;
    if (c.ball) {
        sturm::Decoration d;
        if (c.decoration) {
            d = *c.decoration;
        } else {
            auto ds = sturm::infer_decorations(c);
            if (ds.empty())
                throw sturm::ValidationFailed("no template decoration found for this complex");
            d = ds.front();
            if (ds.size() > 1)
                std::cerr << ds.size() << " template decorations found; using WE " << join(d.we) << ", EW "
                          << join(d.ew) << "\n";
        }
        pair = sturm::szs_pair(c, d);
    } else {
        pair = o.sz ? sturm::sz_pair(c) : sturm::zs_pair(c);
    }
    bool tmpl = sturm::is_three_meander_template(pair.sigma).ok();
    if (o.json) {
        json j = sturm::pair_to_json(pair);
        j["template"] = tmpl;
        emit(j);
    } else {
        std::cout << "h0 " << join(pair.h0) << "\nh1 " << join(pair.h1) << "\nsigma " << pair.sigma.str()
                  << "\ntemplate " << (tmpl ? "true" : "false") << "\n";
    }
    if (!o.svg.empty())
        write_svg(pair.sigma, o.svg);
    return kOk;
}

int cmd_retract(const Options& o) {
    Permutation p = input_permutation(o);
    if (o.nose.empty()) {
        auto noses = sturm::find_noses(p);
        json j = json::array();
        for (const auto& n : noses)
            j.push_back({{"v1", n.v1}, {"v2", n.v2}, {"side", n.side == sturm::Side::Upper ? "upper" : "lower"}});
        if (o.json) {
            emit(j);
        } else {
            for (const auto& n : noses)
                std::cout << n.v1 << "," << n.v2 << " " << (n.side == sturm::Side::Upper ? "upper" : "lower") << "\n";
        }
        return kOk;
    }
    std::vector<int> pair;
    {
        std::string s = o.nose;
        std::replace(s.begin(), s.end(), ',', ' ');
        std::istringstream in(s);
        int x;
        while (in >> x)
            pair.push_back(x);
        if (pair.size() != 2 || !in.eof())
            throw sturm::ParseError("--nose expects v1,v2");
    }
    auto r = sturm::retract_nose(p, pair[0], pair[1]);
    if (o.json) {
        json rel = json::object();
        for (auto [a, b] : r.relabel)
            rel[std::to_string(a)] = b;
        emit({{"sigma", r.sigma.one_line()}, {"relabel", rel}});
    } else {
        std::cout << r.sigma.str() << "\n";
    }
    return kOk;
}

int cmd_scoop(const Options& o) {
    if (o.east == o.west)
        throw sturm::ParseError("scoop needs exactly one of --east, --west");
    Permutation p = input_permutation(o);
    auto r = sturm::scoop(p, o.east ? sturm::ScoopSide::East : sturm::ScoopSide::West);
    if (o.json)
        emit(sturm::scoop_to_json(r));
    else
        std::cout << r.sigma_scooped.str() << "\n";
    return kOk;
}

int cmd_roundtrip(const Options& o) {
    Permutation p = input_permutation(o);
    bool ok = false;
    std::string kind = "none";
    if (sturm::is_sturm(p).sturm()) {
        if (sturm::is_sturm_3ball(p)) {
            kind = "ball";
            ok = sturm::roundtrip(p);
        } else if (max_morse(p) <= 2) {
            kind = "planar";
            ok = sturm::planar_roundtrip(p);
        }
    }
    if (o.json)
        emit({{"sigma", p.one_line()}, {"kind", kind}, {"roundtrip", ok}});
    else
        std::cout << (ok ? "true" : "false") << " (" << kind << ")\n";
    return ok ? kOk : kFailed;
}

int cmd_enumerate(const Options& o) {
    if (o.n <= 0)
        throw sturm::ParseError("enumerate needs --n N");
    auto all = sturm::enumerate_sturm(o.n, o.max_n, o.jobs);
    std::vector<Permutation> out;
    for (auto& p : all)
        if (!o.ball || sturm::is_three_meander_template(p).ok())
            out.push_back(p);
    if (o.json) {
        json j = json::array();
        for (const auto& p : out)
            j.push_back(p.one_line());
        emit(j);
    } else {
        for (const auto& p : out)
            std::cout << p.str() << "\n";
    }
    std::cerr << out.size() << " permutations\n";
    return kOk;
}

int cmd_render(const Options& o) {
    Permutation p = input_permutation(o);
    if (o.svg.empty())
        std::cout << sturm::render_svg(p);
    else
        write_svg(p, o.svg);
    return kOk;
}

int cmd_complex(const Options& o) {
    Permutation p = input_permutation(o);
    sturm::CellComplex c;
    if (sturm::is_sturm_3ball(p))
        c = sturm::complex_from_sigma(p).complex;
    else
        c = sturm::planar_complex_from_sigma(p);
    if (!o.labels.empty()) {
        auto names = sturm::parse_permutation(o.labels);
        if (names.size() != p.size())
            throw sturm::ParseError("--labels must list " + std::to_string(p.size()) + " labels");
        std::map<int, int> ids;
        for (int a = 1; a <= p.size(); ++a)
            ids[a] = names(a);
        c = sturm::relabel(c, ids);
    }
    emit(sturm::complex_to_json(c));
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sturm permutations, 3-meander templates and 3-cell templates"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("perm", o.perm, "Permutation in one-line form, e.g. \"1 4 3 2 5\"");
        sub->add_option("--file", o.file, "Read the input from a file");
        sub->add_flag("--json", o.json, "Machine-readable JSON output");
    };

    auto* check = app.add_subcommand("check", "Sturm verdict for a permutation");
    add_input(check);
    check->add_flag("--ball", o.ball, "Also require a 3-meander template");

    auto* analyze = app.add_subcommand("analyze", "Morse and zero numbers, connections, hemispheres, anatomy");
    add_input(analyze);
    analyze->add_option("--svg", o.svg, "Write the meander diagram to PATH");
    analyze->add_flag("--timing", o.timing, "Report elapsed time on stderr");

    auto* design = app.add_subcommand("design", "SZS- or ZS-pair permutation of a cell complex file");
    design->add_option("complex", o.perm, "Complex JSON file");
    design->add_option("--file", o.file, "Complex JSON file");
    design->add_flag("--json", o.json, "Machine-readable JSON output");
    design->add_option("--svg", o.svg, "Write the meander diagram of sigma to PATH");
    design->add_flag("--sz", o.sz, "SZ-pair instead of ZS-pair for planar complexes");

    auto* retract = app.add_subcommand("retract", "Retract a nose, or list the noses");
    add_input(retract);
    retract->add_option("--nose", o.nose, "Nose labels v1,v2");

    auto* scoop = app.add_subcommand("scoop", "Remove the 3-cell and one open hemisphere");
    add_input(scoop);
    scoop->add_flag("--east", o.east, "Remove O and the eastern hemisphere");
    scoop->add_flag("--west", o.west, "Remove O and the western hemisphere");

    auto* rt = app.add_subcommand("roundtrip", "sigma -> complex -> designed pair -> sigma");
    add_input(rt);

    auto* enumerate = app.add_subcommand("enumerate", "All Sturm permutations of size N");
    enumerate->add_option("--n", o.n, "Size N (odd)")->required();
    enumerate->add_flag("--ball", o.ball, "Only 3-meander templates");
    enumerate->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
    enumerate->add_option("--max-n", o.max_n, "Largest N accepted by the enumeration")->capture_default_str();
    enumerate->add_flag("--json", o.json, "Machine-readable JSON output");

    auto* render = app.add_subcommand("render", "SVG arc diagram of the meander");
    add_input(render);
    render->add_option("--svg", o.svg, "Output PATH (default stdout)");

    auto* complex = app.add_subcommand("complex", "Cell complex reconstructed from a Sturm permutation");
    add_input(complex);
    complex->add_option("--labels", o.labels, "Cell names for axis labels 1..N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*check)
            return cmd_check(o);
        if (*analyze)
            return cmd_analyze(o);
        if (*design)
            return cmd_design(o);
        if (*retract)
            return cmd_retract(o);
        if (*scoop)
            return cmd_scoop(o);
        if (*rt)
            return cmd_roundtrip(o);
        if (*enumerate)
            return cmd_enumerate(o);
        if (*render)
            return cmd_render(o);
        if (*complex)
            return cmd_complex(o);
    } catch (const sturm::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const sturm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
