#include "fixtures.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace sturm;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = std::string(STURM_BINARY_DIR) + "/" + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("complex documents survive a round trip") {
    auto c = fixtures::octahedron_complex();
    auto j = complex_to_json(c);
    CHECK(complex_to_json(complex_from_json(j)) == j);
    CHECK(j["ball"]["id"] == 27);
    CHECK(j["decoration"]["we"] == json::array({1, 8, 3, 11, 2}));
}

TEST_CASE("malformed complex documents") {
    CHECK_THROWS_AS(complex_from_json(json::array()), ParseError);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"edges": [], "faces": []})")), ParseError);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"cells": [], "edges": [{"id": 1}]})")), ParseError);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"cells": [{"id": 1}], "edges": [], "faces": []})")), ParseError);
    CHECK_THROWS_AS(load_complex("/nonexistent/complex.json"), ParseError);
    auto bad = temp_file("bad_complex.json", "{ not json");
    CHECK_THROWS_AS(load_complex(bad), ParseError);
}

TEST_CASE("permutation files") {
    auto path = temp_file("oct.perm", "# octahedron\n\n1 24 19 4 5 18 17 8 9 16 25 26 15 14 13 10 7 6 3 20 23 22 21 2 11 12 27\n");
    CHECK(load_permutation(path) == fixtures::octahedron());
    auto empty = temp_file("empty.perm", "# nothing\n");
    CHECK_THROWS_AS(load_permutation(empty), ParseError);
    CHECK_THROWS_AS(load_permutation("/nonexistent.perm"), ParseError);
}

TEST_CASE("analysis report") {
    auto r = analysis_report(fixtures::octahedron());
    CHECK(r["sturm"]["sturm"] == true);
    CHECK(r["morse"].size() == 27);
    CHECK(r["morse"][fixtures::axis_position(27) - 1] == 3);
    CHECK(r["zero"]["unsigned"].size() == 27);
    CHECK(r["zero"]["sign"].size() == 27);
    CHECK(r["hetero"].is_array());
    CHECK(r["hemispheres"].contains(std::to_string(fixtures::axis_position(27))));
    CHECK(r["template"]["template"] == true);
    CHECK(r["sturm_3ball"] == true);
    CHECK(r["anatomy"]["center"] == fixtures::axis_position(27));
    CHECK(analysis_report(fixtures::octahedron()) == r);
}

TEST_CASE("analysis report of a non-Sturm permutation") {
    auto r = analysis_report(Permutation({1, 3, 2}));
    CHECK(r["sturm"]["sturm"] == false);
    CHECK_FALSE(r.contains("anatomy"));
}

TEST_CASE("svg rendering") {
    auto p = fixtures::octahedron();
    auto svg = render_svg(p);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count(svg, "class=\"upper\"") == 13);
    CHECK(count(svg, "class=\"lower\"") == 13);
    CHECK(count(svg, " A ") == 26);
    CHECK(svg.find("</svg>") != std::string::npos);
    auto before = analysis_report(p);
    render_svg(p);
    CHECK(analysis_report(p) == before);
}

TEST_CASE("error kinds") {
    try {
        throw MultiplePaths("x");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MultiplePaths);
        CHECK(std::string(e.what()).find("MultiplePaths") != std::string::npos);
    }
}

} // TEST_SUITE
