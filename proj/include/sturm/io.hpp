#pragma once

#include "sturm/cell_complex.hpp"
#include "sturm/path_designer.hpp"
#include "sturm/surgery.hpp"

#include <json.hpp>

#include <string>

namespace sturm {

using json = nlohmann::json;

// Complex file format: {cells, edges, faces, ball?, decoration?}. Throws ParseError.
CellComplex complex_from_json(const json& j);
json complex_to_json(const CellComplex& c);
CellComplex load_complex(const std::string& path);

json verdict_to_json(const SturmVerdict& v);
json template_to_json(const TemplateVerdict& v);
json anatomy_to_json(const BallAnatomy& a);
json validation_to_json(const TemplateValidation& v);
json pair_to_json(const PathPair& pp);
json scoop_to_json(const ScoopResult& s);

// Structured analysis document: morse, zero{unsigned, sign}, hetero,
// hemispheres{v: {j: {minus, plus}}} plus verdicts and anatomy when applicable.
json analysis_report(const Permutation& p);

// Reads a permutation from a file (first non-empty, non-comment line).
Permutation load_permutation(const std::string& path);

// Arc diagram: semicircles over integer axis positions, labels and Morse numbers.
std::string render_svg(const Permutation& p);

} // namespace sturm
