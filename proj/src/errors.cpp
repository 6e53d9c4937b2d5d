#include "sturm/errors.hpp"

namespace sturm {

const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotAMeander: return "NotAMeander";
    case ErrorKind::NotDissipative: return "NotDissipative";
    case ErrorKind::NotSturm: return "NotSturm";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NonUnique: return "NonUnique";
    case ErrorKind::NoCenter: return "NoCenter";
    case ErrorKind::MultipleCenters: return "MultipleCenters";
    case ErrorKind::PartitionMismatch: return "PartitionMismatch";
    case ErrorKind::PolarNose: return "PolarNose";
    case ErrorKind::NotANose: return "NotANose";
    case ErrorKind::NotBallTemplate: return "NotBallTemplate";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::NoUniqueExtremum: return "NoUniqueExtremum";
    case ErrorKind::SideRuleViolation: return "SideRuleViolation";
    case ErrorKind::NotBall: return "NotBall";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::ReconstructionAmbiguity: return "ReconstructionAmbiguity";
    case ErrorKind::NoPath: return "NoPath";
    case ErrorKind::MultiplePaths: return "MultiplePaths";
    case ErrorKind::TemplateCheckFailed: return "TemplateCheckFailed";
    }
    return "Error";
}

static std::string arc_text(Arc a) {
    return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
}

NotAMeander::NotAMeander(Arc a, Arc b, bool upper)
    : Error(ErrorKind::NotAMeander, std::string(upper ? "upper" : "lower") + " arcs " +
                                        arc_text(a) + " and " + arc_text(b) + " interleave"),
      a_(a), b_(b), upper_(upper) {}

} // namespace sturm
