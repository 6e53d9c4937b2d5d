#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sturm {

enum class ErrorKind {
    Parse,
    NotAMeander,
    NotDissipative,
    NotSturm,
    BoundExceeded,
    NonUnique,
    NoCenter,
    MultipleCenters,
    PartitionMismatch,
    PolarNose,
    NotANose,
    NotBallTemplate,
    ValidationFailed,
    NoUniqueExtremum,
    SideRuleViolation,
    NotBall,
    NotPlanar,
    ReconstructionAmbiguity,
    NoPath,
    MultiplePaths,
    TemplateCheckFailed,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

#define STURM_ERROR_CLASS(Name)                                             \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(ErrorKind::Name, what) {} \
    };

STURM_ERROR_CLASS(NotDissipative)
STURM_ERROR_CLASS(NotSturm)
STURM_ERROR_CLASS(BoundExceeded)
STURM_ERROR_CLASS(NonUnique)
STURM_ERROR_CLASS(NoCenter)
STURM_ERROR_CLASS(MultipleCenters)
STURM_ERROR_CLASS(PartitionMismatch)
STURM_ERROR_CLASS(PolarNose)
STURM_ERROR_CLASS(NotANose)
STURM_ERROR_CLASS(NotBallTemplate)
STURM_ERROR_CLASS(ValidationFailed)
STURM_ERROR_CLASS(NoUniqueExtremum)
STURM_ERROR_CLASS(SideRuleViolation)
STURM_ERROR_CLASS(NotBall)
STURM_ERROR_CLASS(NotPlanar)
STURM_ERROR_CLASS(ReconstructionAmbiguity)
STURM_ERROR_CLASS(NoPath)
STURM_ERROR_CLASS(MultiplePaths)
STURM_ERROR_CLASS(TemplateCheckFailed)

#undef STURM_ERROR_CLASS

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

// An arc is an unordered pair of axis positions, stored with first < second.
using Arc = std::pair<int, int>;

class NotAMeander : public Error {
public:
    NotAMeander(Arc a, Arc b, bool upper);
    Arc first() const { return a_; }
    Arc second() const { return b_; }
    bool upper() const { return upper_; }

private:
    Arc a_, b_;
    bool upper_;
};

} // namespace sturm
