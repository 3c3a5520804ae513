#pragma once

#include <stdexcept>
#include <string>

namespace qlink {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct InexactDivision : Error {
    explicit InexactDivision(const std::string& what)
        : Error("inexact division: " + what) {}
};

struct SizeError : Error {
    explicit SizeError(const std::string& what) : Error("size error: " + what) {}
};

struct VanishingAlexander : Error {
    explicit VanishingAlexander(const std::string& what)
        : Error("vanishing Alexander function: " + what) {}
};

struct DenominatorVanishesToOrder : Error {
    explicit DenominatorVanishesToOrder(const std::string& what)
        : Error("denominator vanishes through requested order: " + what) {}
};

struct InterpolationInconsistent : Error {
    explicit InterpolationInconsistent(const std::string& what)
        : Error("interpolation inconsistent: " + what) {}
};

struct DegreeBoundViolated : Error {
    explicit DegreeBoundViolated(const std::string& what)
        : Error("degree bound violated: " + what) {}
};

struct NotAKnot : Error {
    explicit NotAKnot(const std::string& what) : Error("not a knot: " + what) {}
};

struct NegativePowersSurvive : Error {
    explicit NegativePowersSurvive(const std::string& what)
        : Error("negative powers survive: " + what) {}
};

struct JetCapExceeded : Error {
    explicit JetCapExceeded(const std::string& what)
        : Error("jet cap exceeded: " + what) {}
};

struct NonzeroConstantTerm : Error {
    explicit NonzeroConstantTerm(const std::string& what)
        : Error("nonzero constant term: " + what) {}
};

struct MissingAssignment : Error {
    explicit MissingAssignment(const std::string& what)
        : Error("missing assignment: " + what) {}
};

}  // namespace qlink
