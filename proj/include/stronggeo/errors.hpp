#pragma once

#include <stdexcept>
#include <string>

namespace stronggeo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct ZeroWitness : Error {
    using Error::Error;
};
struct TooFewPoints : Error {
    using Error::Error;
};
struct UnknownLabel : Error {
    using Error::Error;
};
struct DegenerateSupport : Error {
    using Error::Error;
};
struct ConsecutiveArcs : Error {
    using Error::Error;
};
struct ProjectionCenterArc : Error {
    using Error::Error;
};
struct NoCrossing : Error {
    using Error::Error;
};
struct NonGenericShadow : Error {
    using Error::Error;
};
struct DegenerateConfiguration : Error {
    using Error::Error;
};
struct MalformedDiagram : Error {
    using Error::Error;
};
struct SearchTooLarge : Error {
    using Error::Error;
};
struct MissingWedgeEntry : Error {
    using Error::Error;
};
struct KindMismatch : Error {
    using Error::Error;
};

// Text input errors carry a location.
struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(int line_, int column_, const std::string& expectation)
        : Error("syntax error at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": expected " + expectation),
          line(line_),
          column(column_) {}
};

struct ValidationError : Error {
    ValidationError(int id, const std::string& reason)
        : Error("invalid diagram: crossing " + std::to_string(id) + ": " + reason) {}
    explicit ValidationError(const std::string& reason) : Error("invalid diagram: " + reason) {}
};

}  // namespace stronggeo
