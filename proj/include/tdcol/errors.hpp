#pragma once

#include <stdexcept>
#include <string>

namespace tdcol {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input digraph fails the transitivity requirement of the operation.
struct NotTransitiveError : Error {
    using Error::Error;
};

// A replication multiplicity is zero or negative.
struct ZeroMultiplicityError : Error {
    using Error::Error;
};

// Instance exceeds a hard size bound of an exhaustive routine.
struct TooLargeError : Error {
    using Error::Error;
};

// Structural precondition of a specialised solver does not hold.
struct PreconditionViolatedError : Error {
    using Error::Error;
};

// Vertex lists reference vertices outside the target.
struct BadListsError : Error {
    using Error::Error;
};

// Claimed subdigraph embedding is not one.
struct NotEmbeddedError : Error {
    using Error::Error;
};

// Bipartite instance lacks a valid marked copy of the target.
struct NoEmbeddingError : Error {
    using Error::Error;
};

// Target has a dominated white vertex where domination-freeness is required.
struct NotDominationFreeError : Error {
    using Error::Error;
};

// A side of a bipartite target is larger than the path-gadget length allows.
struct SideTooLargeError : Error {
    using Error::Error;
};

// Vertex index out of range for the declared size.
struct RangeError : Error {
    using Error::Error;
};

// Operation needs a non-empty graph.
struct EmptyGraphError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace tdcol
