#ifndef BILCERT_ERRORS_HPP
#define BILCERT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace bilcert {

// Base class for all domain errors. The CLI maps these to exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input document (edge list or JSON graph).
struct ParseError : Error {
    int line = 0;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Raised by bipartition() on non-bipartite input; carries an odd cycle.
struct OddCycleError : Error {
    std::vector<int> witness_edges;
    explicit OddCycleError(std::vector<int> edges);
};

struct UnknownEdgeError : Error {
    explicit UnknownEdgeError(int id)
        : Error("unknown edge id e" + std::to_string(id)) {}
};

struct UnknownVertexError : Error {
    explicit UnknownVertexError(int v)
        : Error("unknown vertex " + std::to_string(v)) {}
};

// A monomial mentions a variable outside the term order's domain.
struct ForeignVariableError : Error {
    explicit ForeignVariableError(int id)
        : Error("variable e" + std::to_string(id) + " outside the order's domain") {}
};

// Two presentations live in different ambient rings or orders.
struct AmbientMismatchError : Error {
    AmbientMismatchError() : Error("ideal presentations have different ambient order") {}
};

// An intermediate polynomial left the {zero, +-monomial, pure difference}
// class. Cannot happen for inputs produced by the toric/pom modules; kept
// as a runtime guard.
struct ClassEscapeError : Error {
    explicit ClassEscapeError(const std::string& what_happened)
        : Error("two-term class escape: " + what_happened) {}
};

struct NotSquarefreeError : Error {
    explicit NotSquarefreeError(const std::string& where)
        : Error("monomial ideal is not squarefree: " + where) {}
};

}  // namespace bilcert

#endif
