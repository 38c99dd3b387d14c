#ifndef SEMWIDTH_ERRORS_HPP
#define SEMWIDTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semwidth {

// Base class for everything this library throws on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Query text that does not conform to the grammar. Positions are 1-based.
class ParseError final : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line),
          column(column) {}

    int line;
    int column;
};

// Structurally well-formed input that violates a semantic requirement:
// infeasible LP, degenerate hypergraph, size cap exceeded, unsupported case.
class DomainError final : public Error {
public:
    using Error::Error;
};

}  // namespace semwidth

#endif
