#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braid3 {

// Base class for all domain errors raised by the library. CLI maps these to
// exit code 1; SyntaxError maps to exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text. `offset` is the byte offset of the offending token.
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

struct NotPositive : Error {
    explicit NotPositive(const std::string& msg = "word is not positive") : Error(msg) {}
};

struct NotSummit : Error {
    explicit NotSummit(const std::string& msg = "element is not a summit element") : Error(msg) {}
};

struct MoveNotApplicable : Error {
    explicit MoveNotApplicable(const std::string& msg) : Error(msg) {}
};

struct NotAKnot : Error {
    explicit NotAKnot(const std::string& msg = "closure is not a knot") : Error(msg) {}
};

struct IsUnknot : Error {
    explicit IsUnknot(const std::string& msg = "closure is the unknot") : Error(msg) {}
};

struct SylZero : Error {
    explicit SylZero(const std::string& msg = "summit form is a pure delta power") : Error(msg) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& msg) : Error(msg) {}
};

// No witness pattern applies; consistent with the possibility u(K) = g(K).
struct NoPattern : Error {
    explicit NoPattern(const std::string& msg = "no witness pattern applies") : Error(msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// A computation would materialize an unreasonably large word (e.g. expanding
// a syllable with an astronomically large exponent letter by letter).
struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& msg) : Error(msg) {}
};

}  // namespace braid3
