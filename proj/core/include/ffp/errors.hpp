#pragma once

#include <stdexcept>
#include <string>

namespace ffp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A table (t-norm, metric or beta) was queried outside its declared grid.
class GridMissError : public Error {
public:
    explicit GridMissError(const std::string& msg) : Error(msg) {}
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A user-supplied expression could not be parsed or evaluated.
class ExpressionError : public Error {
public:
    explicit ExpressionError(const std::string& msg) : Error(msg) {}
};

/// A constructor parameter violates its constraint (e.g. capped-psi a <= 1).
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

/// A self-mapping produced a point outside the space.
class MapRangeError : public Error {
public:
    explicit MapRangeError(const std::string& msg) : Error(msg) {}
};

/// An operation's stated precondition failed (names the offending step).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// Instance and theorem profile are structurally incompatible.
class ProfileError : public Error {
public:
    explicit ProfileError(const std::string& msg) : Error(msg) {}
};

/// Unknown corpus id or profile name.
class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& msg) : Error(msg) {}
};

/// No cluster candidate with acceptable evidence in the orbit tail.
class NoClusterEvidenceError : public Error {
public:
    explicit NoClusterEvidenceError(const std::string& msg) : Error(msg) {}
};

/// The oracle's value lattice admits no valid metric at all.
class EmptySearchSpaceError : public Error {
public:
    explicit EmptySearchSpaceError(const std::string& msg) : Error(msg) {}
};

/// Malformed instance or report file.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace ffp
