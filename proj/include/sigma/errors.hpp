#ifndef SIGMA_ERRORS_HPP
#define SIGMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sigma {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(std::string const &what) : std::runtime_error(what) {}
};

// A configured cap was exceeded (group too large, too many subgroups,
// too many Hall sets).  Distinct from a wrong answer: callers that see
// this must report a skip, never a verdict.
class ResourceError : public Error {
public:
  explicit ResourceError(std::string const &what) : Error(what) {}
};

// Malformed textual input (group files, partition literals, cycle strings).
class ParseError : public Error {
public:
  explicit ParseError(std::string const &what) : Error(what) {}
};

// Structurally invalid arguments: degree mismatches, subgroup not contained
// in the claimed ambient group, quotient by a non-normal subgroup, a prime
// not covered by a partition, and the like.
class DomainError : public Error {
public:
  explicit DomainError(std::string const &what) : Error(what) {}
};

} // namespace sigma

#endif
