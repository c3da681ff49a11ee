#pragma once

#include <stdexcept>
#include <string>

namespace hyperc {

// Input hypergraph is not connected (or has isolated nodes); the solvers
// require connectivity for a positive eigenvector to exist.
class NotConnectedError : public std::runtime_error {
 public:
  explicit NotConnectedError(const std::string& what) : std::runtime_error(what) {}
};

// A solver failed to produce a usable result (zero converged restarts,
// inner eigenvector iteration breakdown, ...).
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or stream.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperc
