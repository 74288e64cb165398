#pragma once

#include <stdexcept>
#include <string>

namespace whit {

// Error taxonomy shared across the library.  Every condition the CLI maps to
// a dedicated exit code gets its own type; everything else is a plain
// std::logic_error and counts as a bug.

// Bad user input: unknown type tags, malformed rationals, out-of-range
// indices, weights that violate a documented precondition of the requested
// operation, parse errors.  CLI exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Requested Cartan type is not one of the finite types supported here.
struct NonFiniteTypeError : ValidationError {
  explicit NonFiniteTypeError(const std::string& what) : ValidationError(what) {}
};

// Structure-constant signs failed the exhaustive Jacobi verification.  This
// is a hard internal error: it means the basis construction is wrong.
struct SignInconsistencyError : std::logic_error {
  explicit SignInconsistencyError(const std::string& what) : std::logic_error(what) {}
};

// A computation exceeded the configured term-count or size cap.  CLI exit 3.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// An element escaped the truncation box of a finite-window computation, so
// the window result would be untrustworthy.  CLI exit 3.
struct TruncationOverflowError : ResourceLimitError {
  explicit TruncationOverflowError(const std::string& what) : ResourceLimitError(what) {}
};

// lambda + rho failed a regularity precondition, or eigenvalues that the
// regular theory keeps separate merged; we refuse rather than report
// generalized eigenspaces.
struct SingularWeightError : ValidationError {
  explicit SingularWeightError(const std::string& what) : ValidationError(what) {}
};

// Operation requested for a scope whose center machinery is not implemented
// (anything beyond products of A1 factors plus A2).
struct UnsupportedScopeError : ValidationError {
  explicit UnsupportedScopeError(const std::string& what) : ValidationError(what) {}
};

// A structural verification that should hold by theory failed at runtime
// (selftest criteria, centrality checks requested via CLI).  CLI exit 4.
struct TheoremCheckError : std::runtime_error {
  explicit TheoremCheckError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace whit
