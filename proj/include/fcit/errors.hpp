#ifndef FCIT_ERRORS_HPP
#define FCIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fcit {

/// Violation of a documented precondition (bad arguments, broken invariants).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Rejection sampling exhausted its attempt budget without producing
/// enough valid samples; the free space is (nearly) empty.
class SamplingStarved : public std::runtime_error {
 public:
  SamplingStarved(const std::string& what, long long attempts, long long produced)
      : std::runtime_error(what), attempts(attempts), produced(produced) {}
  long long attempts;
  long long produced;
};

/// Malformed input text (JSON syntax, CSV rows). Maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input with inconsistent content (dimension mismatch,
/// start in collision). Maps to exit code 3.
class SemanticError : public std::runtime_error {
 public:
  explicit SemanticError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failure (missing file, unwritable directory). Maps to exit code 4.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fcit

#endif  // FCIT_ERRORS_HPP
