#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace mct {

// Precondition of a mathematical result does not hold (triangle present,
// isolated vertex, invalid witness, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A search ran past its configured budget. `best_bound` carries the best
// value seen so far when the search has one to offer; it is not exact.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what,
                         std::optional<long long> best_bound = std::nullopt)
      : std::runtime_error(what), best_bound_(best_bound) {}

  std::optional<long long> best_bound() const { return best_bound_; }

 private:
  std::optional<long long> best_bound_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A strategy policy produced a pick that is not legal in the current state.
class PolicyFault : public std::logic_error {
 public:
  PolicyFault(const std::string& policy, int vertex, const std::string& why)
      : std::logic_error("policy '" + policy + "' picked vertex " +
                         std::to_string(vertex) + ": " + why),
        vertex_(vertex) {}

  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

// A closed form was asked for a parameter combination it does not cover.
class UnsupportedCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mct
