#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rsched {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Instance or formula violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A schedule places jobs on machines outside their eligible set.
class ScheduleViolation : public Error {
 public:
  using Pair = std::pair<std::string, std::string>;  // (job id, machine id)

  explicit ScheduleViolation(std::vector<Pair> pairs);
  const std::vector<Pair>& offending() const noexcept { return pairs_; }

 private:
  std::vector<Pair> pairs_;
};

/// Jobs that no machine can process.
class UnschedulableJobs : public Error {
 public:
  explicit UnschedulableJobs(std::vector<std::string> jobs);
  const std::vector<std::string>& jobs() const noexcept { return jobs_; }

 private:
  std::vector<std::string> jobs_;
};

/// An exhaustive oracle was asked to run beyond its size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace rsched
