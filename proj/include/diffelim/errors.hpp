#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace diffelim {

// Input violates one of the standing assumptions on a system (tag "P1", "P2", "P3")
// or is otherwise malformed.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string tag, const std::string& msg)
      : std::runtime_error(msg), tag_(std::move(tag)) {}
  const std::string& tag() const { return tag_; }

 private:
  std::string tag_;
};

class ParseError : public ValidationError {
 public:
  ParseError(int line, int col, const std::string& msg)
      : ValidationError("parse", "line " + std::to_string(line) + ", column " +
                                     std::to_string(col) + ": " + msg),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

// Missing derivation rule, bad option combination, precondition failure.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input is not super essential; carries the extracted subsystem (1-based).
class NotSuperEssential : public ConfigurationError {
 public:
  NotSuperEssential(std::vector<int> subsystem, const std::string& msg)
      : ConfigurationError(msg), subsystem_(std::move(subsystem)) {}
  const std::vector<int>& subsystem() const { return subsystem_; }

 private:
  std::vector<int> subsystem_;
};

class DegenerateConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TightnessRetryExceeded : public DegenerateConfiguration {
 public:
  using DegenerateConfiguration::DegenerateConfiguration;
};

// Every specialization path vanished.
class VanishedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked internal identity failed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace diffelim
