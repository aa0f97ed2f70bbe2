#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace railsched {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed document: bad JSON, wrong field type, unknown field, version
// mismatch. `context` is a field path such as "trains[2].begin_day" or a
// "line N, column M" location.
class ParseError : public Error {
 public:
  ParseError(std::string context, const std::string& message)
      : Error(context.empty() ? message : context + ": " + message),
        context_(std::move(context)) {}

  const std::string& context() const noexcept { return context_; }

 private:
  std::string context_;
};

// A query outside the model's domain, e.g. a day outside a train's window.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidInstanceError : public Error {
 public:
  InvalidInstanceError(const std::string& message,
                       std::vector<std::string> defects)
      : Error(message), defects_(std::move(defects)) {}

  const std::vector<std::string>& defects() const noexcept { return defects_; }

 private:
  std::vector<std::string> defects_;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Raised when an external variable assignment cannot be turned into a
// schedule. `offenders` lists the variable names at fault.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& message, std::vector<std::string> offenders)
      : Error(message), offenders_(std::move(offenders)) {}

  const std::vector<std::string>& offenders() const noexcept {
    return offenders_;
  }

 private:
  std::vector<std::string> offenders_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace railsched
