#pragma once

#include <stdexcept>
#include <string>

namespace qchrom {

// Precondition / argument failures. The CLI maps these to exit code 2.
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource budget would be exceeded. Carries the budget name so
// callers can report which knob to raise. CLI exit code 3.
class budget_error : public std::runtime_error {
 public:
  budget_error(std::string budget_name, const std::string& detail)
      : std::runtime_error(budget_name + " budget exceeded: " + detail),
        budget_name_(std::move(budget_name)) {}

  const std::string& budget_name() const { return budget_name_; }

 private:
  std::string budget_name_;
};

// An identity that should hold unconditionally failed; the message carries the
// counterexample. CLI exit code 4.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qchrom
