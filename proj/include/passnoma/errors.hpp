#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace passnoma {

// Root of the library's exception hierarchy; everything thrown on purpose derives
// from this, so callers can catch passnoma::error at the CLI boundary.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller passed a structurally invalid argument (empty rule, reversed interval, ...).
class argument_error : public error {
 public:
  using error::error;
};

// A mathematically out-of-domain input (e.g. the exponential integral at x >= 0).
class domain_error : public error {
 public:
  using error::error;
};

// A numeric evaluation failed; carries the abscissa at which it happened.
class numeric_error : public error {
 public:
  numeric_error(const std::string& what, double abscissa)
      : error(what + " (at abscissa " + std::to_string(abscissa) + ")"),
        abscissa_(abscissa) {}
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

// Configuration failed validation; lists every violated invariant, not just the first.
class validation_error : public error {
 public:
  validation_error(const std::string& what, std::vector<std::string> violations)
      : error(join(what, violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::string& what, const std::vector<std::string>& v) {
    std::string out = what;
    for (const auto& s : v) {
      out += "\n  - " + s;
    }
    return out;
  }
  std::vector<std::string> violations_;
};

// A request is valid in form but infeasible for the given parameters
// (e.g. a power split that can never meet the far node's SINR target).
class infeasibility_error : public error {
 public:
  infeasibility_error(const std::string& what, std::string condition)
      : error(what + " [violated condition: " + condition + "]"),
        condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

// A combination of options the toolkit deliberately does not implement.
class unsupported_error : public error {
 public:
  using error::error;
};

// Filesystem failure: unreadable input or unwritable output.
class io_error : public error {
 public:
  using error::error;
};

}  // namespace passnoma
