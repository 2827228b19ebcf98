#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pdpm {

// Bad arguments or violated operation domain (unknown vertex, invalid range, ...).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A construction precondition does not hold (insufficient multiplicity, bad partition, ...).
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The input is outside the supported semantics (e.g. odd-order odd-connectivity).
struct unsupported_error : std::runtime_error {
  explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap or node budget was exceeded. Carries whatever was counted so far.
struct budget_error : std::runtime_error {
  long long counted;
  budget_error(const std::string& msg, long long counted_so_far)
      : std::runtime_error(msg), counted(counted_so_far) {}
};

// Internal consistency violation between related artifacts (provenance vs graph, ...).
struct integrity_error : std::runtime_error {
  explicit integrity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A data asset failed its load-time checks. Lists every violated property.
struct validation_error : std::runtime_error {
  std::vector<std::string> violations;
  explicit validation_error(std::vector<std::string> v)
      : std::runtime_error(join(v)), violations(std::move(v)) {}

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "validation failed:";
    for (const auto& x : v) {
      s += "\n  - ";
      s += x;
    }
    return s;
  }
};

}  // namespace pdpm
