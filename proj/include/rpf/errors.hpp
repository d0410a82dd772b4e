#pragma once

#include <stdexcept>
#include <string>

namespace rpf {

// Enumeration or iteration exceeded its configured budget.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A shift configuration places two skeleton entries on top of each other.
struct wall_error : std::runtime_error {
  explicit wall_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rpf
