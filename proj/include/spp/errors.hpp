#pragma once

#include <stdexcept>
#include <string>

namespace spp {

// Bad arguments, malformed input files, violated preconditions. Maps to CLI
// exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An instance exceeds a configured search cap (vertex count, path count,
// routing pairs). Maps to CLI exit code 3.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spp
