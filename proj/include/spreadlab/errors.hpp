#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spreadlab {

struct BoundExceeded : std::runtime_error {
  std::uint64_t limit;
  BoundExceeded(const std::string& what, std::uint64_t lim)
      : std::runtime_error(what + " (configured limit " + std::to_string(lim) + ")"),
        limit(lim) {}
};

struct MembershipError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace spreadlab
