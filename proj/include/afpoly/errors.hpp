#pragma once

#include <stdexcept>
#include <string>

namespace afpoly {

// Bad input: syntax errors, invalid hexagon layouts, malformed chain specs.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact computation was refused because the instance exceeds the
// configured bound. The oracle never truncates silently.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A runtime self-check failed; indicates a bug, not a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace afpoly
