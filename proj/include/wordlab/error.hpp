#pragma once

#include <stdexcept>
#include <string>

namespace wordlab {

// Precondition violated by the caller's input (letter outside the alphabet,
// non-equivalent pair handed to a derivation, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(std::string const& what) : std::domain_error(what) {}
};

// A configured enumeration or counting bound would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(std::string const& what)
      : std::runtime_error(what) {}
};

}  // namespace wordlab
