#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyfun {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Domain/codomain of two arrows do not line up.
class BoundaryMismatch : public Error {
 public:
  using Error::Error;
};

// Data violates a structural invariant (functoriality, naturality, range).
class ValidationError : public Error {
 public:
  ValidationError(std::string location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

// An operation's precondition (mono, dense, one-variable shape, ...) fails.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

// Upper bound on the number of elements any single construction may produce.
struct Budget {
  static constexpr std::size_t kDefaultMaxElements = 1'000'000;

  std::size_t max_elements = kDefaultMaxElements;

  void check(std::size_t count, const char* what) const {
    if (count > max_elements) {
      throw ResourceError(std::string(what) + ": element bound " +
                          std::to_string(max_elements) + " exceeded");
    }
  }
};

}  // namespace polyfun
