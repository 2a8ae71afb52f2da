#ifndef TGLAB_ERRORS_HPP_
#define TGLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tglab {

// Raised when an argument or an input file violates an operation's contract.
class InvalidInputError : public std::runtime_error {
 public:
  explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an input is structurally valid but outside supported limits,
// e.g. an exhaustive search over more nodes than the configured cap.
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tglab

#endif  // TGLAB_ERRORS_HPP_
