#ifndef DSEL_ERROR_HPP
#define DSEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dsel {

/// Bad user input: malformed files, unknown names, out-of-range parameters.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A library invariant did not hold. Indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dsel

#endif  // DSEL_ERROR_HPP
