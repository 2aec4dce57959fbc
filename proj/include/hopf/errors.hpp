// Error types shared by all hopf modules.

#ifndef HOPF_ERRORS_HPP_
#define HOPF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hopf {

// Bad user input: malformed spec strings, out-of-range dimensions,
// foreign labels. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A self-check failed (table bug, inconsistent data). Never expected.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace hopf

#endif
