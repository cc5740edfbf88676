#ifndef CIRC_ERROR_HPP
#define CIRC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace circ {

// Precondition violations: non-units, non-divisors, malformed partitions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input (connection-set syntax).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size ceiling would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace circ

#endif  // CIRC_ERROR_HPP
