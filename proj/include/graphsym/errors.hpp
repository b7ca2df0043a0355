#pragma once

#include <stdexcept>

namespace graphsym {

/// Bad arguments, malformed files, mismatched degrees.
class InputError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by operations that are only defined on connected graphs.
class DisconnectedError : public std::runtime_error
{
public:
  DisconnectedError() : std::runtime_error("graph is not connected") {}
  using std::runtime_error::runtime_error;
};

/// A construction or search would exceed its configured size budget.
class ResourceError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace graphsym
