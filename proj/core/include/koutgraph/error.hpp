#pragma once

#include <stdexcept>
#include <string>

namespace kout {

/// Base for every caller-side mistake: bad parameters, malformed inputs,
/// out-of-domain arguments. The CLI maps this family to exit code 2.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A selection profile with a self pick, a duplicate pick, a label outside
/// [1, n] or a row of the wrong length.
class InvalidProfile : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

/// Threshold or bound evaluated outside its mathematical domain.
class DomainError : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

/// Threshold query whose fields do not select a regime.
class InvalidQuery : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

/// Exhaustive enumeration refused because the instance exceeds the guard.
class InstanceTooLarge : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

}  // namespace kout
