#pragma once

#include <stdexcept>
#include <string>

namespace fingeo {

/// An operation was called outside its domain (bad parameters, violated
/// preconditions, mixed operands).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit would be exceeded.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The GF(p) kernel of a mod-p incidence system is too large to walk
/// exhaustively; callers should switch to sampling mode.
class KernelTooLarge : public LimitExceeded {
 public:
  using LimitExceeded::LimitExceeded;
};

}  // namespace fingeo
