#pragma once

#include <stdexcept>
#include <string>

namespace dedekind {

/// Two arguments that must be coprime share a factor.
class NotCoprime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Jacobi symbol or a mod-8 congruence was requested for an even modulus.
class EvenModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural precondition failed; the message names the condition.
class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dedekind
