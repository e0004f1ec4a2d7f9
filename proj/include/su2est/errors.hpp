#pragma once

#include <stdexcept>
#include <string>

namespace su2est {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: caller supplied something outside the documented domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Valid arguments, but the estimation problem has no finite bound.
class Infeasible : public Error {
 public:
  using Error::Error;
};

class InvalidBloch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};
class InvalidAxis : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};
class InvalidKet : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};
class InvalidWeight : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};
class RequiresPureState : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DegenerateRotation : public Infeasible {
 public:
  using Infeasible::Infeasible;
};
class SingularReparam : public Infeasible {
 public:
  using Infeasible::Infeasible;
};
class SingularQFIM : public Infeasible {
 public:
  using Infeasible::Infeasible;
};
class NoOptimalProbe : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

}  // namespace su2est
