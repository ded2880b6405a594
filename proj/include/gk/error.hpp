// Exception types shared by every gk module.

#ifndef GK_ERROR_HPP_
#define GK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gk {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Input outside an operation's mathematical domain (e.g. factorize(0)).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // Group parameters that violate a family's constraints, or a formula
  // evaluated outside the parameters it is valid for.
  class ParameterError : public Error {
   public:
    using Error::Error;
  };

  class ScopeError : public Error {
   public:
    using Error::Error;
  };

  class NotImplementedError : public Error {
   public:
    using Error::Error;
  };

  // An internal cross-check failed (Cauchy consistency, closure overshoot).
  class ConsistencyError : public Error {
   public:
    using Error::Error;
  };

  class BoundsError : public Error {
   public:
    using Error::Error;
  };

}  // namespace gk

#endif  // GK_ERROR_HPP_
