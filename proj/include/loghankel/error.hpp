#pragma once

#include <stdexcept>

namespace loghankel {

// Parameter outside an admissible range (family parameters, Schur parameters,
// grid settings).
class RangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Series division by a series with vanishing constant term.
class SingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// log/pow of a series whose constant term is not 1, or exp of a series whose
// constant term is not 0.
class BranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace loghankel
