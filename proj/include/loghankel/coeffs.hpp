#pragma once

#include "loghankel/series.hpp"

namespace loghankel {

/// Taylor coefficients a2, a3, a4 of f(z) = z + a2 z^2 + a3 z^3 + a4 z^4 + ...
struct CoeffTriple {
  Complex a2{};
  Complex a3{};
  Complex a4{};
};

}  // namespace loghankel
