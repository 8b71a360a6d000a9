#pragma once

#include <vector>

#include "trigsum/poly.hpp"

namespace trigsum {

enum class ChebyshevKind { T, U };

/// Memoized Chebyshev polynomials from P_m = 2x P_{m-1} - P_{m-2}, with
/// T_0 = U_0 = 1, T_1 = x, U_1 = 2x. Not thread-safe; use one per thread.
class ChebyshevGen {
 public:
  const UniPoly& get(ChebyshevKind kind, long m);

 private:
  std::vector<UniPoly> t_;
  std::vector<UniPoly> u_;
};

/// Convenience wrapper over a fresh generator.
UniPoly chebyshev(ChebyshevKind kind, long m);

}  // namespace trigsum
