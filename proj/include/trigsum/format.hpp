#pragma once

#include <string>

#include "trigsum/poly.hpp"

namespace trigsum {

/// p = content * (n+1)^plus_one * n^at_zero * (n-1)^minus_one * rest, with
/// rest a primitive integer polynomial with positive leading coefficient.
struct FactoredPoly {
  BigRational content;
  int plus_one = 0;
  int at_zero = 0;
  int minus_one = 0;
  UniPoly rest;
};

/// Splits off content and the linear factors n+1, n, n-1 by exact trial
/// division. The zero polynomial has content 0 and rest 0.
FactoredPoly factor_for_display(const UniPoly& p);

/// Integer polynomial without '*', e.g. "16n^8+64n^7-3n+540".
std::string compact_poly_string(const UniPoly& p, const std::string& var = "n");

/// e.g. "64(n+1)n(16n^8+64n^7+182n^6+322n^5+493n^4+524n^3+579n^2+360n+540)/93555".
std::string factored_string(const UniPoly& p, const std::string& var = "n");

}  // namespace trigsum
