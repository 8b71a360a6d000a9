#include "trigsum/chebyshev.hpp"

#include "trigsum/errors.hpp"

namespace trigsum {

const UniPoly& ChebyshevGen::get(ChebyshevKind kind, long m) {
  if (m < 0) throw DomainError("Chebyshev index must be nonnegative");
  auto& cache = kind == ChebyshevKind::T ? t_ : u_;
  if (cache.empty()) {
    cache.push_back(UniPoly::constant(BigRational(1)));
    cache.push_back(UniPoly::monomial(BigRational(kind == ChebyshevKind::T ? 1 : 2), 1));
  }
  const UniPoly two_x = UniPoly::monomial(BigRational(2), 1);
  while (static_cast<long>(cache.size()) <= m) {
    const std::size_t i = cache.size();
    cache.push_back(two_x * cache[i - 1] - cache[i - 2]);
  }
  return cache[static_cast<std::size_t>(m)];
}

UniPoly chebyshev(ChebyshevKind kind, long m) {
  ChebyshevGen gen;
  return gen.get(kind, m);
}

}  // namespace trigsum
