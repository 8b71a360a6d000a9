#include "trigsum/format.hpp"

#include <sstream>

namespace trigsum {

namespace {

// Divides by (n - root) while the remainder vanishes; returns the multiplicity.
int strip_root(UniPoly& p, long root) {
  const UniPoly factor = UniPoly::linear(BigRational(1), BigRational(-root));
  int count = 0;
  while (p.degree() >= 1) {
    DivRem qr = divrem(p, factor);
    if (!qr.remainder.is_zero()) break;
    p = std::move(qr.quotient);
    ++count;
  }
  return count;
}

std::string power_suffix(int e) { return e == 1 ? std::string() : "^" + std::to_string(e); }

}  // namespace

FactoredPoly factor_for_display(const UniPoly& p) {
  FactoredPoly out{BigRational(0), 0, 0, 0, UniPoly()};
  if (p.is_zero()) return out;
  // content = sign(lead) * gcd(numerators) / lcm(denominators)
  BigInteger g(0);
  BigInteger l(1);
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    g = gcd(g, c.num());
    l = lcm(l, c.den());
  }
  out.content = BigRational(g, l);
  if (p.leading().sign() < 0) out.content = -out.content;
  UniPoly rest = p;
  rest *= out.content.inverse();
  out.plus_one = strip_root(rest, -1);
  out.at_zero = strip_root(rest, 0);
  out.minus_one = strip_root(rest, 1);
  out.rest = std::move(rest);
  return out;
}

std::string compact_poly_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    BigRational c = p.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    if (c.sign() < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    const bool unit = c == BigRational(1);
    if (i == 0 || !unit) os << c.to_string();
    if (i >= 1) os << var << power_suffix(i);
  }
  return os.str();
}

std::string factored_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  const FactoredPoly f = factor_for_display(p);
  std::string factors;
  if (f.plus_one > 0) factors += "(" + var + "+1)" + power_suffix(f.plus_one);
  if (f.at_zero > 0) factors += var + power_suffix(f.at_zero);
  if (f.minus_one > 0) factors += "(" + var + "-1)" + power_suffix(f.minus_one);
  const bool rest_is_one = f.rest == UniPoly::constant(BigRational(1));
  if (!rest_is_one) {
    const bool bare = factors.empty() && f.content.num().abs() == BigInteger(1) && f.content.is_integer();
    factors += bare ? compact_poly_string(f.rest, var) : "(" + compact_poly_string(f.rest, var) + ")";
  }
  std::string out = f.content.sign() < 0 ? "-" : "";
  const BigInteger num = f.content.num().abs();
  if (num != BigInteger(1) || factors.empty()) out += num.to_string();
  out += factors;
  if (f.content.den() != BigInteger(1)) out += "/" + f.content.den().to_string();
  return out;
}

}  // namespace trigsum
