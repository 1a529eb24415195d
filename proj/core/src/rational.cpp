#include "fingeo/rational.hpp"

#include "fingeo/errors.hpp"

namespace fingeo {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw PreconditionError("not a rational number: '" + s + "'");
  }
}

std::string to_string(const Interval& iv) {
  if (iv.exact()) return to_string(iv.lo);
  return "[" + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
}

Interval sqrt_enclosure(const BigInt& n, unsigned digits) {
  if (n < 0) throw PreconditionError("sqrt_enclosure: negative argument");
  const BigInt root = boost::multiprecision::sqrt(n);
  if (root * root == n) return {Rational(root), Rational(root)};
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const BigInt radicand = n * scale * scale;
  const BigInt scaled = boost::multiprecision::sqrt(radicand);
  return {Rational(scaled, scale), Rational(scaled + 1, scale)};
}

}  // namespace fingeo
