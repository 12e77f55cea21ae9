#include "weilgraph/bigint.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace weilgraph {

BigInt BigInt::parse(const std::string& text) {
  try {
    return BigInt(Rep(text));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
}

BigInt BigInt::nearest(double x) {
  if (!std::isfinite(x)) throw std::domain_error("BigInt::nearest: non-finite value");
  return BigInt(Rep(std::round(x)));
}

bool BigInt::fits_int64() const {
  return value_ >= std::numeric_limits<std::int64_t>::min() &&
         value_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits: " + str());
  return value_.convert_to<std::int64_t>();
}

std::ostream& operator<<(std::ostream& os, const BigInt& b) { return os << b.value_; }

BigInt abs(const BigInt& x) { return x.sign() < 0 ? -x : x; }

BigInt gcd(const BigInt& a, const BigInt& b) {
  return BigInt(BigInt::Rep(boost::multiprecision::gcd(a.rep(), b.rep())));
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return BigInt(BigInt::Rep(boost::multiprecision::pow(base.rep(), exponent)));
}

}  // namespace weilgraph
