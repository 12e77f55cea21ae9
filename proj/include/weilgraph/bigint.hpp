#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace weilgraph {

// Arbitrary-precision integer usable as an Eigen scalar.
//
// boost::multiprecision::number carries unconstrained converting
// constructors that Eigen 3.4 trips over in C++20 mode, so the value is
// wrapped behind a closed set of operators instead.
class BigInt {
public:
  using Rep = boost::multiprecision::cpp_int;

  BigInt() = default;
  BigInt(long long v) : value_(v) {}
  explicit BigInt(Rep v) : value_(std::move(v)) {}
  // Nearest integer to a finite double.
  static BigInt nearest(double x);
  static BigInt parse(const std::string& text);

  const Rep& rep() const { return value_; }

  BigInt& operator+=(const BigInt& o) { value_ += o.value_; return *this; }
  BigInt& operator-=(const BigInt& o) { value_ -= o.value_; return *this; }
  BigInt& operator*=(const BigInt& o) { value_ *= o.value_; return *this; }
  // Truncating division, as for built-in integers.
  BigInt& operator/=(const BigInt& o) { value_ /= o.value_; return *this; }
  BigInt& operator%=(const BigInt& o) { value_ %= o.value_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
  BigInt operator-() const { return BigInt(Rep(-value_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return a.value_.compare(b.value_) <=> 0;
  }

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }
  bool fits_int64() const;
  std::int64_t to_int64() const;
  double to_double() const { return value_.convert_to<double>(); }
  std::string str() const { return value_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& b);

private:
  Rep value_;
};

BigInt abs(const BigInt& x);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned exponent);

}  // namespace weilgraph

namespace Eigen {
template <>
struct NumTraits<weilgraph::BigInt> : GenericNumTraits<weilgraph::BigInt> {
  using Real = weilgraph::BigInt;
  using NonInteger = weilgraph::BigInt;
  using Nested = weilgraph::BigInt;
  using Literal = weilgraph::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
