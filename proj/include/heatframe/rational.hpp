#ifndef HEATFRAME_RATIONAL_HPP
#define HEATFRAME_RATIONAL_HPP

#include <string>
#include <string_view>

#include "heatframe/bigint.hpp"

namespace heatframe {

/// Reduced fraction over BigInt. Invariants: gcd(|num|, den) = 1, den >= 1,
/// zero is 0/1. Every scalar in this project is one of these; there is no
/// floating point anywhere.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  /// Accepts "p", "-p", "p/q".
  static Rational from_string(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }
  bool is_negative() const { return num_.is_negative(); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const;

  int compare(const Rational& o) const;
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return compare(o) < 0; }
  bool operator>(const Rational& o) const { return compare(o) > 0; }

  std::string to_string() const;
  std::string to_latex() const;

private:
  BigInt num_;
  BigInt den_;

  void normalize();
};

}  // namespace heatframe

#endif
