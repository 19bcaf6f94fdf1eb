#ifndef HEATFRAME_BIGINT_HPP
#define HEATFRAME_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace heatframe {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs
/// (little endian). Values stay desk-scale here, so schoolbook algorithms
/// are used throughout.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const;

  /// Value as long long; valid only when fits_longlong().
  long long to_longlong() const;
  bool fits_longlong() const;

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  /// Truncated division; remainder has the sign of the dividend.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;

  static BigInt gcd(const BigInt& a, const BigInt& b);

  int compare(const BigInt& o) const;
  bool operator==(const BigInt& o) const { return compare(o) == 0; }
  bool operator!=(const BigInt& o) const { return compare(o) != 0; }
  bool operator<(const BigInt& o) const { return compare(o) < 0; }
  bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
  bool operator>(const BigInt& o) const { return compare(o) > 0; }
  bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

  std::string to_string() const;

private:
  int sign_ = 0;                 // -1, 0, +1
  std::vector<uint32_t> mag_;    // empty iff sign_ == 0

  void trim();
  static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace heatframe

#endif
