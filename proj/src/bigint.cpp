#include "heatframe/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace heatframe {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid overflow on LLONG_MIN
  unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                               : static_cast<unsigned long long>(v);
  while (u != 0) {
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull));
    u >>= 32;
  }
}

BigInt BigInt::from_string(std::string_view s) {
  size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt r;
  BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r = r * ten + BigInt(s[i] - '0');
  }
  if (sign < 0) r = -r;
  return r;
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

bool BigInt::fits_longlong() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  uint64_t u = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
  if (sign_ > 0) return u <= 0x7fffffffffffffffull;
  return u <= 0x8000000000000000ull;
}

long long BigInt::to_longlong() const {
  assert(fits_longlong());
  uint64_t u = 0;
  if (mag_.size() > 1) u = static_cast<uint64_t>(mag_[1]) << 32;
  if (!mag_.empty()) u |= mag_[0];
  if (sign_ < 0) return -static_cast<long long>(u);
  return static_cast<long long>(u);
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r[i] = static_cast<uint32_t>(s & 0xffffffffull);
    carry = s >> 32;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r = a;
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(s);
  }
  assert(borrow == 0);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t s = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<uint32_t>(s & 0xffffffffull);
      carry = s >> 32;
    }
    size_t k = i + b.size();
    while (carry != 0) {
      uint64_t s = r[k] + carry;
      r[k] = static_cast<uint32_t>(s & 0xffffffffull);
      carry = s >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// schoolbook long division, one output limb at a time with 64-bit trial
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  assert(!b.empty());
  q.clear();
  r.clear();
  if (compare_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint64_t d = b[0];
    q.assign(a.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem != 0) r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  // general case: bitwise long division
  size_t bits = a.size() * 32;
  q.assign(a.size(), 0);
  std::vector<uint32_t> rem;
  for (size_t bit = bits; bit-- > 0;) {
    // rem = rem << 1 | a.bit(bit)
    uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
    for (size_t i = 0; i < rem.size(); ++i) {
      uint32_t next = rem[i] >> 31;
      rem[i] = (rem[i] << 1) | carry;
      carry = next;
    }
    if (carry) rem.push_back(carry);
    if (compare_mag(rem, b) >= 0) {
      rem = sub_mag(rem, b);
      q[bit / 32] |= 1u << (bit % 32);
    }
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  r = rem;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (sign_ == 0) return o;
  if (o.sign_ == 0) return *this;
  BigInt r;
  if (sign_ == o.sign_) {
    r.sign_ = sign_;
    r.mag_ = add_mag(mag_, o.mag_);
  } else {
    int c = compare_mag(mag_, o.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.sign_ = sign_;
      r.mag_ = sub_mag(mag_, o.mag_);
    } else {
      r.sign_ = o.sign_;
      r.mag_ = sub_mag(o.mag_, mag_);
    }
  }
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (sign_ == 0 || o.sign_ == 0) return BigInt();
  BigInt r;
  r.sign_ = sign_ * o.sign_;
  if (mag_.size() == 1 && o.mag_.size() == 1) {
    uint64_t p = static_cast<uint64_t>(mag_[0]) * o.mag_[0];
    r.mag_.push_back(static_cast<uint32_t>(p & 0xffffffffull));
    if (p >> 32) r.mag_.push_back(static_cast<uint32_t>(p >> 32));
  } else {
    r.mag_ = mul_mag(mag_, o.mag_);
  }
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  if (a.sign_ == 0) {
    q = BigInt();
    r = BigInt();
    return;
  }
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q = BigInt();
  r = BigInt();
  if (!qm.empty()) {
    q.sign_ = a.sign_ * b.sign_;
    q.mag_ = std::move(qm);
  }
  if (!rm.empty()) {
    r.sign_ = a.sign_;
    r.mag_ = std::move(rm);
  }
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    BigInt q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

int BigInt::compare(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
  int c = compare_mag(mag_, o.mag_);
  return sign_ >= 0 ? c : -c;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::string digits;
  BigInt v = abs();
  BigInt chunk(1000000000);
  while (!v.is_zero()) {
    BigInt q, r;
    divmod(v, chunk, q, r);
    uint64_t part = r.is_zero() ? 0 : r.mag_[0];
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + part % 10));
      part /= 10;
    }
    v = std::move(q);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace heatframe
