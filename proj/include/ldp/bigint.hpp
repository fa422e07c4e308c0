#pragma once

#include <algorithm>
#include <bit>
#include <concepts>
#include <cassert>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ldp {

// Arbitrary-precision signed integer, sign/magnitude over base-2^32 limbs.
// Covers exactly what the classification needs: ring arithmetic, truncated
// division, gcd and decimal I/O. Division is Knuth's algorithm D on 32-bit
// limbs with 64-bit intermediates.
class BigInt {
public:
  BigInt() = default;

  template <std::integral T>
  BigInt(T v) {
    long long s = static_cast<long long>(v);
    if (s == 0) return;
    sign_ = s < 0 ? -1 : 1;
    // two's complement safe for LLONG_MIN
    unsigned long long u = s < 0 ? 0ULL - static_cast<unsigned long long>(s)
                                 : static_cast<unsigned long long>(s);
    mag_.push_back(static_cast<std::uint32_t>(u));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
  }

  static BigInt from_string(std::string_view s) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt r;
    for (; pos < s.size(); ++pos) {
      char c = s[pos];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
      r.mul_small_inplace(10);
      r.add_small_inplace(static_cast<std::uint32_t>(c - '0'));
    }
    if (!r.mag_.empty()) r.sign_ = sign;
    return r;
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }

  bool fits_int64() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = to_u64();
    if (sign_ >= 0) return u <= 0x7fffffffffffffffULL;
    return u <= 0x8000000000000000ULL;
  }

  long long to_int64() const {
    assert(fits_int64());
    unsigned long long u = to_u64();
    return sign_ < 0 ? -static_cast<long long>(u - 1) - 1
                     : static_cast<long long>(u);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
    BigInt t = *this;
    while (!t.is_zero()) chunks.push_back(t.divmod_small_inplace(1000000000u));
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
      std::string part = std::to_string(chunks[i]);
      out.append(9 - part.size(), '0');
      out += part;
    }
    return out;
  }

  friend BigInt operator-(BigInt a) {
    a.sign_ = -a.sign_;
    return a;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return r;
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.mag_.size(); ++j) {
        std::uint64_t cur = r.mag_[i + j] +
                            static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                            carry;
        r.mag_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.mag_[i + b.mag_.size()] = static_cast<std::uint32_t>(carry);
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  // Truncated (C-style) division: q = trunc(a/b), r = a - q*b.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) {
      q = BigInt{};
      r = a;
      return;
    }
    divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.trim();
    r.trim();
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }

  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
  BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }

  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.sign_ < 0) c = -c;
    return c <=> 0;
  }

  friend BigInt abs(BigInt a) {
    if (a.sign_ < 0) a.sign_ = 1;
    return a;
  }

  friend BigInt gcd(BigInt a, BigInt b) {
    a = abs(std::move(a));
    b = abs(std::move(b));
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
  }

private:
  int sign_ = 0;                    // -1, 0, +1
  std::vector<std::uint32_t> mag_;  // little-endian, no leading zero limbs

  unsigned long long to_u64() const {
    unsigned long long u = mag_.empty() ? 0 : mag_[0];
    if (mag_.size() > 1) u |= static_cast<unsigned long long>(mag_[1]) << 32;
    return u;
  }

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }

  void mul_small_inplace(std::uint32_t f) {
    std::uint64_t carry = 0;
    for (auto& limb : mag_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    trim();
  }

  void add_small_inplace(std::uint32_t v) {
    // only used on non-negative accumulators (decimal parse)
    std::uint64_t carry = v;
    for (auto& limb : mag_) {
      if (!carry) break;
      std::uint64_t cur = limb + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    if (!mag_.empty()) sign_ = sign_ == 0 ? 1 : sign_;
    trim();
  }

  // divides magnitude in place by a single limb, returns remainder
  std::uint32_t divmod_small_inplace(std::uint32_t div) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag_[i];
      mag_[i] = static_cast<std::uint32_t>(cur / div);
      rem = cur % div;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      if (cur < 0) {
        cur += int64_t{1} << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<std::uint32_t>(cur);
    }
    assert(borrow == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth algorithm D; requires |u| >= |v| > 0.
  static void divmod_mag(const std::vector<std::uint32_t>& u,
                         const std::vector<std::uint32_t>& v,
                         std::vector<std::uint32_t>& q,
                         std::vector<std::uint32_t>& r) {
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;
    q.assign(m + 1, 0);
    r.clear();

    if (n == 1) {
      std::uint64_t rem = 0;
      for (std::size_t i = u.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | u[i];
        q[i] = static_cast<std::uint32_t>(cur / v[0]);
        rem = cur % v[0];
      }
      if (rem) r.push_back(static_cast<std::uint32_t>(rem));
      return;
    }

    const unsigned s = std::countl_zero(v.back());
    std::vector<std::uint32_t> vn(n), un(u.size() + 1, 0);
    for (std::size_t i = n; i-- > 1;)
      vn[i] = (v[i] << s) | (s ? static_cast<std::uint32_t>(
                                     static_cast<std::uint64_t>(v[i - 1]) >>
                                     (32 - s))
                               : 0u);
    vn[0] = v[0] << s;
    un[u.size()] =
        s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(u.back()) >>
                                       (32 - s))
          : 0u;
    for (std::size_t i = u.size(); i-- > 1;)
      un[i] = (u[i] << s) | (s ? static_cast<std::uint32_t>(
                                     static_cast<std::uint64_t>(u[i - 1]) >>
                                     (32 - s))
                               : 0u);
    un[0] = u[0] << s;

    const std::uint64_t base = std::uint64_t{1} << 32;
    for (std::size_t j = m + 1; j-- > 0;) {
      std::uint64_t num =
          (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
      std::uint64_t qhat = num / vn[n - 1];
      std::uint64_t rhat = num % vn[n - 1];
      while (qhat >= base ||
             qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
        --qhat;
        rhat += vn[n - 1];
        if (rhat >= base) break;
      }

      // multiply and subtract
      std::int64_t t = 0;
      std::uint64_t borrow = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t p = qhat * vn[i];
        t = static_cast<std::int64_t>(un[i + j]) -
            static_cast<std::int64_t>(borrow) -
            static_cast<std::int64_t>(p & 0xffffffffu);
        un[i + j] = static_cast<std::uint32_t>(t);
        borrow = (p >> 32) - static_cast<std::uint64_t>(t >> 32);
      }
      t = static_cast<std::int64_t>(un[j + n]) -
          static_cast<std::int64_t>(borrow);
      un[j + n] = static_cast<std::uint32_t>(t);

      q[j] = static_cast<std::uint32_t>(qhat);
      if (t < 0) {  // rare: correct the one-off estimate
        --q[j];
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t cur =
              static_cast<std::uint64_t>(un[i + j]) + vn[i] + carry;
          un[i + j] = static_cast<std::uint32_t>(cur);
          carry = cur >> 32;
        }
        un[j + n] += static_cast<std::uint32_t>(carry);
      }
    }

    r.assign(n, 0);
    for (std::size_t i = 0; i < n - 1; ++i)
      r[i] = (un[i] >> s) |
             (s ? static_cast<std::uint32_t>(
                      static_cast<std::uint64_t>(un[i + 1]) << (32 - s))
                : 0u);
    r[n - 1] = un[n - 1] >> s;
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
};

}  // namespace ldp
