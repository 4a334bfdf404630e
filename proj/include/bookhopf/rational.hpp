#pragma once

// Exact rational numbers with an inline 64-bit fast path.
//
// Values whose numerator and denominator both fit in int64 are stored inline;
// anything larger is promoted to a GMP rational held behind an immutable
// shared pointer. The representation is canonical: a value is stored inline
// if and only if it fits, so equality never has to compare across forms.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bookhopf {

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit integer promotion
  Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

  static Rational from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      r.num_ = q.get_num().get_si();
      r.den_ = q.get_den().get_si();
    } else {
      r.big_ = std::make_shared<const mpq_class>(std::move(q));
    }
    return r;
  }

  /// Parses "n" or "n/d" (optional leading sign, no whitespace).
  static Rational parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    if (q.get_den() == 0) throw std::domain_error("division by zero in rational literal");
    return from_mpq(std::move(q));
  }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
    return q;
  }

  std::string to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (big_ || num_ == INT64_MIN) return from_mpq(-to_mpq());
    Rational r = *this;
    r.num_ = -num_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return from_mpq(a.to_mpq() + b.to_mpq());
    if (a.den_ == 1 && b.den_ == 1) return from_wide(Wide{a.num_} + b.num_, 1);
    const Wide n = Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_;
    const Wide d = Wide{a.den_} * b.den_;
    return from_wide(n, d);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return from_mpq(a.to_mpq() - b.to_mpq());
    if (a.den_ == 1 && b.den_ == 1) return from_wide(Wide{a.num_} - b.num_, 1);
    const Wide n = Wide{a.num_} * b.den_ - Wide{b.num_} * a.den_;
    const Wide d = Wide{a.den_} * b.den_;
    return from_wide(n, d);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return from_mpq(a.to_mpq() * b.to_mpq());
    if (a.den_ == 1 && b.den_ == 1) return from_wide(Wide{a.num_} * b.num_, 1);
    // Cross-cancel first so the product is already in lowest terms.
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const Wide n = Wide{a.num_ / (g1 ? g1 : 1)} * (b.num_ / (g2 ? g2 : 1));
    const Wide d = Wide{a.den_ / (g2 ? g2 : 1)} * (b.den_ / (g1 ? g1 : 1));
    return from_reduced(n, d);
  }

  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (big_) return from_mpq(1 / *big_);
    if (num_ == INT64_MIN) return from_mpq(1 / to_mpq());
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
      if (!a.big_ || !b.big_) return false;
      return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  using Wide = __int128;
  using UWide = unsigned __int128;

  static UWide uabs(Wide v) { return v < 0 ? UWide(0) - UWide(v) : UWide(v); }

  static UWide gcd_wide(UWide a, UWide b) {
    while (b != 0) {
      const UWide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static mpz_class to_mpz(Wide v) {
    const bool neg = v < 0;
    UWide u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  }

  static bool fits(Wide v) { return v >= INT64_MIN && v <= INT64_MAX; }

  // n/d with d != 0, gcd(n, d) == 1 and d > 0 assumed.
  static Rational from_reduced(Wide n, Wide d) {
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    mpq_class q{to_mpz(n), to_mpz(d)};
    return from_mpq(std::move(q));
  }

  static Rational from_wide(Wide n, Wide d) {
    if (d == 0) throw std::domain_error("division by zero");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (d != 1) {
      const UWide g = gcd_wide(uabs(n), UWide(d));
      if (g > 1) {
        n /= Wide(g);
        d /= Wide(g);
      }
    }
    if (n == 0) d = 1;
    return from_reduced(n, d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace bookhopf
