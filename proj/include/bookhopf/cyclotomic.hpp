#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_p), p prime.
//
// An element is stored in the power basis 1, zeta, ..., zeta^(p-2). Every
// operation reduces modulo the cyclotomic polynomial 1 + t + ... + t^(p-1), so
// two values are equal exactly when their coefficient vectors are equal.

#include "bookhopf/rational.hpp"

#include <cctype>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bookhopf {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Reduces j into [0, m).
inline int mod_floor(long long j, int m) {
  long long r = j % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

class CycScalar {
 public:
  static CycScalar zero(int p) {
    check_order(p);
    return CycScalar(p, std::vector<Rational>(static_cast<std::size_t>(p - 1)));
  }

  static CycScalar from_rational(int p, Rational r) {
    CycScalar z = zero(p);
    z.c_[0] = std::move(r);
    return z;
  }

  static CycScalar one(int p) { return from_rational(p, Rational(1)); }

  /// zeta^j for any integer j.
  static CycScalar root_power(int p, long long j) {
    CycScalar z = zero(p);
    const int e = mod_floor(j, p);
    if (e == p - 1) {
      for (auto& c : z.c_) c = Rational(-1);
    } else {
      z.c_[static_cast<std::size_t>(e)] = Rational(1);
    }
    return z;
  }

  /// Reduces an arbitrary polynomial in zeta (coefficient k on zeta^k) to
  /// canonical form.
  static CycScalar reduce(int p, std::span<const Rational> poly) {
    check_order(p);
    std::vector<Rational> cyc(static_cast<std::size_t>(p));
    for (std::size_t k = 0; k < poly.size(); ++k) cyc[k % static_cast<std::size_t>(p)] += poly[k];
    return from_cyclic(p, std::move(cyc));
  }

  int order() const { return p_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// True when the value lies in Q (only the constant coefficient is set).
  bool is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
      if (!c_[k].is_zero()) return false;
    return true;
  }

  bool is_one() const { return is_rational() && c_[0].is_one(); }

  CycScalar operator-() const {
    CycScalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    same_order(a, b);
    CycScalar r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
    return r;
  }

  friend CycScalar operator-(const CycScalar& a, const CycScalar& b) {
    same_order(a, b);
    CycScalar r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
    return r;
  }

  friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    same_order(a, b);
    if (a.is_rational()) return b.scaled(a.c_[0]);
    if (b.is_rational()) return a.scaled(b.c_[0]);
    const std::size_t p = static_cast<std::size_t>(a.p_);
    std::vector<Rational> cyc(p);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        cyc[(i + j) % p] += a.c_[i] * b.c_[j];
      }
    }
    return from_cyclic(a.p_, std::move(cyc));
  }

  CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
  CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

  CycScalar scaled(const Rational& r) const {
    CycScalar out = *this;
    if (r.is_one()) return out;
    for (auto& c : out.c_) c *= r;
    return out;
  }

  /// this * zeta^j, computed by rotating coefficients.
  CycScalar times_root_power(long long j) const {
    const int e = mod_floor(j, p_);
    if (e == 0) return *this;
    const std::size_t p = static_cast<std::size_t>(p_);
    std::vector<Rational> cyc(p);
    for (std::size_t k = 0; k < c_.size(); ++k) cyc[(k + static_cast<std::size_t>(e)) % p] = c_[k];
    return from_cyclic(p_, std::move(cyc));
  }

  /// Multiplicative inverse via the extended Euclidean algorithm against the
  /// cyclotomic polynomial.
  CycScalar inverse() const;

  friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

  friend bool operator==(const CycScalar& a, const CycScalar& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  /// Polynomial in the symbol "q", e.g. "1 - q + (1/2)q^2".
  std::string to_string() const;

  /// Inverse of to_string.
  static CycScalar parse(int p, std::string_view text);

 private:
  CycScalar(int p, std::vector<Rational> c) : p_(p), c_(std::move(c)) {}

  static void check_order(int p) {
    if (!is_prime(p)) throw std::invalid_argument("cyclotomic order must be prime, got " + std::to_string(p));
  }

  static void same_order(const CycScalar& a, const CycScalar& b) {
    if (a.p_ != b.p_)
      throw std::invalid_argument("cyclotomic scalars of different orders (" + std::to_string(a.p_) + " vs " +
                                  std::to_string(b.p_) + ")");
  }

  // cyc has length p and lives in Q[t]/(t^p - 1); fold zeta^(p-1) into the rest.
  static CycScalar from_cyclic(int p, std::vector<Rational> cyc) {
    Rational top = std::move(cyc.back());
    cyc.pop_back();
    if (!top.is_zero())
      for (auto& c : cyc) c -= top;
    return CycScalar(p, std::move(cyc));
  }

  int p_;
  std::vector<Rational> c_;
};

namespace detail {

using RatPoly = std::vector<Rational>;  // coefficient k on t^k

inline void trim(RatPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

// Returns (quotient, remainder) of a / b, b nonzero and trimmed.
inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly quot;
  if (a.size() < b.size()) return {quot, a};
  quot.assign(a.size() - b.size() + 1, Rational());
  const Rational lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() * lead_inv;
    quot[shift] = factor;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

inline RatPoly poly_sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  RatPoly out = a;
  if (!q.empty() && !b.empty()) {
    if (out.size() < q.size() + b.size() - 1) out.resize(q.size() + b.size() - 1);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace detail

inline CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero: inverse of zero in Q(zeta_" + std::to_string(p_) + ")");
  if (is_rational()) return from_rational(p_, c_[0].inverse());
  using detail::RatPoly;
  // Invariant: s_k * a == r_k  (mod Phi_p).
  RatPoly r0(static_cast<std::size_t>(p_), Rational(1));
  RatPoly r1 = c_;
  detail::trim(r1);
  RatPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [quot, rem] = detail::divmod(r0, r1);
    RatPoly s2 = detail::poly_sub_mul(s0, quot, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_p is irreducible, so the last nonzero remainder is a constant.
  const Rational scale = r1.at(0).inverse();
  for (auto& c : s1) c *= scale;
  return reduce(p_, s1);
}

inline std::string CycScalar::to_string() const {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool integral = mag.is_integer();
    if (k == 0) {
      out += integral ? mag.to_string() : "(" + mag.to_string() + ")";
      continue;
    }
    if (!mag.is_one()) out += integral ? mag.to_string() : "(" + mag.to_string() + ")";
    out += "q";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return first ? "0" : out;
}

inline CycScalar CycScalar::parse(int p, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&]() -> CycScalar { throw std::invalid_argument("malformed cyclotomic literal: " + std::string(text)); };
  if (s.empty()) return fail();
  std::vector<Rational> poly;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      return fail();
    }
    Rational coeff(1);
    bool have_coeff = false;
    if (pos < s.size() && s[pos] == '(') {
      const std::size_t close = s.find(')', pos);
      if (close == std::string::npos) return fail();
      coeff = Rational::parse(s.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      have_coeff = true;
    } else {
      std::size_t end = pos;
      while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
      if (end > pos) {
        coeff = Rational::parse(s.substr(pos, end - pos));
        pos = end;
        have_coeff = true;
      }
    }
    std::size_t power = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == pos) return fail();
        power = std::stoul(s.substr(pos, end - pos));
        pos = end;
      }
    } else if (!have_coeff) {
      return fail();
    }
    if (poly.size() <= power) poly.resize(power + 1);
    poly[power] += negative ? -coeff : coeff;
  }
  return reduce(p, poly);
}

}  // namespace bookhopf
