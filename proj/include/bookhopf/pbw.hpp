#pragma once

// Sparse linear algebra over Q(zeta_p) for H, H(x)H and H(x)H(x)H, where H is
// spanned by the ordered monomials x^b y^c g^a with 0 <= a, b, c < p.
//
// Normal form puts x before y before g. Reordering uses
//   g x = q x g,   g y = q^(-s) y g,   y x = q^s x y,
// so that
//   (x^b1 y^c1 g^a1)(x^b2 y^c2 g^a2)
//     = q^(a1 b2 + s (c1 b2 - a1 c2)) x^(b1+b2) y^(c1+c2) g^(a1+a2),
// which vanishes once an x or y exponent reaches p.

#include "bookhopf/cyclotomic.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bookhopf {

/// x^x_exp y^y_exp g^g_exp.
struct Monomial {
  int x_exp = 0;
  int y_exp = 0;
  int g_exp = 0;

  static constexpr Monomial unit() { return {}; }
  static constexpr Monomial g(int a = 1) { return {0, 0, a}; }
  static constexpr Monomial x(int b = 1) { return {b, 0, 0}; }
  static constexpr Monomial y(int c = 1) { return {0, c, 0}; }

  bool is_unit() const { return x_exp == 0 && y_exp == 0 && g_exp == 0; }
  bool is_grouplike_power() const { return x_exp == 0 && y_exp == 0; }

  /// Position in the basis ordering, (b * p + c) * p + a.
  int index(int p) const { return (x_exp * p + y_exp) * p + g_exp; }
  static Monomial from_index(int p, int idx) { return {idx / (p * p), (idx / p) % p, idx % p}; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  /// "x^b y^c g^a" with zero-exponent factors left out; a unit exponent is
  /// written without "^1"; the empty product is "1".
  std::string to_string() const {
    std::string out;
    auto factor = [&out](char sym, int e) {
      if (e == 0) return;
      if (!out.empty()) out += ' ';
      out += sym;
      if (e != 1) out += "^" + std::to_string(e);
    };
    factor('x', x_exp);
    factor('y', y_exp);
    factor('g', g_exp);
    return out.empty() ? "1" : out;
  }

  static Monomial parse(std::string_view text);
};

/// The parameters that fix the multiplication table.
struct PbwParams {
  int p = 3;
  int s = 1;
};

/// q^exponent times a monomial; exponent is kept reduced mod p.
struct QTerm {
  int exponent = 0;
  Monomial mono;
};

/// A monomial with a full cyclotomic coefficient.
struct ScaledMonomial {
  CycScalar coeff;
  Monomial mono;
};

/// Closed-form product of two basis monomials as a power of q; nullopt when
/// the product is zero.
inline std::optional<QTerm> mono_mul_exponent(const Monomial& m1, const Monomial& m2, const PbwParams& params) {
  const int p = params.p;
  const int b = m1.x_exp + m2.x_exp;
  const int c = m1.y_exp + m2.y_exp;
  if (b >= p || c >= p) return std::nullopt;
  const long long e = static_cast<long long>(m1.g_exp) * m2.x_exp +
                      static_cast<long long>(params.s) *
                          (static_cast<long long>(m1.y_exp) * m2.x_exp - static_cast<long long>(m1.g_exp) * m2.y_exp);
  return QTerm{mod_floor(e, p), Monomial{b, c, (m1.g_exp + m2.g_exp) % p}};
}

inline std::optional<ScaledMonomial> mono_mul(const Monomial& m1, const Monomial& m2, const PbwParams& params) {
  auto t = mono_mul_exponent(m1, m2, params);
  if (!t) return std::nullopt;
  return ScaledMonomial{CycScalar::root_power(params.p, t->exponent), t->mono};
}

/// Finite linear combination of basis keys with no stored zeros.
template <class Key>
class SparseSum {
 public:
  using Terms = std::map<Key, CycScalar>;

  explicit SparseSum(int p) : p_(p) {}
  SparseSum(int p, const Key& key) : p_(p) { terms_.emplace(key, CycScalar::one(p)); }
  SparseSum(const Key& key, CycScalar coeff) : p_(coeff.order()) { add_term(key, std::move(coeff)); }

  int order() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  CycScalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? CycScalar::zero(p_) : it->second;
  }

  void add_term(const Key& key, const CycScalar& coeff) {
    if (coeff.order() != p_) throw std::invalid_argument("coefficient order does not match the algebra");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparseSum& operator+=(const SparseSum& o) {
    same_order(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparseSum& operator-=(const SparseSum& o) {
    same_order(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend SparseSum operator+(SparseSum a, const SparseSum& b) { return a += b; }
  friend SparseSum operator-(SparseSum a, const SparseSum& b) { return a -= b; }

  SparseSum scaled(const CycScalar& lambda) const {
    SparseSum out(p_);
    if (lambda.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * lambda);
    return out;
  }
  SparseSum times_root_power(long long j) const {
    SparseSum out(p_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.times_root_power(j));
    return out;
  }
  SparseSum operator-() const { return scaled(-CycScalar::one(p_)); }

  friend bool operator==(const SparseSum& a, const SparseSum& b) { return a.p_ == b.p_ && a.terms_ == b.terms_; }

 private:
  void same_order(const SparseSum& o) const {
    if (o.p_ != p_) throw std::invalid_argument("sparse sums over different cyclotomic orders");
  }

  int p_;
  Terms terms_;
};

using Element = SparseSum<Monomial>;
using Tensor2 = SparseSum<std::array<Monomial, 2>>;
using Tensor3 = SparseSum<std::array<Monomial, 3>>;

inline Element elem_add(const Element& u, const Element& v) { return u + v; }
inline Element scalar_scale(const CycScalar& lambda, const Element& u) { return u.scaled(lambda); }

namespace detail {

// Componentwise product of tensor legs; nullopt if any leg vanishes.
template <std::size_t N>
std::optional<std::pair<int, std::array<Monomial, N>>> leg_product(const std::array<Monomial, N>& a,
                                                                   const std::array<Monomial, N>& b,
                                                                   const PbwParams& params) {
  std::array<Monomial, N> out;
  int e = 0;
  for (std::size_t leg = 0; leg < N; ++leg) {
    auto t = mono_mul_exponent(a[leg], b[leg], params);
    if (!t) return std::nullopt;
    e += t->exponent;
    out[leg] = t->mono;
  }
  return std::pair{e % params.p, out};
}

inline std::optional<std::pair<int, Monomial>> leg_product(const Monomial& a, const Monomial& b,
                                                           const PbwParams& params) {
  auto t = mono_mul_exponent(a, b, params);
  if (!t) return std::nullopt;
  return std::pair{t->exponent, t->mono};
}

}  // namespace detail

/// Bilinear product in H, or componentwise in H(x)H / H(x)H(x)H.
template <class Key>
SparseSum<Key> multiply(const SparseSum<Key>& u, const SparseSum<Key>& v, const PbwParams& params) {
  if (u.order() != params.p || v.order() != params.p)
    throw std::invalid_argument("operands do not belong to the algebra with p = " + std::to_string(params.p));
  SparseSum<Key> out(params.p);
  for (const auto& [k1, c1] : u) {
    for (const auto& [k2, c2] : v) {
      auto prod = detail::leg_product(k1, k2, params);
      if (!prod) continue;
      out.add_term(prod->second, (c1 * c2).times_root_power(prod->first));
    }
  }
  return out;
}

inline Element elem_mul(const Element& u, const Element& v, const PbwParams& params) { return multiply(u, v, params); }
inline Tensor2 tensor_mul(const Tensor2& u, const Tensor2& v, const PbwParams& params) {
  return multiply(u, v, params);
}
inline Tensor3 tensor_mul(const Tensor3& u, const Tensor3& v, const PbwParams& params) {
  return multiply(u, v, params);
}

template <class Key>
SparseSum<Key> power(const SparseSum<Key>& u, int n, const PbwParams& params, const SparseSum<Key>& unit) {
  SparseSum<Key> out = unit;
  for (int k = 0; k < n; ++k) out = multiply(out, u, params);
  return out;
}

inline Tensor2 tensor(const Element& u, const Element& v) {
  Tensor2 out(u.order());
  for (const auto& [m1, c1] : u)
    for (const auto& [m2, c2] : v) out.add_term({m1, m2}, c1 * c2);
  return out;
}

inline Tensor3 tensor(const Element& u, const Element& v, const Element& w) {
  Tensor3 out(u.order());
  for (const auto& [m1, c1] : u)
    for (const auto& [m2, c2] : v) {
      const CycScalar c12 = c1 * c2;
      for (const auto& [m3, c3] : w) out.add_term({m1, m2, m3}, c12 * c3);
    }
  return out;
}

// Rendering. Coefficients other than 1 are parenthesised in front of the key.

namespace detail {

inline std::string render_key(const Monomial& m) { return m.to_string(); }

template <std::size_t N>
std::string render_key(const std::array<Monomial, N>& k) {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += " ⊗ ";
    out += k[i].to_string();
  }
  return out;
}

}  // namespace detail

template <class Key>
std::string to_string(const SparseSum<Key>& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : u) {
    if (!first) out += " + ";
    first = false;
    if (!c.is_one()) out += "(" + c.to_string() + ")";
    const std::string key = detail::render_key(k);
    if (c.is_one() || key != "1") {
      if (!c.is_one()) out += " ";
      out += key;
    }
  }
  return out;
}

inline Monomial Monomial::parse(std::string_view text) {
  Monomial m;
  std::string s(text);
  if (s == "1") return m;
  std::size_t pos = 0;
  int last_rank = -1;
  auto fail = [&]() -> Monomial { throw std::invalid_argument("malformed monomial: " + s); };
  while (pos < s.size()) {
    if (s[pos] == ' ') {
      ++pos;
      continue;
    }
    const char sym = s[pos++];
    const int rank = sym == 'x' ? 0 : sym == 'y' ? 1 : sym == 'g' ? 2 : -1;
    if (rank <= last_rank) return fail();
    last_rank = rank;
    int e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      std::size_t end = pos;
      while (end < s.size() && s[end] >= '0' && s[end] <= '9') ++end;
      if (end == pos) return fail();
      e = std::stoi(s.substr(pos, end - pos));
      pos = end;
    }
    (rank == 0 ? m.x_exp : rank == 1 ? m.y_exp : m.g_exp) = e;
  }
  if (last_rank < 0) return fail();
  return m;
}

}  // namespace bookhopf
