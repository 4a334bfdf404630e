#pragma once

// The book Hopf algebra H(p, s): generators g, x, y with
//
//   g x = q x g,  g y = q^(-s) y g,  g^p = 1,  x^p = y^p = 0,  x y = q^(-s) y x,
//   Delta(g) = g (x) g,  Delta(x) = 1 (x) x + x (x) g,  Delta(y) = 1 (x) y + y (x) g^s,
//   S(g) = g^(-1),  S(x) = -x g^(-1),  S(y) = -y g^(-s),
//   eps(g) = 1,  eps(x) = eps(y) = 0,
//
// over Q(zeta_p) with q = zeta_p. Delta and eps are extended to basis
// monomials multiplicatively, S anti-multiplicatively; basis images are
// memoised on first use.

#include "bookhopf/cyclotomic.hpp"
#include "bookhopf/pbw.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bookhopf {

/// Raised when two independent computations that must agree do not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BookAlgebra {
 public:
  /// Throws std::invalid_argument for non-prime p (or p = 2), s outside
  /// [0, p), or s = 0 without the permissive flag.
  static BookAlgebra construct(int p, int s, bool permissive = false) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    if (s < 0 || s >= p)
      throw std::invalid_argument("s must lie in [0, " + std::to_string(p) + "), got " + std::to_string(s));
    if (s == 0 && !permissive)
      throw std::invalid_argument(
          "s = 0 is excluded: in characteristic zero Delta(y)^p != 0 while y^p = 0, so H(p, 0) is not a "
          "bialgebra (pass the permissive flag to build it as a negative control)");
    return BookAlgebra(p, s, permissive);
  }

  int p() const { return params_.p; }
  int s() const { return params_.s; }
  bool permissive() const { return permissive_; }
  const PbwParams& params() const { return params_; }
  CycScalar q() const { return CycScalar::root_power(p(), 1); }
  CycScalar q_pow(long long j) const { return CycScalar::root_power(p(), j); }
  std::size_t dimension() const { return static_cast<std::size_t>(p()) * p() * p(); }

  std::vector<Monomial> basis() const {
    std::vector<Monomial> out;
    out.reserve(dimension());
    for (int idx = 0; idx < static_cast<int>(dimension()); ++idx) out.push_back(Monomial::from_index(p(), idx));
    return out;
  }

  Element zero() const { return Element(p()); }
  Element one() const { return element(Monomial::unit()); }
  Element element(const Monomial& m) const { return Element(p(), m); }
  Element g() const { return element(Monomial::g()); }
  Element x() const { return element(Monomial::x()); }
  Element y() const { return element(Monomial::y()); }

  Tensor2 one2() const { return Tensor2(p(), {Monomial::unit(), Monomial::unit()}); }
  Tensor3 one3() const { return Tensor3(p(), {Monomial::unit(), Monomial::unit(), Monomial::unit()}); }

  Element mul(const Element& u, const Element& v) const { return multiply(u, v, params_); }
  Tensor2 mul(const Tensor2& u, const Tensor2& v) const { return multiply(u, v, params_); }
  Tensor3 mul(const Tensor3& u, const Tensor3& v) const { return multiply(u, v, params_); }

  // Generator values.
  Tensor2 coproduct_g() const { return tensor(g(), g()); }
  Tensor2 coproduct_x() const { return tensor(one(), x()) + tensor(x(), g()); }
  Tensor2 coproduct_y() const { return tensor(one(), y()) + tensor(y(), element(Monomial::g(s()))); }
  Element antipode_g() const { return element(Monomial::g(p() - 1)); }
  Element antipode_x() const { return -element({1, 0, p() - 1}); }
  Element antipode_y() const { return -element({0, 1, (p() - s()) % p()}); }

  const Tensor2& coproduct(const Monomial& m) const { return cached(caches_->coproduct, [this] { return build_coproducts(); })[index(m)]; }
  const Element& antipode(const Monomial& m) const { return cached(caches_->antipode, [this] { return build_antipodes(); })[index(m)]; }
  /// (Delta (x) id) Delta on a basis monomial.
  const Tensor3& delta2(const Monomial& m) const { return cached(caches_->delta2, [this] { return build_delta2(); })[index(m)]; }

  Tensor2 coproduct(const Element& h) const {
    Tensor2 out(p());
    for (const auto& [m, c] : h) out += coproduct(m).scaled(c);
    return out;
  }

  CycScalar counit(const Monomial& m) const {
    return m.is_grouplike_power() ? CycScalar::one(p()) : CycScalar::zero(p());
  }
  CycScalar counit(const Element& h) const {
    CycScalar out = CycScalar::zero(p());
    for (const auto& [m, c] : h)
      if (m.is_grouplike_power()) out += c;
    return out;
  }

  Element antipode(const Element& h) const {
    Element out(p());
    for (const auto& [m, c] : h) out += antipode(m).scaled(c);
    return out;
  }

  Element s_squared(const Element& h) const { return antipode(antipode(h)); }

  Tensor3 delta2(const Element& h) const {
    Tensor3 out(p());
    for (const auto& [m, c] : h) out += delta2(m).scaled(c);
    return out;
  }

  /// (Delta (x) id) applied to a two-fold tensor.
  Tensor3 coproduct_left(const Tensor2& t) const {
    Tensor3 out(p());
    for (const auto& [k, c] : t)
      for (const auto& [k1, c1] : coproduct(k[0])) out.add_term({k1[0], k1[1], k[1]}, c * c1);
    return out;
  }

  /// (id (x) Delta) applied to a two-fold tensor.
  Tensor3 coproduct_right(const Tensor2& t) const {
    Tensor3 out(p());
    for (const auto& [k, c] : t)
      for (const auto& [k2, c2] : coproduct(k[1])) out.add_term({k[0], k2[0], k2[1]}, c * c2);
    return out;
  }

  /// (id (x) Delta) Delta on a basis monomial, computed without the cache.
  Tensor3 delta2_right(const Monomial& m) const { return coproduct_right(coproduct(m)); }

 private:
  struct Caches {
    template <class T>
    struct Slot {
      std::once_flag once;
      std::vector<T> table;
    };
    Slot<Tensor2> coproduct;
    Slot<Element> antipode;
    Slot<Tensor3> delta2;
  };

  BookAlgebra(int p, int s, bool permissive)
      : params_{p, s}, permissive_(permissive), caches_(std::make_shared<Caches>()) {}

  std::size_t index(const Monomial& m) const {
    if (m.x_exp < 0 || m.y_exp < 0 || m.g_exp < 0 || m.x_exp >= p() || m.y_exp >= p() || m.g_exp >= p())
      throw std::out_of_range("monomial " + m.to_string() + " is not a basis element for p = " + std::to_string(p()));
    return static_cast<std::size_t>(m.index(p()));
  }

  template <class T, class Build>
  static const std::vector<T>& cached(Caches::Slot<T>& slot, Build build) {
    std::call_once(slot.once, [&] { slot.table = build(); });
    return slot.table;
  }

  template <class T>
  std::vector<T> powers(const T& base, const T& unit) const {
    std::vector<T> out{unit};
    for (int k = 1; k < p(); ++k) out.push_back(multiply(out.back(), base, params_));
    return out;
  }

  // Delta(x^b y^c g^a) = Delta(x)^b Delta(y)^c Delta(g)^a.
  std::vector<Tensor2> build_coproducts() const {
    const auto dx = powers(coproduct_x(), one2());
    const auto dy = powers(coproduct_y(), one2());
    const auto dg = powers(coproduct_g(), one2());
    std::vector<Tensor2> out;
    out.reserve(dimension());
    for (const auto& m : basis()) out.push_back(mul(mul(dx[m.x_exp], dy[m.y_exp]), dg[m.g_exp]));
    return out;
  }

  // S(x^b y^c g^a) = S(g)^a S(y)^c S(x)^b.
  std::vector<Element> build_antipodes() const {
    const auto sx = powers(antipode_x(), one());
    const auto sy = powers(antipode_y(), one());
    const auto sg = powers(antipode_g(), one());
    std::vector<Element> out;
    out.reserve(dimension());
    for (const auto& m : basis()) out.push_back(mul(mul(sg[m.g_exp], sy[m.y_exp]), sx[m.x_exp]));
    return out;
  }

  std::vector<Tensor3> build_delta2() const {
    std::vector<Tensor3> out;
    out.reserve(dimension());
    for (const auto& m : basis()) {
      out.push_back(coproduct_left(coproduct(m)));
#ifndef NDEBUG
      if (!(out.back() == delta2_right(m)))
        throw ConsistencyError("coassociativity fails at " + m.to_string() + " while building the double coproduct");
#endif
    }
    return out;
  }

  PbwParams params_;
  bool permissive_;
  std::shared_ptr<Caches> caches_;
};

}  // namespace bookhopf
