#pragma once

// Modular pairs in involution for H(p, s).
//
// Candidates are the group-likes l = g^i and the characters beta_j with
// beta_j(g) = q^j, beta_j(x) = beta_j(y) = 0. For each of the p^2 pairs the
// twist
//
//   T(h) = beta(h_(1)) l h_(2) l^(-1) beta^(-1)(h_(3)),  beta^(-1) = beta o S,
//
// is compared with S^2 on every basis element, and the stability value
// beta(l) is evaluated. The brute-force verdicts are then checked against
// the congruences
//
//   implements  <=>  j = i - 1  and  (1 - 2i + s) s = 0      (mod p)
//   stable      <=>  i j = 0                                 (mod p)
//   MPI         <=>  j = i - 1  and  (1 - 2i + s) s = i (i - 1) = 0
//
// and any disagreement is a hard error. Stability reduces to i (i - 1) = 0
// only on the line j = i - 1; elsewhere beta(l) = q^(i j).

#include "bookhopf/book_algebra.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace bookhopf {

/// l = g^i.
struct GroupLike {
  int i = 0;
  Monomial monomial() const { return Monomial::g(i); }
};

/// beta(g) = q^j, beta(x) = beta(y) = 0.
struct Character {
  int j = 0;
};

struct PairIndex {
  int i = 0;
  int j = 0;
  friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

struct PairReport {
  int i = 0;
  int j = 0;
  bool implements_s2 = false;
  bool stable = false;
  CycScalar beta_l;
  bool closed_form_agrees = false;

  bool is_mpi() const { return implements_s2 && stable; }
};

struct Classification {
  int p = 0;
  int s = 0;
  std::vector<PairReport> pairs;  // ordered by (i, j)

  std::vector<PairIndex> mpi() const {
    std::vector<PairIndex> out;
    for (const auto& r : pairs)
      if (r.is_mpi()) out.push_back({r.i, r.j});
    return out;
  }
  std::vector<PairIndex> implements() const {
    std::vector<PairIndex> out;
    for (const auto& r : pairs)
      if (r.implements_s2) out.push_back({r.i, r.j});
    return out;
  }
  bool consistent() const {
    for (const auto& r : pairs)
      if (!r.closed_form_agrees) return false;
    return true;
  }
};

struct ClosedFormVerdict {
  bool implements = false;
  bool stable = false;
  bool mpi = false;
  friend bool operator==(const ClosedFormVerdict&, const ClosedFormVerdict&) = default;
};

/// Pure modular arithmetic; no algebra involved.
inline ClosedFormVerdict closed_form_predicate(int p, int s, int i, int j) {
  const bool beta_matches = mod_floor(j - (i - 1), p) == 0;
  const bool twist_congruence = mod_floor(static_cast<long long>(1 - 2 * i + s) * s, p) == 0;
  const bool stable = mod_floor(static_cast<long long>(i) * j, p) == 0;
  const bool stable_on_line = mod_floor(static_cast<long long>(i) * (i - 1), p) == 0;
  return {beta_matches && twist_congruence, stable, beta_matches && twist_congruence && stable_on_line};
}

/// The unique pair implementing S^2 when s != 0: i = (1 + s)/2, j = i - 1.
inline PairIndex predicted_s2_pair(int p, int s) {
  const int half = (p + 1) / 2;  // inverse of 2 mod p
  const int i = mod_floor(static_cast<long long>(1 + s) * half, p);
  return {i, mod_floor(i - 1, p)};
}

/// beta(m) as a power of q, or nullopt when beta(m) = 0.
inline std::optional<int> character_exponent(const BookAlgebra& A, const Character& beta, const Monomial& m) {
  if (!m.is_grouplike_power()) return std::nullopt;
  return mod_floor(static_cast<long long>(beta.j) * m.g_exp, A.p());
}

inline CycScalar evaluate(const BookAlgebra& A, const Character& beta, const Element& h) {
  CycScalar out = CycScalar::zero(A.p());
  for (const auto& [m, c] : h)
    if (auto e = character_exponent(A, beta, m)) out += c.times_root_power(*e);
  return out;
}

/// The p candidates g^0, ..., g^(p-1), each checked to be group-like.
inline std::vector<GroupLike> enumerate_group_likes(const BookAlgebra& A) {
  std::vector<GroupLike> out;
  for (int i = 0; i < A.p(); ++i) {
    const Element l = A.element(Monomial::g(i));
    if (!(A.coproduct(l) == tensor(l, l)) || !A.counit(l).is_one())
      throw ConsistencyError("g^" + std::to_string(i) + " is not group-like");
    out.push_back({i});
  }
  return out;
}

/// All p characters. A character kills the nilpotent generators x and y and
/// is fixed by beta(g), a p-th root of unity; each candidate is checked to
/// be unital and multiplicative on every basis pair.
inline std::vector<Character> enumerate_characters(const BookAlgebra& A) {
  std::vector<Character> out;
  const int p = A.p();
  const auto basis = A.basis();
  for (int j = 0; j < p; ++j) {
    const Character beta{j};
    if (!evaluate(A, beta, A.one()).is_one()) throw ConsistencyError("character " + std::to_string(j) + " is not unital");
    CycScalar beta_g_power = CycScalar::one(p);
    for (int k = 0; k < p; ++k) beta_g_power *= evaluate(A, beta, A.g());
    if (!beta_g_power.is_one()) throw ConsistencyError("beta(g)^p != 1 for character " + std::to_string(j));
    for (const auto& a : basis) {
      const auto ea = character_exponent(A, beta, a);
      for (const auto& b : basis) {
        const auto eb = character_exponent(A, beta, b);
        const auto prod = mono_mul_exponent(a, b, A.params());
        std::optional<int> lhs;
        if (prod) {
          if (auto e = character_exponent(A, beta, prod->mono)) lhs = mod_floor(*e + prod->exponent, p);
        }
        std::optional<int> rhs;
        if (ea && eb) rhs = mod_floor(*ea + *eb, p);
        if (lhs != rhs)
          throw ConsistencyError("character " + std::to_string(j) + " is not multiplicative at (" + a.to_string() +
                                 ", " + b.to_string() + ")");
      }
    }
    out.push_back(beta);
  }
  return out;
}

/// (beta * (beta o S))(m) = eps(m) = ((beta o S) * beta)(m) for every basis m,
/// where (f * g)(h) = f(h_(1)) g(h_(2)).
inline bool check_convolution_inverse(const BookAlgebra& A, const Character& beta) {
  for (const auto& m : A.basis()) {
    CycScalar left = CycScalar::zero(A.p()), right = CycScalar::zero(A.p());
    for (const auto& [k, c] : A.coproduct(m)) {
      const CycScalar b0 = evaluate(A, beta, A.element(k[0]));
      const CycScalar b1 = evaluate(A, beta, A.element(k[1]));
      left += c * b0 * evaluate(A, beta, A.antipode(k[1]));
      right += c * evaluate(A, beta, A.antipode(k[0])) * b1;
    }
    const CycScalar eps = A.counit(m);
    if (!(left == eps) || !(right == eps)) return false;
  }
  return true;
}

/// l m l^(-1) for a basis monomial m.
inline Element conjugate(const BookAlgebra& A, const GroupLike& l, const Element& h) {
  const Element lh = A.element(l.monomial());
  const Element lh_inv = A.element(Monomial::g(mod_floor(-l.i, A.p())));
  return A.mul(A.mul(lh, h), lh_inv);
}

/// T(h) = beta(h_(1)) l h_(2) l^(-1) beta(S(h_(3))), from the double coproduct.
inline Element twist(const BookAlgebra& A, const GroupLike& l, const Character& beta, const Element& h) {
  const int p = A.p();
  Element out(p);
  const Monomial lm = l.monomial();
  const Monomial lm_inv = Monomial::g(mod_floor(-l.i, p));
  for (const auto& [key, c] : A.delta2(h)) {
    const auto left = character_exponent(A, beta, key[0]);
    if (!left) continue;
    const CycScalar right = evaluate(A, beta, A.antipode(key[2]));
    if (right.is_zero()) continue;
    const auto lm2 = mono_mul_exponent(lm, key[1], A.params());
    const auto conj = mono_mul_exponent(lm2->mono, lm_inv, A.params());
    out.add_term(conj->mono, (c * right).times_root_power(*left + lm2->exponent + conj->exponent));
  }
  return out;
}

/// Twist and S^2 agree on all p^3 basis elements.
inline bool implements_s_squared(const BookAlgebra& A, const GroupLike& l, const Character& beta) {
  for (const auto& m : A.basis()) {
    const Element h = A.element(m);
    if (!(twist(A, l, beta, h) == A.s_squared(h))) return false;
  }
  return true;
}

/// (beta(l) == 1, beta(l)). Cross-checks beta(g^i) against q^(i j).
inline std::pair<bool, CycScalar> is_stable(const BookAlgebra& A, const GroupLike& l, const Character& beta) {
  CycScalar value = evaluate(A, beta, A.element(l.monomial()));
  if (!(value == CycScalar::root_power(A.p(), static_cast<long long>(l.i) * beta.j)))
    throw ConsistencyError("beta(l) differs from q^(i j) at (i=" + std::to_string(l.i) + ", j=" + std::to_string(beta.j) + ")");
  const bool stable = value.is_one();
  return {stable, std::move(value)};
}

/// Brute-force verdicts for all p^2 pairs, each annotated with agreement
/// against closed_form_predicate. Never throws on disagreement.
inline Classification evaluate_pairs(const BookAlgebra& A) {
  Classification out{A.p(), A.s(), {}};
  const auto chars = enumerate_characters(A);
  for (const auto& l : enumerate_group_likes(A)) {
    for (const auto& beta : chars) {
      const bool implements = implements_s_squared(A, l, beta);
      auto [stable, value] = is_stable(A, l, beta);
      const ClosedFormVerdict predicted = closed_form_predicate(A.p(), A.s(), l.i, beta.j);
      const bool agrees = predicted == ClosedFormVerdict{implements, stable, implements && stable};
      out.pairs.push_back({l.i, beta.j, implements, stable, std::move(value), agrees});
    }
  }
  return out;
}

/// evaluate_pairs, raising ConsistencyError naming every pair on which brute
/// force and the congruences disagree.
inline Classification classify(const BookAlgebra& A) {
  Classification c = evaluate_pairs(A);
  if (!c.consistent()) {
    std::ostringstream os;
    os << "brute force disagrees with the closed-form congruences for H(" << c.p << ", " << c.s << ") at";
    for (const auto& r : c.pairs)
      if (!r.closed_form_agrees)
        os << " (i=" << r.i << ", j=" << r.j << ": implements=" << r.implements_s2 << ", stable=" << r.stable << ")";
    throw ConsistencyError(os.str());
  }
  return c;
}

/// One row of the per-s summary.
struct TableRow {
  int s = 0;
  bool mpi_exists = false;
  std::vector<PairIndex> mpi;
  std::vector<PairIndex> implements;
  std::vector<CycScalar> beta_l;  // beta(l) for each implementing pair
};

struct Table {
  int p = 0;
  std::vector<TableRow> rows;
};

inline TableRow summarize(const Classification& c) {
  TableRow row{c.s, false, c.mpi(), c.implements(), {}};
  row.mpi_exists = !row.mpi.empty();
  for (const auto& r : c.pairs)
    if (r.implements_s2) row.beta_l.push_back(r.beta_l);
  return row;
}

inline std::string render_text(const Classification& c) {
  auto list = [](const std::vector<PairIndex>& v) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : ", ") + std::string("(i=") + std::to_string(x.i) + ", j=" + std::to_string(x.j) + ")";
    return out.empty() ? std::string("none") : out;
  };
  std::ostringstream os;
  os << "H(" << c.p << ", " << c.s << ")\n";
  os << "  MPI: " << list(c.mpi()) << "\n";
  os << "  implements S^2: " << list(c.implements()) << "\n";
  os << "  pairs:\n";
  for (const auto& r : c.pairs)
    os << "    i=" << r.i << " j=" << r.j << "  implements_s2=" << (r.implements_s2 ? "yes" : "no")
       << "  stable=" << (r.stable ? "yes" : "no") << "  beta(l)=" << r.beta_l.to_string()
       << "  closed_form_agrees=" << (r.closed_form_agrees ? "yes" : "no") << "\n";
  return os.str();
}

inline std::string render_text(const Table& t) {
  std::ostringstream os;
  os << "p = " << t.p << "\n";
  os << "  s  MPI  MPI pairs            implementing pair    beta(l)\n";
  for (const auto& r : t.rows) {
    auto pairs = [](const std::vector<PairIndex>& v) {
      std::string out;
      for (const auto& x : v) out += (out.empty() ? "" : " ") + std::string("(") + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
      return out.empty() ? std::string("-") : out;
    };
    std::string betas;
    for (const auto& b : r.beta_l) betas += (betas.empty() ? "" : "; ") + b.to_string();
    os << "  " << r.s << "  " << (r.mpi_exists ? "yes" : "no ") << "  ";
    std::string mp = pairs(r.mpi), im = pairs(r.implements);
    mp.resize(std::max<std::size_t>(mp.size(), 19), ' ');
    im.resize(std::max<std::size_t>(im.size(), 19), ' ');
    os << mp << "  " << im << "  " << (betas.empty() ? "-" : betas) << "\n";
  }
  return os.str();
}

}  // namespace bookhopf
