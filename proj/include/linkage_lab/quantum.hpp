#pragma once

// Quantum integers, factorials and binomials as integer Laurent polynomials in
// v, and their exact specialization at a primitive ell-th root of unity
// (residues modulo the ell-th cyclotomic polynomial).

#include "linkage_lab/root_datum.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace linkage_lab {

/// Integer Laurent polynomial; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Int, Int>;  // exponent -> coefficient

  LaurentPoly() = default;
  LaurentPoly(Int constant) { add_term(0, constant); }  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(Int exponent, Int coeff = 1) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
  }

  void add_term(Int exponent, Int coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(exponent, coeff);
    if (!fresh) {
      it->second = checked_add(it->second, coeff);
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(Int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }
  Int min_exponent() const { return terms_.begin()->first; }
  Int max_exponent() const { return terms_.rbegin()->first; }

  /// v -> v^{-1}
  LaurentPoly bar() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.add_term(-e, c);
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, checked_sub(0, c));
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) p.add_term(checked_add(ea, eb), checked_mul(ca, cb));
    return p;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exact quotient a / b; throws if b does not divide a in Z[v, v^-1].
  friend LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero Laurent polynomial");
    LaurentPoly rem = a, quot;
    const Int lead_e = b.max_exponent(), lead_c = b.coeff(lead_e);
    const Int low_b = b.min_exponent();
    while (!rem.is_zero()) {
      Int e = rem.max_exponent();
      Int c = rem.coeff(e);
      // once the remainder's span is shorter than b's it cannot be divisible
      if (e - rem.min_exponent() < lead_e - low_b || c % lead_c != 0)
        throw std::domain_error("Laurent polynomial division is not exact");
      LaurentPoly q = monomial(e - lead_e, c / lead_c);
      quot += q;
      rem -= q * b;
    }
    return quot;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      Int a = c < 0 ? -c : c;
      if (e == 0) {
        s += std::to_string(a);
        continue;
      }
      if (a != 1) s += std::to_string(a);
      s += "v";
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  Terms terms_;
};

/// [n]_d = (v^{nd} - v^{-nd}) / (v^d - v^{-d})
inline LaurentPoly qint(Int n, Int d) {
  if (d < 1) throw InvalidInput("d must be a positive integer");
  LaurentPoly p;
  Int a = n < 0 ? -n : n;
  for (Int k = 0; k < a; ++k) p.add_term(checked_mul(d, a - 1 - 2 * k), n < 0 ? -1 : 1);
  return p;
}

/// [n]_d! = [1]_d [2]_d ... [n]_d
inline LaurentPoly qfact(Int n, Int d) {
  if (n < 0) throw InvalidInput("quantum factorial needs n >= 0");
  LaurentPoly p = 1;
  for (Int s = 1; s <= n; ++s) p = p * qint(s, d);
  return p;
}

/// Product over s = 1..t of (v^{d(n-s+1)} - v^{-d(n-s+1)}) / (v^{ds} - v^{-ds}); n may be negative.
inline LaurentPoly qbinom(Int n, Int t, Int d) {
  if (t < 0) throw InvalidInput("t must be a natural number");
  if (d < 1) throw InvalidInput("d must be a positive integer");
  LaurentPoly num = 1, den = 1;
  for (Int s = 1; s <= t; ++s) {
    Int a = checked_mul(d, n - s + 1), b = checked_mul(d, s);
    num = num * (LaurentPoly::monomial(a) - LaurentPoly::monomial(-a));
    den = den * (LaurentPoly::monomial(b) - LaurentPoly::monomial(-b));
  }
  return exact_divide(num, den);
}

// ---------------------------------------------------------------------------
// Cyclotomic residues

namespace detail {

using DensePoly = std::vector<Int>;  // coefficient of v^i at index i

inline void trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial.
inline DensePoly divide_monic(DensePoly a, const DensePoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("cyclotomic division underflow");
  DensePoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Int c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = checked_sub(a[i - db + j], checked_mul(c, b[j]));
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("cyclotomic division not exact");
  return q;
}

inline void reduce_monic(DensePoly& a, const DensePoly& m) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    Int c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = checked_sub(a[i - dm + j], checked_mul(c, m[j]));
  }
  a.resize(dm, 0);
}

}  // namespace detail

/// Phi_ell(v), coefficients low to high, from v^ell - 1 = prod_{d | ell} Phi_d.
inline const std::vector<Int>& cyclotomic_polynomial(Int ell) {
  if (ell < 1 || ell > 10000) throw InvalidInput("ell out of range for cyclotomic arithmetic");
  static std::mutex mu;
  static std::map<Int, std::vector<Int>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(ell); it != cache.end()) return it->second;
  }
  detail::DensePoly p(static_cast<std::size_t>(ell) + 1, 0);
  p[0] = -1;
  p[ell] = 1;
  for (Int d = 1; d < ell; ++d)
    if (ell % d == 0) p = detail::divide_monic(p, cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  return cache.emplace(ell, std::move(p)).first->second;
}

/// Element of Z[v]/(Phi_ell), stored as its reduced representative.
class CycNumber {
 public:
  CycNumber(Int ell, std::vector<Int> coeffs) : ell_(ell), c_(std::move(coeffs)) { normalize(); }

  static CycNumber zero(Int ell) { return CycNumber(ell, {}); }
  static CycNumber one(Int ell) { return CycNumber(ell, {1}); }

  Int ell() const { return ell_; }
  /// Representative of degree < phi(ell), padded to length phi(ell).
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const {
    for (auto x : c_)
      if (x != 0) return false;
    return true;
  }

  friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    check(a, b);
    std::vector<Int> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.c_[i], b.c_[i]);
    return CycNumber(a.ell_, std::move(c));
  }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    check(a, b);
    std::vector<Int> c(a.c_.size() * 2, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
    return CycNumber(a.ell_, std::move(c));
  }
  friend bool operator==(const CycNumber&, const CycNumber&) = default;

  std::string to_string() const {
    LaurentPoly p;
    for (std::size_t i = 0; i < c_.size(); ++i) p.add_term(static_cast<Int>(i), c_[i]);
    return p.to_string();
  }

 private:
  static void check(const CycNumber& a, const CycNumber& b) {
    if (a.ell_ != b.ell_) throw InvalidInput("cyclotomic numbers at different ell");
  }
  void normalize() {
    const auto& phi = cyclotomic_polynomial(ell_);
    if (c_.size() < phi.size()) c_.resize(phi.size(), 0);
    detail::reduce_monic(c_, phi);
  }

  Int ell_;
  std::vector<Int> c_;
};

/// Image of p under v -> q, q a primitive ell-th root of unity.
inline CycNumber specialize(const LaurentPoly& p, Int ell) {
  if (ell < 2) throw InvalidInput("ell must be at least 2");
  std::vector<Int> dense(static_cast<std::size_t>(ell), 0);
  for (const auto& [e, c] : p.terms()) {
    auto k = static_cast<std::size_t>(mod_floor(e, ell));
    dense[k] = checked_add(dense[k], c);
  }
  return CycNumber(ell, std::move(dense));
}

/// Values of chi_lambda on K_i and on the bracket [K_i; c over t].
inline std::pair<CycNumber, CycNumber> chi_lambda(const RootSystem& rs, Int ell, const Weight& lambda,
                                                  std::size_t i, Int c, Int t) {
  rs.check_rank(lambda.size());
  if (i < 1 || i > rs.rank()) throw InvalidInput("index i must satisfy 1 <= i <= rank");
  Int di = rs.symmetrizer()[i - 1];
  Int li = lambda[i - 1];
  return {specialize(LaurentPoly::monomial(checked_mul(di, li)), ell),
          specialize(qbinom(checked_add(li, c), t, di), ell)};
}

}  // namespace linkage_lab
