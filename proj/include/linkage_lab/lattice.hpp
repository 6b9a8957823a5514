#pragma once

// Full-rank lattices in Q^n, stored as (1/denominator) * (integer lattice in
// Hermite normal form). Two lattices are equal iff their canonical forms are.

#include "linkage_lab/arith.hpp"

#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace linkage_lab {

namespace detail {

// Row-style Hermite normal form of the integer span of `rows` (each of length n).
// Result: n rows, upper triangular, positive diagonal, entries above each pivot
// reduced into [0, pivot). Throws if the span is not of full rank.
inline std::vector<std::vector<Int>> hermite_rows(std::vector<std::vector<Int>> rows, std::size_t n) {
  std::size_t top = 0;
  for (std::size_t c = 0; c < n; ++c) {
    // Euclid on column c among rows[top..]
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || std::abs(rows[r][c]) < std::abs(rows[best][c]))) best = r;
      if (best == rows.size()) throw InvalidInput("lattice generators are not of full rank");
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Int q = rows[r][c] / rows[top][c];
        for (std::size_t k = c; k < n; ++k) rows[r][k] = checked_sub(rows[r][k], checked_mul(q, rows[top][k]));
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][c] < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) {
      Int q = floor_div(rows[r][c], rows[top][c]);
      if (q == 0) continue;
      for (std::size_t k = c; k < n; ++k) rows[r][k] = checked_sub(rows[r][k], checked_mul(q, rows[top][k]));
    }
    ++top;
  }
  rows.resize(n);
  return rows;
}

}  // namespace detail

class Lattice {
 public:
  /// Lattice spanned by rational generators (each of length n).
  static Lattice span(const std::vector<std::vector<Rational>>& gens, std::size_t n) {
    if (gens.empty()) throw InvalidInput("empty generator set");
    Int den = 1;
    for (const auto& g : gens) {
      if (g.size() != n) throw InvalidInput("generator of wrong length");
      for (const auto& x : g) den = std::lcm(den, x.denominator());
    }
    std::vector<std::vector<Int>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
      std::vector<Int> r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = (g[i] * den).numerator();
      rows.push_back(std::move(r));
    }
    auto h = detail::hermite_rows(std::move(rows), n);
    Int g = den;
    for (const auto& r : h)
      for (auto x : r) g = std::gcd(g, x);
    Lattice out;
    out.denominator_ = den / g;
    out.rows_ = std::move(h);
    for (auto& r : out.rows_)
      for (auto& x : r) x /= g;
    out.n_ = n;
    return out;
  }

  static Lattice span_integral(const std::vector<std::vector<Int>>& gens, std::size_t n) {
    std::vector<std::vector<Rational>> q;
    q.reserve(gens.size());
    for (const auto& g : gens) q.emplace_back(g.begin(), g.end());
    return span(q, n);
  }

  bool contains(const std::vector<Rational>& v) const {
    if (v.size() != n_) throw InvalidInput("vector of wrong length");
    std::vector<Int> s(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Rational x = v[i] * denominator_;
      if (x.denominator() != 1) return false;
      s[i] = x.numerator();
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (s[c] % rows_[c][c] != 0) return false;
      Int q = s[c] / rows_[c][c];
      if (q == 0) continue;
      for (std::size_t k = c; k < n_; ++k) s[k] = checked_sub(s[k], checked_mul(q, rows_[c][k]));
    }
    return true;
  }

  bool contains(const std::vector<Int>& v) const {
    return contains(std::vector<Rational>(v.begin(), v.end()));
  }

  Int denominator() const { return denominator_; }
  /// Basis vectors as columns (column Hermite normal form), scaled by denominator().
  Matrix basis_columns() const {
    Matrix m(n_, n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) m(c, r) = rows_[r][c];
    return m;
  }
  const std::vector<std::vector<Int>>& basis_rows() const { return rows_; }
  std::size_t dimension() const { return n_; }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Int denominator_ = 1;
  std::vector<std::vector<Int>> rows_;
  std::size_t n_ = 0;
};

}  // namespace linkage_lab
