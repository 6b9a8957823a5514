#pragma once

// Finite Weyl group: elements, linear and dot actions, lengths, orbits and
// Borel-Weil-Bott degree bookkeeping.

#include "linkage_lab/root_datum.hpp"

#include <deque>
#include <optional>
#include <set>
#include <vector>

namespace linkage_lab {

/// A Weyl group element stored as its action on both coordinate systems.
/// Equality is equality of the action on fundamental weights.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(std::size_t n) { return WeylElement(Matrix::identity(n), Matrix::identity(n)); }

  /// s_i, zero-based index.
  static WeylElement simple(const RootSystem& rs, std::size_t i) {
    if (i >= rs.rank()) throw InvalidInput("simple reflection index out of range");
    return reflection(rs, rs.simple_root(i));
  }

  /// s_beta(x) = x - <x, beta^vee> beta.
  static WeylElement reflection(const RootSystem& rs, const RootVector& beta) {
    const auto& pr = rs.root_data(beta);
    const std::size_t n = rs.rank();
    Matrix wm = Matrix::identity(n), rm = Matrix::identity(n);
    // weight coords: e_j -> e_j - coroot_j * (C beta)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j) wm(r, j) -= pr.coroot[j] * pr.weight[r];
    // root coords: alpha_j -> alpha_j - <alpha_j, beta^vee> beta, <alpha_j, beta^vee> = sum_k coroot_k C(k,j)
    for (std::size_t j = 0; j < n; ++j) {
      Int p = 0;
      for (std::size_t k = 0; k < n; ++k) p += pr.coroot[k] * rs.cartan()(k, j);
      for (std::size_t r = 0; r < n; ++r) rm(r, j) -= p * pr.root[r];
    }
    return WeylElement(std::move(wm), std::move(rm));
  }

  /// Product s_{word[0]} s_{word[1]} ... (zero-based indices, need not be reduced).
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
    auto w = identity(rs.rank());
    for (int i : word) {
      if (i < 0) throw InvalidInput("negative simple reflection index");
      w = w * simple(rs, static_cast<std::size_t>(i));
    }
    return w;
  }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return WeylElement(a.weight_ * b.weight_, a.root_ * b.root_);
  }

  WeylElement inverse() const {
    auto wi = exact_inverse(weight_);
    auto ri = exact_inverse(root_);
    Matrix w = wi.adjugate, r = ri.adjugate;
    // det is +-1
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) {
        w(i, j) *= wi.det;
        r(i, j) *= ri.det;
      }
    return WeylElement(std::move(w), std::move(r));
  }

  Weight act(const Weight& lambda) const { return Weight(weight_.apply(lambda.coords())); }
  RootVector act(const RootVector& beta) const { return RootVector(root_.apply(beta.coords())); }

  const Matrix& weight_matrix() const { return weight_; }
  const Matrix& root_matrix() const { return root_; }
  std::size_t rank() const { return weight_.rows(); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.weight_ == b.weight_; }
  friend auto operator<=>(const WeylElement& a, const WeylElement& b) { return a.weight_ <=> b.weight_; }

 private:
  WeylElement(Matrix w, Matrix r) : weight_(std::move(w)), root_(std::move(r)) {}
  Matrix weight_;
  Matrix root_;
};

inline Weight act(const WeylElement& w, const Weight& lambda) { return w.act(lambda); }

/// w . lambda = w(lambda + rho) - rho
inline Weight dot(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  return w.act(lambda + rs.rho()) - rs.rho();
}

/// Applies s_i to a weight without building matrices.
inline void reflect_simple_inplace(const RootSystem& rs, Weight& v, std::size_t i) {
  Int vi = v[i];
  if (vi == 0) return;
  for (std::size_t k = 0; k < rs.rank(); ++k) v[k] = checked_sub(v[k], checked_mul(vi, rs.cartan()(k, i)));
}

/// Number of positive roots sent to negative roots.
inline Int length(const RootSystem& rs, const WeylElement& w) {
  Int count = 0;
  for (const auto& pr : rs.positive_roots())
    if (!RootSystem::is_positive(w.act(pr.root))) ++count;
  return count;
}

/// Reduced word (zero-based indices, leftmost first) by descent on w(rho).
inline std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
  Weight v = w.act(rs.rho());
  std::vector<int> word;
  while (true) {
    std::size_t i = 0;
    while (i < rs.rank() && v[i] >= 0) ++i;
    if (i == rs.rank()) break;
    word.push_back(static_cast<int>(i));
    reflect_simple_inplace(rs, v, i);
  }
  return word;
}

/// Normalizes an arbitrary word to a reduced word for the same element.
inline std::vector<int> reduce_word(const RootSystem& rs, const std::vector<int>& word) {
  return reduced_word(rs, WeylElement::from_word(rs, word));
}

/// Descends v to the dominant chamber; returns the simple indices applied in order.
inline std::vector<int> descend_to_dominant(const RootSystem& rs, Weight& v) {
  std::vector<int> applied;
  while (true) {
    std::size_t i = 0;
    while (i < rs.rank() && v[i] >= 0) ++i;
    if (i == rs.rank()) return applied;
    applied.push_back(static_cast<int>(i));
    reflect_simple_inplace(rs, v, i);
  }
}

inline Weight dominant_conjugate(const RootSystem& rs, Weight v) {
  descend_to_dominant(rs, v);
  return v;
}

inline WeylElement longest_element(const RootSystem& rs) {
  Weight v = -rs.rho();
  return WeylElement::from_word(rs, descend_to_dominant(rs, v));
}

/// W-orbit of a weight under the linear action, by breadth-first closure.
inline std::set<Weight> orbit(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda.size());
  std::set<Weight> seen{lambda};
  std::deque<Weight> q{lambda};
  while (!q.empty()) {
    Weight v = q.front();
    q.pop_front();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (v[i] == 0) continue;
      Weight u = v;
      reflect_simple_inplace(rs, u, i);
      if (seen.insert(u).second) q.push_back(u);
    }
  }
  return seen;
}

/// Every element of W. Intended for small ranks (|W| <= 51840).
inline std::vector<WeylElement> all_elements(const RootSystem& rs) {
  std::vector<WeylElement> gens;
  for (std::size_t i = 0; i < rs.rank(); ++i) gens.push_back(WeylElement::simple(rs, i));
  auto e = WeylElement::identity(rs.rank());
  std::set<WeylElement> seen{e};
  std::vector<WeylElement> out{e};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      auto x = out[k] * g;
      if (seen.insert(x).second) {
        if (out.size() >= 51840) throw InvalidInput("Weyl group too large to enumerate");
        out.push_back(x);
      }
    }
  return out;
}

/// Outcome of the Borel-Weil-Bott computation for a weight mu.
struct BwbAnalysis {
  bool singular = true;
  Weight lambda;             // dominant, dot(w, mu) = lambda
  std::optional<WeylElement> w;
  std::vector<int> word;     // reduced word of w, zero-based
  Int degree = 0;            // length(w)
};

inline BwbAnalysis bwb_analysis(const RootSystem& rs, const Weight& mu) {
  rs.check_rank(mu.size());
  Weight v = mu + rs.rho();
  BwbAnalysis out;
  for (const auto& pr : rs.positive_roots())
    if (RootSystem::coroot_pairing(v, pr) == 0) return out;
  auto applied = descend_to_dominant(rs, v);
  // v_final = s_{ik} ... s_{i1} (mu + rho)
  std::vector<int> word(applied.rbegin(), applied.rend());
  auto w = WeylElement::from_word(rs, word);
  out.singular = false;
  out.lambda = v - rs.rho();
  out.word = reduced_word(rs, w);
  out.degree = static_cast<Int>(out.word.size());
  out.w = std::move(w);
  return out;
}

}  // namespace linkage_lab
