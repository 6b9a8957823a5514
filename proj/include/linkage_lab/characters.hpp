#pragma once

// Formal characters with exact integer multiplicities: Weyl characters by
// Freudenthal's recursion, Kostant partition functions, Verma and Weyl weight
// multiplicities, Euler characteristics, height-truncated characters of the
// induced B-modules I_mu, and Ext-dimension predictions.

#include "linkage_lab/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace linkage_lab {

/// Finite map weight -> nonzero integer multiplicity.
class Character {
 public:
  using Map = std::map<Weight, Int>;

  Character() = default;
  explicit Character(std::size_t rank) : rank_(rank) {}

  static Character single(const Weight& w, Int mult = 1) {
    Character c(w.size());
    c.add(w, mult);
    return c;
  }

  void add(const Weight& w, Int mult) {
    if (mult == 0) return;
    if (rank_ == 0) rank_ = w.size();
    if (w.size() != rank_) throw InvalidInput("character weights of different rank");
    auto [it, fresh] = terms_.try_emplace(w, mult);
    if (!fresh) {
      it->second = checked_add(it->second, mult);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int mult(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  const Map& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::size_t rank() const { return rank_; }
  bool is_signed() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second < 0; });
  }

  /// Sum of multiplicities.
  Int dimension() const {
    Int s = 0;
    for (const auto& [w, m] : terms_) s = checked_add(s, m);
    return s;
  }

  Character& operator+=(const Character& o) {
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
  }
  Character& operator-=(const Character& o) {
    for (const auto& [w, m] : o.terms_) add(w, checked_sub(0, m));
    return *this;
  }
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(Int k, const Character& a) {
    Character out(a.rank_);
    for (const auto& [w, m] : a.terms_) out.add(w, checked_mul(k, m));
    return out;
  }

  /// Equality is exact map equality.
  friend bool operator==(const Character& a, const Character& b) { return a.terms_ == b.terms_; }

 private:
  std::size_t rank_ = 0;
  Map terms_;
};

/// Convolution of multiplicity maps.
inline Character tensor(const Character& a, const Character& b) {
  Character out(a.rank());
  for (const auto& [wa, ma] : a.terms())
    for (const auto& [wb, mb] : b.terms()) out.add(wa + wb, checked_mul(ma, mb));
  return out;
}

/// Negates every weight.
inline Character dual(const Character& ch) {
  Character out(ch.rank());
  for (const auto& [w, m] : ch.terms()) out.add(-w, m);
  return out;
}

inline Character dual(const RootSystem&, const Character& ch) { return dual(ch); }

/// Dominant weights mu <= lambda (lambda dominant).
inline std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::vector<Weight> order{lambda};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& pr : rs.positive_roots()) {
      Weight next = order[k] - pr.weight;
      if (RootSystem::is_dominant(next) && seen.insert(next).second) order.push_back(next);
    }
  }
  return order;
}

/// Product over positive roots of <lambda+rho, beta^vee> / <rho, beta^vee>.
inline Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda.size());
  Rational d = 1;
  Weight shifted = lambda + rs.rho();
  for (const auto& pr : rs.positive_roots())
    d *= Rational(RootSystem::coroot_pairing(shifted, pr), RootSystem::coroot_pairing(rs.rho(), pr));
  if (d.denominator() != 1) throw std::logic_error("non-integral Weyl dimension");
  return d.numerator();
}

/// Multiplicities of dominant weights of the irreducible character chi(lambda).
inline std::map<Weight, Int> freudenthal_dominant(const RootSystem& rs, const Weight& lambda) {
  auto dom = dominant_weights_below(rs, lambda);
  // process in order of increasing depth below lambda
  std::vector<std::pair<Int, Weight>> by_depth;
  for (const auto& mu : dom) by_depth.emplace_back(RootSystem::height(*rs.in_root_lattice(lambda - mu)), mu);
  std::sort(by_depth.begin(), by_depth.end());

  std::map<Weight, Int> mult;
  Weight top = lambda + rs.rho();
  const Int top_norm = rs.scaled_weight_form(top, top);
  const std::vector<Int>& d = rs.symmetrizer();
  for (const auto& [depth, mu] : by_depth) {
    if (depth == 0) {
      mult[mu] = 1;
      continue;
    }
    Int sum = 0;
    for (const auto& pr : rs.positive_roots()) {
      for (Int k = 1;; ++k) {
        Weight nu = mu + k * pr.weight;
        auto it = mult.find(dominant_conjugate(rs, nu));
        if (it == mult.end() || it->second == 0) break;
        // (nu, beta) = sum_j beta_j d_j nu_j
        Int ip = 0;
        for (std::size_t j = 0; j < rs.rank(); ++j) ip = checked_add(ip, checked_mul(pr.root[j] * d[j], nu[j]));
        sum = checked_add(sum, checked_mul(it->second, ip));
      }
    }
    Weight shifted = mu + rs.rho();
    Int denom = checked_sub(top_norm, rs.scaled_weight_form(shifted, shifted));
    Int num = checked_mul(checked_mul(2, rs.form_scale()), sum);
    if (denom <= 0 || num % denom != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
    mult[mu] = num / denom;
  }
  return mult;
}

/// Full character of the irreducible (= Weyl, char 0) module of highest weight lambda.
inline Character weyl_character(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda.size());
  if (!RootSystem::is_dominant(lambda)) throw InvalidInput(to_string(lambda) + " is not dominant");
  Character ch(rs.rank());
  for (const auto& [mu, m] : freudenthal_dominant(rs, lambda))
    for (const auto& w : orbit(rs, mu)) ch.add(w, m);
  return ch;
}

// ---------------------------------------------------------------------------
// Kostant partition function

/// Counts multisets of positive roots summing to each vector in a box
/// [0, bound_1] x ... x [0, bound_n] (simple-root coordinates), optionally
/// refined by the number of parts up to max_parts.
class KostantTable {
 public:
  KostantTable(const RootSystem& rs, std::vector<Int> bound, Int max_parts = -1)
      : bound_(std::move(bound)), max_parts_(max_parts) {
    const std::size_t n = rs.rank();
    if (bound_.size() != n) throw InvalidInput("box of wrong rank");
    stride_.assign(n, 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (bound_[i] < 0) throw InvalidInput("negative box bound");
      stride_[i] = total;
      total *= static_cast<std::size_t>(bound_[i] + 1);
      if (total > 50'000'000) throw InvalidInput("Kostant table too large");
    }
    layers_ = max_parts_ < 0 ? 1 : static_cast<std::size_t>(max_parts_ + 1);
    table_.assign(total * layers_, 0);
    table_[0] = 1;
    std::vector<Int> v(n);
    for (const auto& pr : rs.positive_roots()) {
      std::ptrdiff_t shift = 0;
      bool fits = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (pr.root[i] > bound_[i]) fits = false;
        shift += static_cast<std::ptrdiff_t>(pr.root[i] * stride_[i]);
      }
      if (!fits) continue;
      // unbounded knapsack: increasing linear index visits v - beta before v
      for (std::size_t idx = 0; idx < total; ++idx) {
        decode(idx, v);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
          if (v[i] < pr.root[i]) ok = false;
        if (!ok) continue;
        std::size_t from = idx - static_cast<std::size_t>(shift);
        if (max_parts_ < 0) {
          table_[idx] = checked_add(table_[idx], table_[from]);
        } else {
          for (std::size_t k = 1; k < layers_; ++k)
            table_[k * total + idx] = checked_add(table_[k * total + idx], table_[(k - 1) * total + from]);
        }
      }
    }
    total_ = total;
  }

  /// Total count (no parts refinement) or count with exactly `parts` parts.
  Int count(const RootVector& sigma, Int parts = -1) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (sigma[i] < 0) return 0;
      if (sigma[i] > bound_[i]) throw InvalidInput("vector outside the Kostant table box");
      idx += static_cast<std::size_t>(sigma[i]) * stride_[i];
    }
    if (max_parts_ < 0) {
      if (parts >= 0) throw InvalidInput("table built without parts refinement");
      return table_[idx];
    }
    if (parts < 0) {
      Int s = 0;
      for (std::size_t k = 0; k < layers_; ++k) s = checked_add(s, table_[k * total_ + idx]);
      return s;
    }
    if (parts > max_parts_) throw InvalidInput("parts beyond table");
    return table_[static_cast<std::size_t>(parts) * total_ + idx];
  }

 private:
  void decode(std::size_t idx, std::vector<Int>& v) const {
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = static_cast<Int>(idx % static_cast<std::size_t>(bound_[i] + 1));
      idx /= static_cast<std::size_t>(bound_[i] + 1);
    }
  }

  std::vector<Int> bound_;
  Int max_parts_;
  std::vector<std::size_t> stride_;
  std::size_t layers_ = 1;
  std::size_t total_ = 0;
  std::vector<Int> table_;
};

/// Number of multisets of positive roots summing to sigma.
inline Int kostant_partition(const RootSystem& rs, const RootVector& sigma) {
  rs.check_rank(sigma.size());
  for (auto x : sigma.coords())
    if (x < 0) return 0;
  return KostantTable(rs, sigma.coords()).count(sigma);
}

/// Number of multisets of exactly `parts` positive roots summing to sigma.
inline Int kostant_partition_with_parts(const RootSystem& rs, const RootVector& sigma, Int parts) {
  rs.check_rank(sigma.size());
  if (parts < 0) throw InvalidInput("number of parts must be non-negative");
  for (auto x : sigma.coords())
    if (x < 0) return 0;
  return KostantTable(rs, sigma.coords(), parts).count(sigma, parts);
}

/// dim M(nu)_tau = P(nu - tau).
inline Int verma_weight_mult(const RootSystem& rs, const Weight& nu, const Weight& tau) {
  auto diff = rs.in_root_lattice(nu - tau);
  if (!diff) return 0;
  return kostant_partition(rs, *diff);
}

inline Int weyl_weight_mult(const RootSystem& rs, const Weight& nu, const Weight& tau) {
  return weyl_character(rs, nu).mult(tau);
}

/// Result of the Verma/Weyl stabilization scan.
struct StabilizationCertificate {
  Int n = 0;           // nu = n * rho
  Weight nu;
  Weight weight;       // nu - (mu - tau), the weight compared in M(nu) and Delta(nu)
  Int verma = 0;
  Int weyl = 0;
  Int previous_verma = 0;  // at n - 1 (when n > 0)
  Int previous_weyl = 0;
};

/// Smallest n with dim M(n rho)_{n rho - sigma} = dim Delta(n rho)_{n rho - sigma}, sigma = mu - tau.
inline StabilizationCertificate stabilization_nu(const RootSystem& rs, const Weight& mu, const Weight& tau) {
  rs.check_rank(mu.size());
  rs.check_rank(tau.size());
  auto sigma = rs.in_root_lattice(mu - tau);
  if (!sigma || std::any_of(sigma->coords().begin(), sigma->coords().end(), [](Int x) { return x < 0; }))
    throw InvalidInput(to_string(tau) + " is not a weight of I_" + to_string(mu) + " (mu - tau not in N R+)");
  const Int verma = kostant_partition(rs, *sigma);
  const Int bound = *std::max_element(sigma->coords().begin(), sigma->coords().end()) + 1;
  StabilizationCertificate cert;
  Int prev_weyl = 0;
  for (Int n = 0; n <= bound; ++n) {
    Weight nu = n * rs.rho();
    Weight w = nu - rs.weight_of(*sigma);
    Int weyl = weyl_character(rs, nu).mult(w);
    if (weyl == verma) {
      cert.n = n;
      cert.nu = nu;
      cert.weight = w;
      cert.verma = verma;
      cert.weyl = weyl;
      cert.previous_verma = n > 0 ? verma : 0;
      cert.previous_weyl = n > 0 ? prev_weyl : 0;
      return cert;
    }
    prev_weyl = weyl;
  }
  throw std::logic_error("stabilization scan exceeded its proven bound");
}

/// Alternating sum of the cohomology characters of the line bundle mu.
inline Character euler_characteristic(const RootSystem& rs, const Weight& mu) {
  auto b = bwb_analysis(rs, mu);
  if (b.singular) return Character(rs.rank());
  auto ch = weyl_character(rs, b.lambda);
  return b.degree % 2 == 0 ? ch : Int{-1} * ch;
}

/// Height-truncated character of I_mu: multiplicity P(sigma) at mu - sigma.
struct TruncatedBCharacter {
  Weight mu;
  Int height_bound = 0;
  Character character;
};

namespace detail {

/// All sigma in N^n with sum <= h.
inline std::vector<RootVector> nonneg_vectors_up_to_height(std::size_t n, Int h) {
  std::vector<RootVector> out;
  if (h < 0) return out;
  RootVector v(n);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
    if (i == n) {
      out.push_back(v);
      return;
    }
    for (Int k = 0; k <= left; ++k) {
      v[i] = k;
      rec(i + 1, left - k);
    }
    v[i] = 0;
  };
  rec(0, h);
  return out;
}

}  // namespace detail

inline TruncatedBCharacter b_induced_character(const RootSystem& rs, const Weight& mu, Int height_bound) {
  rs.check_rank(mu.size());
  if (height_bound < 0) throw InvalidInput("height bound must be non-negative");
  KostantTable table(rs, std::vector<Int>(rs.rank(), height_bound));
  TruncatedBCharacter out{mu, height_bound, Character(rs.rank())};
  for (const auto& sigma : detail::nonneg_vectors_up_to_height(rs.rank(), height_bound))
    out.character.add(mu - rs.weight_of(sigma), table.count(sigma));
  return out;
}

/// Predicted dim Ext^n between the one-dimensional modules k(ell zeta), k(ell eta):
/// zero in odd degree, else the number of multisets of n/2 positive roots summing to zeta - eta.
inline Int ext_b_dimension(const RootSystem& rs, Int /*ell*/, const Weight& zeta, const Weight& eta, Int n) {
  rs.check_rank(zeta.size());
  rs.check_rank(eta.size());
  if (n < 0) throw InvalidInput("degree must be non-negative");
  if (n % 2 == 1) return 0;
  auto diff = rs.in_root_lattice(zeta - eta);
  if (!diff) return 0;
  return kostant_partition_with_parts(rs, *diff, n / 2);
}

struct VanishingThreshold {
  Int n = 0;
  Weight nu;
};

/// Smallest n such that I_mu / J_{n rho, mu} has no weight mu - sigma with
/// height(sigma) <= max_height.
inline VanishingThreshold vanishing_threshold(const RootSystem& rs, Int max_height, const Weight& mu) {
  rs.check_rank(mu.size());
  VanishingThreshold out{0, Weight(rs.rank())};
  if (max_height < 0) return out;
  auto sigmas = detail::nonneg_vectors_up_to_height(rs.rank(), max_height);
  KostantTable table(rs, std::vector<Int>(rs.rank(), max_height));
  for (Int n = 0; n <= max_height + 1; ++n) {
    Weight nu = n * rs.rho();
    auto ch = weyl_character(rs, nu);
    bool covered = std::all_of(sigmas.begin(), sigmas.end(), [&](const RootVector& s) {
      return ch.mult(nu - rs.weight_of(s)) == table.count(s);
    });
    if (covered) return {n, nu};
  }
  throw std::logic_error("vanishing threshold scan exceeded its bound");
}

}  // namespace linkage_lab
