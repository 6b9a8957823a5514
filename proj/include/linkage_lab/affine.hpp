#pragma once

// Affine Weyl groups acting by the dot action: translation lattices for the
// three variants, linkage and strong linkage, fundamental-alcove geometry,
// lengths and reduced words.
//
// Affine reflections: s_{beta,k} . x = s_beta . x + k beta, the reflection in
// the hyperplane <x + rho, beta^vee> = k. The wall spacing for beta is
// ell_beta = ell / gcd(ell, d_beta).

#include "linkage_lab/lattice.hpp"
#include "linkage_lab/weyl.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace linkage_lab {

enum class AffineVariant { Wl, WDl, WlVee };

inline AffineVariant parse_variant(const std::string& s) {
  if (s == "Wl" || s == "W") return AffineVariant::Wl;
  if (s == "WDl" || s == "WD") return AffineVariant::WDl;
  if (s == "WlVee" || s == "Vee") return AffineVariant::WlVee;
  throw InvalidInput("unknown affine variant \"" + s + "\" (expected Wl, WDl or WlVee)");
}

inline std::string to_string(AffineVariant v) {
  switch (v) {
    case AffineVariant::Wl: return "Wl";
    case AffineVariant::WDl: return "WDl";
    case AffineVariant::WlVee: return "WlVee";
  }
  return "?";
}

inline Int ell_beta(const RootSystem& rs, const RootVector& beta, Int ell) {
  if (ell < 1) throw InvalidInput("ell must be positive");
  return ell / std::gcd(ell, rs.half_length(beta));
}

inline Int ell_beta(const PositiveRoot& pr, Int ell) { return ell / std::gcd(ell, pr.half_length); }

namespace detail {

inline Lattice translation_lattice_any(const RootSystem& rs, Int ell, AffineVariant variant) {
  if (ell < 1) throw InvalidInput("ell must be positive");
  std::vector<std::vector<Rational>> gens;
  for (const auto& pr : rs.positive_roots()) {
    Rational scale;
    switch (variant) {
      case AffineVariant::Wl: scale = ell; break;
      case AffineVariant::WDl: scale = ell_beta(pr, ell); break;
      case AffineVariant::WlVee: scale = Rational(ell, pr.half_length); break;  // ell * beta / d_beta
    }
    std::vector<Rational> g;
    for (auto x : pr.root.coords()) g.push_back(scale * x);
    gens.push_back(std::move(g));
  }
  return Lattice::span(gens, rs.rank());
}

}  // namespace detail

/// Translation subgroup of the chosen affine Weyl group, in root-lattice
/// coordinates (units of 1). Requires an indecomposable root system.
inline Lattice translation_lattice(const RootSystem& rs, Int ell, AffineVariant variant) {
  if (!rs.indecomposable())
    throw InvalidInput("translation_lattice requires an indecomposable root system; apply per component");
  return detail::translation_lattice_any(rs, ell, variant);
}

/// Linkage test against a fixed (rs, ell, variant). Reuse it for many queries.
class LinkageContext {
 public:
  LinkageContext(const RootSystem& rs, Int ell, AffineVariant variant = AffineVariant::WDl)
      : rs_(&rs), ell_(ell), variant_(variant), lattice_(detail::translation_lattice_any(rs, ell, variant)) {}

  const RootSystem& roots() const { return *rs_; }
  Int ell() const { return ell_; }
  AffineVariant variant() const { return variant_; }
  const Lattice& lattice() const { return lattice_; }

  /// True iff mu = w_a . lambda for some w_a in the affine group.
  bool linked(const Weight& lambda, const Weight& mu) const {
    rs_->check_rank(lambda.size());
    rs_->check_rank(mu.size());
    return linked_to_orbit(orbit(*rs_, lambda + rs_->rho()), mu);
  }

  /// Same test with the orbit W(lambda + rho) precomputed.
  bool linked_to_orbit(const std::set<Weight>& shifted_orbit, const Weight& mu) const {
    Weight target = mu + rs_->rho();
    for (const auto& x : shifted_orbit)
      if (lattice_.contains(rs_->rational_root_coords(target - x))) return true;
    return false;
  }

 private:
  const RootSystem* rs_;
  Int ell_;
  AffineVariant variant_;
  Lattice lattice_;
};

inline bool linked(const RootSystem& rs, Int ell, const Weight& lambda, const Weight& mu,
                   AffineVariant variant = AffineVariant::WDl) {
  return LinkageContext(rs, ell, variant).linked(lambda, mu);
}

inline bool in_principal_block(const RootSystem& rs, Int ell, const Weight& lambda) {
  return linked(rs, ell, lambda, Weight(rs.rank()));
}

/// All weights with every |coordinate| <= box_bound linked to lambda0.
inline std::set<Weight> enumerate_block(const RootSystem& rs, Int ell, const Weight& lambda0, Int box_bound,
                                        AffineVariant variant = AffineVariant::WDl) {
  if (box_bound < 0) throw InvalidInput("box bound must be non-negative");
  LinkageContext ctx(rs, ell, variant);
  auto orb = orbit(rs, lambda0 + rs.rho());
  std::set<Weight> out;
  Weight w(std::vector<Int>(rs.rank(), -box_bound));
  while (true) {
    if (ctx.linked_to_orbit(orb, w)) out.insert(w);
    std::size_t i = 0;
    while (i < rs.rank() && w[i] == box_bound) w[i++] = -box_bound;
    if (i == rs.rank()) break;
    ++w[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strong linkage

struct AffineReflectionStep {
  RootVector beta;  // positive root
  Int m = 0;        // reflection s_{beta, m * ell_beta}
};

struct StrongLinkageChain {
  std::vector<Weight> weights;  // lambda = weights.front() >= ... >= weights.back() = mu
  std::vector<AffineReflectionStep> steps;
};

/// s_{beta, k} . x
inline Weight affine_reflect(const RootSystem& rs, const PositiveRoot& pr, Int k, const Weight& x) {
  Int p = RootSystem::coroot_pairing(x + rs.rho(), pr);
  return x - checked_sub(p, k) * pr.weight;
}

/// Searches for a chain witnessing mu strongly linked to lambda (W_{D,ell} reflections).
inline std::optional<StrongLinkageChain> strongly_linked(const RootSystem& rs, Int ell, const Weight& mu,
                                                         const Weight& lambda,
                                                         const LinkageContext* ctx = nullptr) {
  rs.check_rank(mu.size());
  rs.check_rank(lambda.size());
  auto diff = rs.in_root_lattice(lambda - mu);
  if (!diff) return std::nullopt;
  for (auto x : diff->coords())
    if (x < 0) return std::nullopt;
  std::optional<LinkageContext> own;
  if (!ctx) ctx = &own.emplace(rs, ell, AffineVariant::WDl);
  if (!ctx->linked(lambda, mu)) return std::nullopt;

  StrongLinkageChain chain;
  chain.weights.push_back(lambda);
  std::set<RootVector> dead;  // remaining differences known not to reach mu
  const auto& roots = rs.positive_roots();

  std::function<bool(const Weight&, const RootVector&)> descend = [&](const Weight& nu, const RootVector& rest) {
    if (rest.is_zero()) return true;
    if (dead.count(rest)) return false;
    Weight shifted = nu + rs.rho();
    for (const auto& pr : roots) {
      Int lb = ell_beta(pr, ell);
      Int kmax = -1;
      for (std::size_t j = 0; j < rest.size(); ++j) {
        if (pr.root[j] == 0) continue;
        Int q = rest[j] / pr.root[j];
        if (kmax < 0 || q < kmax) kmax = q;
      }
      Int p = RootSystem::coroot_pairing(shifted, pr);
      Int k = mod_floor(p, lb);
      if (k == 0) k = lb;
      for (; k <= kmax; k += lb) {
        Weight next = nu - k * pr.weight;
        RootVector next_rest = rest - k * pr.root;
        chain.weights.push_back(next);
        chain.steps.push_back({pr.root, (p - k) / lb});
        if (descend(next, next_rest)) return true;
        chain.weights.pop_back();
        chain.steps.pop_back();
      }
    }
    dead.insert(rest);
    return false;
  };

  if (descend(lambda, *diff)) return chain;
  return std::nullopt;
}

/// Re-checks every step of a chain from scratch.
inline bool verify_chain(const RootSystem& rs, Int ell, const StrongLinkageChain& chain, const Weight& mu,
                         const Weight& lambda) {
  if (chain.weights.empty() || chain.weights.size() != chain.steps.size() + 1) return false;
  if (chain.weights.front() != lambda || chain.weights.back() != mu) return false;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& st = chain.steps[i];
    if (!RootSystem::is_positive(st.beta) || !rs.is_root(st.beta)) return false;
    Int lb = ell_beta(rs, st.beta, ell);
    auto s = WeylElement::reflection(rs, st.beta);
    Weight expect = dot(rs, s, chain.weights[i]) + (st.m * lb) * rs.weight_of(st.beta);
    if (expect != chain.weights[i + 1]) return false;
    if (!rs.dominance_leq(chain.weights[i + 1], chain.weights[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Affine Weyl group elements

/// x -> w . x + C * translation. The translation is stored in root-lattice
/// coordinates in units of 1 (so ell * tau for the element (tau, w) of
/// ell Y x| W).
struct AffineWeylElement {
  RootVector translation;
  WeylElement w;

  static AffineWeylElement identity(std::size_t n) { return {RootVector(n), WeylElement::identity(n)}; }

  /// s_{beta, k}
  static AffineWeylElement reflection(const RootSystem& rs, const RootVector& beta, Int k) {
    return {k * beta, WeylElement::reflection(rs, beta)};
  }

  static AffineWeylElement pure_translation(const RootVector& t) {
    return {t, WeylElement::identity(t.size())};
  }

  friend AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b) {
    return {a.translation + a.w.act(b.translation), a.w * b.w};
  }

  AffineWeylElement inverse() const {
    auto wi = w.inverse();
    return {-wi.act(translation), wi};
  }

  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.translation == b.translation && a.w == b.w;
  }
  friend auto operator<=>(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (auto c = a.translation <=> b.translation; c != 0) return c;
    return a.w <=> b.w;
  }
};

inline Weight dot(const RootSystem& rs, const AffineWeylElement& wa, const Weight& lambda) {
  return dot(rs, wa.w, lambda) + rs.weight_of(wa.translation);
}

// ---------------------------------------------------------------------------
// Fundamental alcove

enum class AlcoveKind { Interior, Wall, Outside };

struct AlcovePosition {
  AlcoveKind kind = AlcoveKind::Outside;
  std::vector<AffineReflectionStep> walls;  // (beta, m) with <lambda+rho, beta^vee> = m ell_beta
};

/// Interior: 0 < <lambda+rho, beta^vee> < ell_beta for every positive beta.
/// Wall: lambda in the closed alcove and on at least one of its walls.
inline AlcovePosition fundamental_alcove_position(const RootSystem& rs, Int ell, const Weight& lambda) {
  rs.check_rank(lambda.size());
  if (ell < 1) throw InvalidInput("ell must be positive");
  Weight y = lambda + rs.rho();
  AlcovePosition out;
  bool closed = true;
  for (const auto& pr : rs.positive_roots()) {
    Int p = RootSystem::coroot_pairing(y, pr);
    Int lb = ell_beta(pr, ell);
    if (p < 0 || p > lb) closed = false;
    if (p == 0) out.walls.push_back({pr.root, 0});
    if (p == lb) out.walls.push_back({pr.root, 1});
  }
  if (!closed) {
    out.walls.clear();
    out.kind = AlcoveKind::Outside;
  } else {
    out.kind = out.walls.empty() ? AlcoveKind::Interior : AlcoveKind::Wall;
  }
  return out;
}

/// True iff lambda + rho lies on no hyperplane <x, beta^vee> = m ell_beta.
inline bool is_regular(const RootSystem& rs, Int ell, const Weight& lambda) {
  Weight y = lambda + rs.rho();
  for (const auto& pr : rs.positive_roots())
    if (mod_floor(RootSystem::coroot_pairing(y, pr), ell_beta(pr, ell)) == 0) return false;
  return true;
}

/// Alcove geometry for an indecomposable root system with W_{D,ell} = W_ell.
///
/// Simple affine generators: index 0 is the affine wall reflection
/// s_{theta, ell} with theta the highest short root; indices 1..n are the
/// simple reflections s_1..s_n.
class AlcoveGeometry {
 public:
  AlcoveGeometry(const RootSystem& rs, Int ell) : rs_(&rs), ell_(ell) {
    if (ell < 1) throw InvalidInput("ell must be positive");
    if (!rs.indecomposable()) throw InvalidInput("alcove geometry requires an indecomposable root system");
    for (auto d : rs.symmetrizer())
      if (std::gcd(d, ell) != 1)
        throw InvalidInput("alcove geometry requires gcd(d_i, ell) = 1 for all i (W_D,ell = W_ell)");
    theta_ = &rs.highest_short_root();
    gens_.push_back(AffineWeylElement::reflection(rs, theta_->root, ell));
    for (std::size_t i = 0; i < rs.rank(); ++i)
      gens_.push_back({RootVector(rs.rank()), WeylElement::simple(rs, i)});
    Int mx = 0;
    for (const auto& pr : rs.positive_roots()) mx = std::max(mx, RootSystem::coroot_pairing(rs.rho(), pr));
    scale_ = mx + 1;
  }

  const RootSystem& roots() const { return *rs_; }
  Int ell() const { return ell_; }
  const PositiveRoot& affine_wall_root() const { return *theta_; }
  std::size_t num_generators() const { return gens_.size(); }
  const AffineWeylElement& generator(std::size_t g) const { return gens_.at(g); }

  AffineWeylElement element(const std::vector<int>& word) const {
    auto e = AffineWeylElement::identity(rs_->rank());
    for (int g : word) {
      if (g < 0 || static_cast<std::size_t>(g) >= gens_.size()) throw InvalidInput("generator index out of range");
      e = e * gens_[g];
    }
    return e;
  }

  /// Number of hyperplanes H_{beta, m ell} separating the fundamental alcove from its image.
  Int length(const AffineWeylElement& wa) const {
    Weight y = image_of_generic_point(wa);
    Int total = 0;
    for (const auto& pr : rs_->positive_roots()) {
      Int c = RootSystem::coroot_pairing(y, pr);
      total += std::abs(floor_div(c, scale_ * ell_));
    }
    return total;
  }

  /// Reduced word (generator indices, leftmost first) by descent of the image alcove.
  std::vector<int> reduced_word(const AffineWeylElement& wa) const {
    Weight y = image_of_generic_point(wa);
    std::vector<int> word;
    while (auto g = violated_wall(y, scale_)) {
      word.push_back(*g);
      reflect_generator(y, *g, scale_);
    }
    return word;
  }

  struct Located {
    AffineWeylElement element;
    std::vector<int> word;
    Weight base;  // in the open fundamental alcove, element . base = lambda
  };

  /// Writes a regular weight as w_a . lambda0 with lambda0 in the fundamental alcove.
  Located locate(const Weight& lambda) const {
    rs_->check_rank(lambda.size());
    if (!is_regular(*rs_, ell_, lambda)) throw InvalidInput(to_string(lambda) + " lies on a reflection hyperplane");
    Weight y = lambda + rs_->rho();
    std::vector<int> word;
    while (auto g = violated_wall(y, 1)) {
      word.push_back(*g);
      reflect_generator(y, *g, 1);
    }
    return {element(word), word, y - rs_->rho()};
  }

  struct WeightUp {
    Weight weight;
    bool up = false;
  };

  /// lambda^s: with lambda = w_a . lambda0, returns (w_a s) . lambda0.
  WeightUp weight_up(const Weight& lambda, int generator_index) const {
    auto loc = locate(lambda);
    auto img = dot(*rs_, loc.element * generator(generator_index), loc.base);
    if (img == lambda) throw std::logic_error("wall crossing fixed a regular weight");
    return {img, rs_->dominance_leq(lambda, img)};
  }

  /// Vertices of the closed fundamental alcove in rho-shifted coordinates
  /// (x + rho), fundamental-weight basis, as rationals.
  std::vector<std::vector<Rational>> alcove_vertices() const {
    const std::size_t n = rs_->rank();
    std::vector<std::vector<Rational>> verts;
    verts.emplace_back(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> v(n, Rational(0));
      v[i] = Rational(ell_, theta_->coroot[i]);
      verts.push_back(std::move(v));
    }
    return verts;
  }

 private:
  Weight image_of_generic_point(const AffineWeylElement& wa) const {
    // rho / scale_ lies in the open fundamental alcove; work with scale_ * (x + rho).
    return wa.w.act(rs_->rho()) + scale_ * rs_->weight_of(wa.translation);
  }

  // y is scale * (x + rho); walls: <y, alpha_i^vee> = 0 and <y, theta^vee> = scale * ell.
  std::optional<int> violated_wall(const Weight& y, Int scale) const {
    for (std::size_t i = 0; i < rs_->rank(); ++i)
      if (y[i] < 0) return static_cast<int>(i + 1);
    if (RootSystem::coroot_pairing(y, *theta_) > scale * ell_) return 0;
    return std::nullopt;
  }

  void reflect_generator(Weight& y, int g, Int scale) const {
    if (g == 0) {
      Int p = RootSystem::coroot_pairing(y, *theta_);
      y = y - checked_sub(p, scale * ell_) * theta_->weight;
    } else {
      reflect_simple_inplace(*rs_, y, static_cast<std::size_t>(g - 1));
    }
  }

  const RootSystem* rs_;
  Int ell_;
  const PositiveRoot* theta_ = nullptr;
  std::vector<AffineWeylElement> gens_;
  Int scale_ = 1;
};

/// Every element of length <= max_length, grouped by length (breadth-first over generators).
inline std::vector<std::vector<AffineWeylElement>> elements_by_length(const AlcoveGeometry& geo, Int max_length) {
  std::vector<std::vector<AffineWeylElement>> layers;
  if (max_length < 0) return layers;
  std::set<AffineWeylElement> seen;
  auto e = AffineWeylElement::identity(geo.roots().rank());
  seen.insert(e);
  layers.push_back({e});
  for (Int len = 1; len <= max_length; ++len) {
    std::vector<AffineWeylElement> next;
    for (const auto& x : layers.back())
      for (std::size_t g = 0; g < geo.num_generators(); ++g) {
        auto y = x * geo.generator(g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    layers.push_back(std::move(next));
  }
  return layers;
}

/// Hyperplanes H_{beta, m ell_beta} meeting the open declared fundamental
/// alcove. Empty when the wall convention is right.
inline std::vector<AffineReflectionStep> hyperplanes_meeting_alcove(const AlcoveGeometry& geo) {
  const auto& rs = geo.roots();
  auto verts = geo.alcove_vertices();
  std::vector<AffineReflectionStep> bad;
  for (const auto& pr : rs.positive_roots()) {
    std::vector<Rational> vals;
    for (const auto& v : verts) {
      Rational s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += v[j] * pr.coroot[j];
      vals.push_back(s);
    }
    Rational lo = *std::min_element(vals.begin(), vals.end());
    Rational hi = *std::max_element(vals.begin(), vals.end());
    Int lb = ell_beta(pr, geo.ell());
    // |m| up to the alcove's extent along beta^vee, plus one
    Int bound = boost::rational_cast<Int>(hi / lb) + 1;
    if (Int b2 = boost::rational_cast<Int>(-lo / lb) + 1; b2 > bound) bound = b2;
    for (Int m = -bound; m <= bound; ++m) {
      Rational h = m * lb;
      if (lo < h && h < hi) bad.push_back({pr.root, m});
    }
  }
  return bad;
}

}  // namespace linkage_lab
