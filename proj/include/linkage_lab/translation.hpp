#pragma once

// Weight combinatorics of translation functors to and out of a wall, at the
// level of characters: the to-wall weight, the two out-of-wall weights, the
// up/down classification of a wall crossing, the Euler-characteristic shadow
// of the wall-crossing triangle, and reduced words for translations.
//
// L(nu1) is modelled by the characteristic-zero character chi(nu1); every
// weight picked out by a linkage condition is checked to be extremal
// (in W nu1) with multiplicity one.

#include "linkage_lab/affine.hpp"
#include "linkage_lab/characters.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace linkage_lab {

/// lambda in the open fundamental alcove, mu on exactly one of its walls.
struct WallDatum {
  Weight lambda;
  Weight mu;
  AffineReflectionStep wall;  // (beta, m): <mu + rho, beta^vee> = m ell_beta
  int generator = -1;         // simple affine generator fixing mu (0 = affine wall)
};

inline WallDatum make_wall_datum(const AlcoveGeometry& geo, const Weight& lambda, const Weight& mu) {
  const auto& rs = geo.roots();
  auto pl = fundamental_alcove_position(rs, geo.ell(), lambda);
  if (pl.kind != AlcoveKind::Interior)
    throw InvalidInput(to_string(lambda) + " is not in the interior of the fundamental alcove");
  auto pm = fundamental_alcove_position(rs, geo.ell(), mu);
  if (pm.kind != AlcoveKind::Wall)
    throw InvalidInput(to_string(mu) + " is not on a wall of the fundamental alcove");
  if (pm.walls.size() != 1)
    throw InvalidInput(to_string(mu) + " lies on more than one wall (stabilizer larger than {1, s})");
  WallDatum d{lambda, mu, pm.walls.front(), -1};
  const auto& beta = d.wall.beta;
  if (d.wall.m == 0) {
    for (std::size_t i = 0; i < rs.rank(); ++i)
      if (beta == rs.simple_root(i)) d.generator = static_cast<int>(i + 1);
  } else if (d.wall.m == 1 && beta == geo.affine_wall_root().root) {
    d.generator = 0;
  }
  if (d.generator < 0) throw std::logic_error("single wall of the closed alcove is not a simple affine wall");
  return d;
}

enum class CrossingCase { Up, Down };

inline std::string to_string(CrossingCase c) { return c == CrossingCase::Up ? "up" : "down"; }

/// A weight gamma of L(nu1) (or its dual) together with its multiplicity.
struct WeightHit {
  Weight gamma;
  Int mult = 0;
};

struct EulerCheck {
  Character lhs;  // E(w.lambda) + E(ws.lambda)
  Character rhs;  // sum over linked gamma of mult * E(gamma + w.mu)
  bool pass = false;
};

struct TranslationAnalysis {
  Weight nu1;
  Weight to_wall;                     // lambda_l
  std::pair<Weight, Weight> out_of_wall;
  Weight w_lambda, ws_lambda, w_mu;
  CrossingCase crossing = CrossingCase::Up;
  EulerCheck euler;
};

/// Precomputed data for one (lambda, mu) wall datum.
class WallCrossing {
 public:
  WallCrossing(const AlcoveGeometry& geo, const Weight& lambda, const Weight& mu)
      : geo_(&geo),
        link_(geo.roots(), geo.ell(), AffineVariant::WDl),
        datum_(make_wall_datum(geo, lambda, mu)) {
    const auto& rs = geo.roots();
    Weight diff = mu - lambda;
    if (diff.is_zero()) throw InvalidInput("mu - lambda = 0");
    nu1_ = dominant_conjugate(rs, diff);
    chi_ = weyl_character(rs, nu1_);
    chi_dual_ = dual(chi_);
    extremal_ = orbit(rs, nu1_);
    mu_orbit_ = orbit(rs, mu + rs.rho());
    lambda_orbit_ = orbit(rs, lambda + rs.rho());
  }

  const WallDatum& datum() const { return datum_; }
  const Weight& nu1() const { return nu1_; }
  const Character& character() const { return chi_; }

  /// Weights gamma of chi(nu1) with gamma + w.lambda linked to mu.
  std::vector<WeightHit> to_wall_hits(const AffineWeylElement& wa) const {
    const auto& rs = geo_->roots();
    Weight wl = dot(rs, wa, datum_.lambda);
    std::vector<WeightHit> hits;
    for (const auto& [g, m] : chi_.terms())
      if (link_.linked_to_orbit(mu_orbit_, g + wl)) hits.push_back({g, m});
    return hits;
  }

  /// Weights gamma of the dual of chi(nu1) with gamma + w.mu linked to lambda.
  std::vector<WeightHit> out_of_wall_hits(const AffineWeylElement& wa) const {
    const auto& rs = geo_->roots();
    Weight wm = dot(rs, wa, datum_.mu);
    std::vector<WeightHit> hits;
    for (const auto& [g, m] : chi_dual_.terms())
      if (link_.linked_to_orbit(lambda_orbit_, g + wm)) hits.push_back({g, m});
    return hits;
  }

  /// The unique lambda_l; throws PropertyViolation if uniqueness fails.
  Weight to_wall_weight(const AffineWeylElement& wa) const {
    const auto& rs = geo_->roots();
    auto hits = to_wall_hits(wa);
    Weight expected = dot(rs, wa, datum_.mu) - dot(rs, wa, datum_.lambda);
    if (hits.size() != 1 || hits.front().mult != 1)
      violation("to-wall: expected exactly one weight of multiplicity 1, found " + describe(hits), wa);
    if (hits.front().gamma != expected)
      violation("to-wall: weight " + to_string(hits.front().gamma) + " differs from w.mu - w.lambda = " +
                    to_string(expected),
                wa);
    if (!extremal_.count(hits.front().gamma)) violation("to-wall: weight is not extremal", wa);
    return hits.front().gamma;
  }

  /// (nu, nu'); throws PropertyViolation unless exactly two multiplicity-one
  /// weights appear and {nu + w.mu, nu' + w.mu} = {w.lambda, ws.lambda}.
  std::pair<Weight, Weight> out_of_wall_weights(const AffineWeylElement& wa) const {
    const auto& rs = geo_->roots();
    auto hits = out_of_wall_hits(wa);
    if (hits.size() != 2 || hits[0].mult != 1 || hits[1].mult != 1)
      violation("out-of-wall: expected exactly two weights of multiplicity 1, found " + describe(hits), wa);
    Weight wm = dot(rs, wa, datum_.mu);
    std::set<Weight> got{hits[0].gamma + wm, hits[1].gamma + wm};
    std::set<Weight> want{w_lambda(wa), ws_lambda(wa)};
    if (got != want) violation("out-of-wall: set identity {nu + w.mu, nu' + w.mu} = {w.lambda, ws.lambda} fails", wa);
    std::set<Weight> dual_extremal;
    for (const auto& x : extremal_) dual_extremal.insert(-x);
    for (const auto& h : hits)
      if (!dual_extremal.count(h.gamma)) violation("out-of-wall: weight is not extremal", wa);
    return {hits[0].gamma, hits[1].gamma};
  }

  CrossingCase classify(const AffineWeylElement& wa) const {
    const auto& rs = geo_->roots();
    Weight a = w_lambda(wa), b = ws_lambda(wa);
    if (a == b) violation("crossing fixes w.lambda", wa);
    if (rs.dominance_leq(a, b)) return CrossingCase::Up;
    if (rs.dominance_leq(b, a)) return CrossingCase::Down;
    violation("w.lambda and ws.lambda are incomparable", wa);
  }

  EulerCheck triangle_euler_check(const AffineWeylElement& wa) const {
    const auto& rs = geo_->roots();
    EulerCheck out;
    out.lhs = euler_characteristic(rs, w_lambda(wa)) + euler_characteristic(rs, ws_lambda(wa));
    Weight wm = dot(rs, wa, datum_.mu);
    out.rhs = Character(rs.rank());
    for (const auto& h : out_of_wall_hits(wa)) out.rhs += h.mult * euler_characteristic(rs, h.gamma + wm);
    out.pass = out.lhs == out.rhs;
    return out;
  }

  TranslationAnalysis analyze(const AffineWeylElement& wa) const {
    TranslationAnalysis a;
    a.nu1 = nu1_;
    a.to_wall = to_wall_weight(wa);
    a.out_of_wall = out_of_wall_weights(wa);
    a.w_lambda = w_lambda(wa);
    a.ws_lambda = ws_lambda(wa);
    a.w_mu = dot(geo_->roots(), wa, datum_.mu);
    a.crossing = classify(wa);
    a.euler = triangle_euler_check(wa);
    return a;
  }

  Weight w_lambda(const AffineWeylElement& wa) const { return dot(geo_->roots(), wa, datum_.lambda); }
  Weight ws_lambda(const AffineWeylElement& wa) const {
    return dot(geo_->roots(), wa * geo_->generator(datum_.generator), datum_.lambda);
  }

 private:
  static std::string describe(const std::vector<WeightHit>& hits) {
    std::ostringstream s;
    s << hits.size() << " {";
    for (std::size_t i = 0; i < hits.size(); ++i) s << (i ? ", " : "") << hits[i].gamma << " x" << hits[i].mult;
    s << "}";
    return s.str();
  }

  [[noreturn]] void violation(const std::string& what, const AffineWeylElement& wa) const {
    std::ostringstream s;
    s << what << " [" << geo_->roots().label() << ", ell=" << geo_->ell() << ", lambda=" << datum_.lambda
      << ", mu=" << datum_.mu << ", w=" << format_word(geo_->reduced_word(wa)) << "]";
    throw PropertyViolation(s.str());
  }

  static std::string format_word(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) s += (i ? " s" : "s") + std::to_string(word[i]);
    return s;
  }

  const AlcoveGeometry* geo_;
  LinkageContext link_;
  WallDatum datum_;
  Weight nu1_;
  Character chi_, chi_dual_;
  std::set<Weight> extremal_, mu_orbit_, lambda_orbit_;
};

/// The dominant W-conjugate of mu - lambda.
inline Weight nu1(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  Weight diff = mu - lambda;
  if (diff.is_zero()) throw InvalidInput("mu - lambda = 0");
  return dominant_conjugate(rs, diff);
}

struct TranslationWord {
  std::vector<int> word;
  std::vector<Weight> images;  // images of 0 under successive prefixes
  bool increasing = true;      // each image strictly above the previous one
};

/// Reduced word for the translation by ell * nu (nu dominant, root lattice).
inline TranslationWord translation_reduced_word(const AlcoveGeometry& geo, const RootVector& nu) {
  const auto& rs = geo.roots();
  rs.check_rank(nu.size());
  Weight nu_w = rs.weight_of(nu);
  if (!RootSystem::is_dominant(nu_w)) throw InvalidInput(to_string(nu) + " is not dominant");
  auto t = AffineWeylElement::pure_translation(geo.ell() * nu);
  TranslationWord out;
  out.word = geo.reduced_word(t);
  if (geo.element(out.word) != t) throw std::logic_error("reduced word does not reproduce the translation");
  Weight zero(rs.rank());
  auto prefix = AffineWeylElement::identity(rs.rank());
  out.images.push_back(zero);
  for (int g : out.word) {
    prefix = prefix * geo.generator(g);
    Weight img = dot(rs, prefix, zero);
    if (img == out.images.back() || !rs.dominance_leq(out.images.back(), img)) out.increasing = false;
    out.images.push_back(img);
  }
  if (out.images.back() != geo.ell() * nu_w) throw std::logic_error("translation does not send 0 to ell * nu");
  return out;
}

/// Integral weights of the closed fundamental alcove lying on exactly one wall.
inline std::vector<Weight> single_wall_weights(const AlcoveGeometry& geo) {
  const auto& rs = geo.roots();
  std::vector<Weight> out;
  Weight y(rs.rank());  // lambda + rho, each coordinate in [0, ell]
  while (true) {
    Weight lambda = y - rs.rho();
    auto pos = fundamental_alcove_position(rs, geo.ell(), lambda);
    if (pos.kind == AlcoveKind::Wall && pos.walls.size() == 1) out.push_back(lambda);
    std::size_t i = 0;
    while (i < rs.rank() && y[i] == geo.ell()) y[i++] = 0;
    if (i == rs.rank()) break;
    ++y[i];
  }
  return out;
}

/// Integral weights in the open fundamental alcove.
inline std::vector<Weight> interior_weights(const AlcoveGeometry& geo) {
  const auto& rs = geo.roots();
  std::vector<Weight> out;
  Weight y(rs.rank());
  while (true) {
    Weight lambda = y - rs.rho();
    if (fundamental_alcove_position(rs, geo.ell(), lambda).kind == AlcoveKind::Interior) out.push_back(lambda);
    std::size_t i = 0;
    while (i < rs.rank() && y[i] == geo.ell()) y[i++] = 0;
    if (i == rs.rank()) break;
    ++y[i];
  }
  return out;
}

}  // namespace linkage_lab
