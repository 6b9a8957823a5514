#pragma once

// Batch property checks over finite grids. Each check fans its instances out
// over worker threads and merges the per-instance results in input order, so
// reports do not depend on scheduling.

#include "linkage_lab/quantum.hpp"
#include "linkage_lab/translation.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace linkage_lab {

struct CheckReport {
  std::string check;
  Int instances = 0;
  Int passes = 0;
  std::vector<std::string> failures;
  std::map<std::string, Int> stats;

  bool ok() const { return failures.empty() && passes == instances; }

  void merge(const CheckReport& o) {
    instances += o.instances;
    passes += o.passes;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    for (const auto& [k, v] : o.stats) stats[k] += v;
  }
  void pass() {
    ++instances;
    ++passes;
  }
  void fail(std::string what) {
    ++instances;
    failures.push_back(std::move(what));
  }
  void record(bool ok, const std::function<std::string()>& what) {
    if (ok) pass();
    else fail(what());
  }
};

// ---------------------------------------------------------------------------
// Grid parameters. Defaults are the acceptance grids.

struct PropAffGrid {
  std::vector<std::string> types{"A2", "B2", "C3", "G2"};
  Int ell_min = 2, ell_max = 12;
};

struct StrongLinkageGrid {
  std::vector<std::string> types{"A1", "A2"};
  std::vector<Int> ells{5, 7};
  Int box_factor = 2;  // |coords| <= box_factor * ell
};

struct BwbGrid {
  std::string type = "A2";
  Int ell = 5;
  Int box = 10;
};

struct CharacterGrid {
  std::vector<std::string> types{"A1", "A2", "B2", "G2"};
  Int max_coord_sum = 6;
};

struct StabilizationCase {
  std::string type;
  std::string mu, tau;                // weight literals
  std::optional<Int> expected_n;      // frozen N when known
  std::optional<Int> expected_mult;
};

struct StabilizationGrid {
  std::vector<StabilizationCase> cases{
      {"A1", "[0]", "[-2]", std::nullopt, std::nullopt},
      {"A1", "[0]", "[-4]", 2, 1},
      {"A1", "[0]", "[-6]", std::nullopt, std::nullopt},
      {"A2", "[0,0]", "[-1,-1]", std::nullopt, std::nullopt},
  };
};

struct TypeEll {
  std::string type;
  Int ell = 0;
};

struct TriangleGrid {
  std::vector<TypeEll> instances{{"A1", 5}, {"A1", 7}, {"A2", 5}};
  Int max_length = 4;
};

struct QuantumGrid {
  Int max_abs_n = 12, max_t = 12, max_d = 3;
  Int pascal_max_n = 10;
  std::vector<Int> vanishing_ells{3, 5, 7, 9, 11};
};

struct AlcoveGrid {
  std::vector<std::string> wall_types{"A1", "A2", "B2", "G2"};
  std::vector<Int> wall_ells{5, 7};
  std::vector<std::string> length_types{"A1", "A2"};
  Int length_ell = 5;
  Int max_length = 6;
  std::vector<TypeEll> translation_instances{{"A1", 5}, {"A2", 5}, {"B2", 5}, {"G2", 7}};
  Int max_height = 3;
};

struct GridConfig {
  PropAffGrid prop_aff;
  StrongLinkageGrid strong_linkage;
  BwbGrid bwb;
  CharacterGrid characters;
  StabilizationGrid stabilization;
  std::map<std::string, TriangleGrid> triangle{{"rank2", TriangleGrid{}}};
  QuantumGrid quantum;
  AlcoveGrid alcove;
};

// ---------------------------------------------------------------------------
// Parallel fan-out

/// Worker count: LINKAGELAB_THREADS if set to a positive integer, else the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("LINKAGELAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

/// Runs task(i) for i in [0, n) and merges the reports in index order.
/// An exception escaping a task becomes a failure of that instance.
inline CheckReport run_instances(const std::string& name, std::size_t n,
                                 const std::function<CheckReport(std::size_t)>& task,
                                 const std::function<std::string(std::size_t)>& label) {
  std::vector<CheckReport> parts(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        parts[i] = task(i);
      } catch (const std::exception& e) {
        parts[i] = CheckReport{};
        parts[i].fail(label(i) + ": " + e.what());
      }
    }
  };
  unsigned t = std::min<std::size_t>(thread_count(), std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  CheckReport out;
  out.check = name;
  for (const auto& p : parts) out.merge(p);
  return out;
}

namespace detail {

inline std::string tag(const std::string& type, Int ell) {
  return type + " ell=" + std::to_string(ell);
}

// All weights with every coordinate in [-b, b].
inline std::vector<Weight> box_weights(std::size_t n, Int b) {
  std::vector<Weight> out;
  Weight w(std::vector<Int>(n, -b));
  while (true) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < n && w[i] == b) w[i++] = -b;
    if (i == n) break;
    ++w[i];
  }
  return out;
}

// Dominant weights with coordinate sum <= s.
inline std::vector<Weight> dominant_up_to_sum(std::size_t n, Int s) {
  std::vector<Weight> out;
  for (const auto& v : nonneg_vectors_up_to_height(n, s)) out.emplace_back(v.coords());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The checks

/// W_{D,ell} = W_ell iff gcd(d_i, ell) = 1 for all i; otherwise W_{D,ell} = W_ell^vee.
inline CheckReport verify_prop_aff(const PropAffGrid& g) {
  std::vector<std::pair<std::string, Int>> inst;
  for (const auto& t : g.types)
    for (Int ell = g.ell_min; ell <= g.ell_max; ++ell) inst.emplace_back(t, ell);
  return run_instances(
      "prop-aff", inst.size(),
      [&](std::size_t i) {
        const auto& [type, ell] = inst[i];
        auto rs = RootSystem::of_type(type);
        bool coprime = true;
        for (auto d : rs.symmetrizer()) coprime = coprime && std::gcd(d, ell) == 1;
        auto wd = translation_lattice(rs, ell, AffineVariant::WDl);
        bool eq_w = wd == translation_lattice(rs, ell, AffineVariant::Wl);
        bool eq_vee = wd == translation_lattice(rs, ell, AffineVariant::WlVee);
        CheckReport r;
        r.record(eq_w == coprime && (coprime || eq_vee), [&] {
          std::ostringstream s;
          s << detail::tag(type, ell) << ": gcd criterion " << (coprime ? "holds" : "fails")
            << " but WDl==Wl is " << eq_w << " and WDl==WlVee is " << eq_vee;
          return s.str();
        });
        r.stats[coprime ? "coprime" : "not_coprime"] = 1;
        return r;
      },
      [&](std::size_t i) { return detail::tag(inst[i].first, inst[i].second); });
}

/// strongly_linked(mu, lambda) implies linked and mu <= lambda; every chain re-verifies.
inline CheckReport verify_strong_linkage(const StrongLinkageGrid& g) {
  struct Setup {
    std::string type;
    Int ell;
    RootSystem rs;
    std::vector<Weight> box;
  };
  std::vector<Setup> setups;
  for (const auto& t : g.types)
    for (Int ell : g.ells) {
      auto rs = RootSystem::of_type(t);
      auto box = detail::box_weights(rs.rank(), g.box_factor * ell);
      setups.push_back({t, ell, std::move(rs), std::move(box)});
    }
  std::vector<std::pair<std::size_t, std::size_t>> inst;  // (setup, lambda index)
  for (std::size_t s = 0; s < setups.size(); ++s)
    for (std::size_t k = 0; k < setups[s].box.size(); ++k) inst.emplace_back(s, k);
  return run_instances(
      "strong-linkage", inst.size(),
      [&](std::size_t i) {
        const auto& su = setups[inst[i].first];
        const Weight& lambda = su.box[inst[i].second];
        LinkageContext ctx(su.rs, su.ell, AffineVariant::WDl);
        CheckReport r;
        for (const auto& mu : su.box) {
          auto chain = strongly_linked(su.rs, su.ell, mu, lambda, &ctx);
          if (!chain) {
            r.pass();
            continue;
          }
          ++r.stats["strongly_linked_pairs"];
          bool ok = ctx.linked(mu, lambda) && su.rs.dominance_leq(mu, lambda) &&
                    verify_chain(su.rs, su.ell, *chain, mu, lambda);
          r.record(ok, [&] {
            return detail::tag(su.type, su.ell) + ": mu=" + to_string(mu) + " up to lambda=" + to_string(lambda) +
                   " fails linkage, dominance or chain re-verification";
          });
        }
        return r;
      },
      [&](std::size_t i) {
        const auto& su = setups[inst[i].first];
        return detail::tag(su.type, su.ell) + " lambda=" + to_string(su.box[inst[i].second]);
      });
}

/// BWB degree against the coroot count, and uniqueness of the dominant dot-image over all of W.
inline CheckReport verify_bwb(const BwbGrid& g) {
  auto rs = RootSystem::of_type(g.type);
  rs.validate_ell(g.ell);
  auto elements = all_elements(rs);
  auto box = detail::box_weights(rs.rank(), g.box);
  return run_instances(
      "bwb-grid", box.size(),
      [&](std::size_t i) {
        const Weight& mu = box[i];
        auto b = bwb_analysis(rs, mu);
        Weight v = mu + rs.rho();
        Int negative = 0;
        bool singular = false;
        for (const auto& pr : rs.positive_roots()) {
          Int p = RootSystem::coroot_pairing(v, pr);
          if (p < 0) ++negative;
          if (p == 0) singular = true;
        }
        std::vector<const WeylElement*> hits;
        for (const auto& w : elements)
          if (RootSystem::is_dominant(dot(rs, w, mu))) hits.push_back(&w);
        bool ok;
        if (singular) {
          ok = b.singular && hits.empty();
        } else {
          ok = !b.singular && b.degree == negative && hits.size() == 1 && *hits.front() == *b.w &&
               dot(rs, *hits.front(), mu) == b.lambda && length(rs, *hits.front()) == b.degree;
        }
        CheckReport r;
        r.record(ok, [&] {
          std::ostringstream s;
          s << g.type << " mu=" << mu << ": degree " << b.degree << " vs " << negative << " negative coroots, "
            << hits.size() << " dominant images";
          return s.str();
        });
        r.stats[singular ? "singular" : "regular"] = 1;
        return r;
      },
      [&](std::size_t i) { return g.type + " mu=" + to_string(box[i]); });
}

/// Freudenthal dimension against the Weyl dimension formula, plus A1 Clebsch-Gordan.
inline CheckReport verify_characters(const CharacterGrid& g) {
  std::vector<std::pair<std::string, Weight>> inst;
  for (const auto& t : g.types) {
    auto rs = RootSystem::of_type(t);
    for (auto& w : detail::dominant_up_to_sum(rs.rank(), g.max_coord_sum)) inst.emplace_back(t, w);
  }
  auto out = run_instances(
      "characters", inst.size(),
      [&](std::size_t i) {
        auto rs = RootSystem::of_type(inst[i].first);
        const Weight& lambda = inst[i].second;
        Int freud = weyl_character(rs, lambda).dimension();
        Int weyl = weyl_dimension(rs, lambda);
        CheckReport r;
        r.record(freud == weyl, [&] {
          return inst[i].first + " lambda=" + to_string(lambda) + ": Freudenthal dimension " +
                 std::to_string(freud) + " vs Weyl " + std::to_string(weyl);
        });
        return r;
      },
      [&](std::size_t i) { return inst[i].first + " lambda=" + to_string(inst[i].second); });
  auto a1 = RootSystem::of_type("A1");
  auto lhs = tensor(weyl_character(a1, Weight({1})), weyl_character(a1, Weight({1})));
  auto rhs = weyl_character(a1, Weight({2})) + weyl_character(a1, Weight({0}));
  out.record(lhs == rhs, [] { return std::string("A1: chi(1) x chi(1) != chi(2) + chi(0)"); });
  return out;
}

/// Verma and Weyl multiplicities agree at the certificate, with frozen N where known.
inline CheckReport verify_stabilization(const StabilizationGrid& g) {
  return run_instances(
      "stabilization", g.cases.size(),
      [&](std::size_t i) {
        const auto& c = g.cases[i];
        auto rs = RootSystem::of_type(c.type);
        auto cert = stabilization_nu(rs, parse_weight(c.mu), parse_weight(c.tau));
        bool ok = cert.verma == cert.weyl && cert.verma == verma_weight_mult(rs, cert.nu, cert.weight) &&
                  cert.weyl == weyl_weight_mult(rs, cert.nu, cert.weight);
        if (c.expected_n) ok = ok && cert.n == *c.expected_n;
        if (c.expected_mult) ok = ok && cert.verma == *c.expected_mult;
        CheckReport r;
        r.record(ok, [&] {
          std::ostringstream s;
          s << c.type << " mu=" << c.mu << " tau=" << c.tau << ": N=" << cert.n << " verma=" << cert.verma
            << " weyl=" << cert.weyl;
          return s.str();
        });
        return r;
      },
      [&](std::size_t i) { return g.cases[i].type + " mu=" + g.cases[i].mu + " tau=" + g.cases[i].tau; });
}

/// To-wall uniqueness, the two out-of-wall weights, the set identity and the
/// triangle Euler check, for every single-wall mu, interior lambda linked to 0
/// and affine element of bounded length.
inline CheckReport verify_triangle(const TriangleGrid& g) {
  struct Setup {
    TypeEll te;
    RootSystem rs;
  };
  std::vector<Setup> setups;
  for (const auto& te : g.instances) setups.push_back({te, RootSystem::of_type(te.type)});
  std::vector<std::unique_ptr<AlcoveGeometry>> geos;
  std::vector<std::vector<std::vector<AffineWeylElement>>> layers;
  struct Inst {
    std::size_t setup;
    Weight lambda, mu;
  };
  std::vector<Inst> inst;
  for (std::size_t s = 0; s < setups.size(); ++s) {
    geos.push_back(std::make_unique<AlcoveGeometry>(setups[s].rs, setups[s].te.ell));
    layers.push_back(elements_by_length(*geos.back(), g.max_length));
    for (const auto& lambda : interior_weights(*geos.back())) {
      if (!in_principal_block(setups[s].rs, setups[s].te.ell, lambda)) continue;
      for (const auto& mu : single_wall_weights(*geos.back())) inst.push_back({s, lambda, mu});
    }
  }
  auto label = [&](std::size_t i) {
    const auto& te = setups[inst[i].setup].te;
    return detail::tag(te.type, te.ell) + " lambda=" + to_string(inst[i].lambda) + " mu=" + to_string(inst[i].mu);
  };
  return run_instances(
      "triangle", inst.size(),
      [&](std::size_t i) {
        const auto& geo = *geos[inst[i].setup];
        WallCrossing wc(geo, inst[i].lambda, inst[i].mu);
        CheckReport r;
        for (const auto& layer : layers[inst[i].setup])
          for (const auto& wa : layer) {
            try {
              auto a = wc.analyze(wa);
              r.record(a.euler.pass, [&] { return label(i) + ": triangle Euler check fails"; });
              ++r.stats[a.crossing == CrossingCase::Up ? "up" : "down"];
            } catch (const PropertyViolation& e) {
              r.fail(e.what());
            }
          }
        return r;
      },
      label);
}

/// Integrality of quantum binomials, the Pascal identity, and [ell] = 0 at a primitive ell-th root of unity.
inline CheckReport verify_quantum(const QuantumGrid& g) {
  std::vector<std::pair<Int, Int>> inst;  // (n, d)
  for (Int d = 1; d <= g.max_d; ++d)
    for (Int n = -g.max_abs_n; n <= g.max_abs_n; ++n) inst.emplace_back(n, d);
  auto out = run_instances(
      "quantum-integrality", inst.size(),
      [&](std::size_t i) {
        auto [n, d] = inst[i];
        CheckReport r;
        for (Int t = 0; t <= g.max_t; ++t) {
          std::string where = "qbinom(" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(d) + ")";
          try {
            auto b = qbinom(n, t, d);
            // symmetric under v -> v^-1, and equal to the ratio of factorials when 0 <= t <= n
            bool ok = b == b.bar();
            if (n >= 0 && t <= n) ok = ok && b * qfact(t, d) * qfact(n - t, d) == qfact(n, d);
            if (n >= 0 && t > n) ok = ok && b.is_zero();
            r.record(ok, [&] { return where + " = " + b.to_string() + " fails symmetry or the factorial identity"; });
          } catch (const std::domain_error& e) {
            r.fail(where + ": not a Laurent polynomial (" + e.what() + ")");
          }
          if (t >= 1 && n >= -g.pascal_max_n && n <= g.pascal_max_n) {
            auto lhs = qbinom(n + 1, t, d);
            auto rhs = LaurentPoly::monomial(-d * t) * qbinom(n, t, d) +
                       LaurentPoly::monomial(d * (n + 1 - t)) * qbinom(n, t - 1, d);
            r.record(lhs == rhs, [&] { return "Pascal identity fails at n=" + std::to_string(n) + " " + where; });
          }
        }
        return r;
      },
      [&](std::size_t i) { return "n=" + std::to_string(inst[i].first) + " d=" + std::to_string(inst[i].second); });
  for (Int ell : g.vanishing_ells) {
    auto z = specialize(qint(ell, 1), ell);
    out.record(z.is_zero(), [&] { return "[" + std::to_string(ell) + "] at ell=" + std::to_string(ell) + " is " + z.to_string(); });
  }
  return out;
}

/// Alcove walls, reduced-word lengths, and prefix monotonicity of translations.
inline CheckReport verify_alcove(const AlcoveGrid& g) {
  std::vector<std::function<CheckReport()>> tasks;
  std::vector<std::string> labels;
  for (const auto& t : g.wall_types)
    for (Int ell : g.wall_ells) {
      labels.push_back("walls " + detail::tag(t, ell));
      tasks.push_back([t, ell] {
        auto rs = RootSystem::of_type(t);
        AlcoveGeometry geo(rs, ell);
        auto bad = hyperplanes_meeting_alcove(geo);
        CheckReport r;
        r.record(bad.empty(), [&] {
          return detail::tag(t, ell) + ": hyperplane H(" + to_string(bad.front().beta) + ", " +
                 std::to_string(bad.front().m) + ") meets the open fundamental alcove";
        });
        return r;
      });
    }
  for (const auto& t : g.length_types) {
    Int ell = g.length_ell, maxlen = g.max_length;
    labels.push_back("lengths " + detail::tag(t, ell));
    tasks.push_back([t, ell, maxlen] {
      auto rs = RootSystem::of_type(t);
      AlcoveGeometry geo(rs, ell);
      auto layers = elements_by_length(geo, maxlen);
      CheckReport r;
      for (std::size_t len = 0; len < layers.size(); ++len)
        for (const auto& wa : layers[len]) {
          auto word = geo.reduced_word(wa);
          bool ok = static_cast<Int>(word.size()) == geo.length(wa) && word.size() == len && geo.element(word) == wa;
          r.record(ok, [&] {
            return detail::tag(t, ell) + ": element at BFS depth " + std::to_string(len) + " has reduced word of length " +
                   std::to_string(word.size()) + " and " + std::to_string(geo.length(wa)) + " separating hyperplanes";
          });
        }
      return r;
    });
  }
  for (const auto& te : g.translation_instances) {
    Int maxh = g.max_height;
    labels.push_back("translations " + detail::tag(te.type, te.ell));
    tasks.push_back([te, maxh] {
      auto rs = RootSystem::of_type(te.type);
      AlcoveGeometry geo(rs, te.ell);
      CheckReport r;
      for (const auto& nu : detail::nonneg_vectors_up_to_height(rs.rank(), maxh)) {
        if (nu.is_zero() || !RootSystem::is_dominant(rs.weight_of(nu))) continue;
        auto tw = translation_reduced_word(geo, nu);
        bool ok = tw.increasing &&
                  static_cast<Int>(tw.word.size()) == geo.length(AffineWeylElement::pure_translation(te.ell * nu));
        r.record(ok, [&] { return detail::tag(te.type, te.ell) + ": prefixes of ell*" + to_string(nu) + " not increasing"; });
      }
      return r;
    });
  }
  return run_instances(
      "alcove-walls", tasks.size(), [&](std::size_t i) { return tasks[i](); }, [&](std::size_t i) { return labels[i]; });
}

struct SuiteReport {
  std::vector<CheckReport> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

inline SuiteReport verify_all(const GridConfig& cfg) {
  SuiteReport s;
  s.checks.push_back(verify_prop_aff(cfg.prop_aff));
  s.checks.push_back(verify_strong_linkage(cfg.strong_linkage));
  s.checks.push_back(verify_bwb(cfg.bwb));
  s.checks.push_back(verify_characters(cfg.characters));
  s.checks.push_back(verify_stabilization(cfg.stabilization));
  for (const auto& [name, grid] : cfg.triangle) {
    s.checks.push_back(verify_triangle(grid));
    s.checks.back().check = "triangle:" + name;
  }
  s.checks.push_back(verify_quantum(cfg.quantum));
  s.checks.push_back(verify_alcove(cfg.alcove));
  return s;
}

}  // namespace linkage_lab
