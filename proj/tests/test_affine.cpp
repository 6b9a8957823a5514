#include "linkage_lab/affine.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace linkage_lab;

TEST(Affine, EllBeta) {
  auto g2 = RootSystem::of_type("G2");
  const RootVector long_root({0, 1}), short_root({1, 0});
  EXPECT_EQ(ell_beta(g2, short_root, 9), 9);
  EXPECT_EQ(ell_beta(g2, long_root, 7), 7);
  EXPECT_EQ(ell_beta(g2, long_root, 9), 3);
  // constant on W-orbits
  for (const auto& pr : g2.positive_roots()) EXPECT_EQ(ell_beta(pr, 9), pr.half_length == 3 ? 3 : 9);
}

TEST(Affine, TranslationLatticesSimplyLaced) {
  auto a1 = RootSystem::of_type("A1");
  auto l = translation_lattice(a1, 5, AffineVariant::Wl);
  EXPECT_EQ(l, translation_lattice(a1, 5, AffineVariant::WDl));
  EXPECT_EQ(l, translation_lattice(a1, 5, AffineVariant::WlVee));
  EXPECT_TRUE(l.contains(std::vector<Int>{5}));
  EXPECT_FALSE(l.contains(std::vector<Int>{1}));
}

TEST(Affine, TranslationLatticesG2) {
  auto g2 = RootSystem::of_type("G2");
  EXPECT_EQ(translation_lattice(g2, 7, AffineVariant::WDl), translation_lattice(g2, 7, AffineVariant::Wl));
  EXPECT_EQ(translation_lattice(g2, 9, AffineVariant::WDl), translation_lattice(g2, 9, AffineVariant::WlVee));
  EXPECT_NE(translation_lattice(g2, 9, AffineVariant::WDl), translation_lattice(g2, 9, AffineVariant::Wl));
}

TEST(Affine, TranslationLatticeRejectsDecomposable) {
  Matrix c(2, 2);
  c(0, 0) = 2;
  c(1, 1) = 2;
  auto rs = RootSystem::build(CartanSpec::explicit_matrix(c));
  EXPECT_THROW(translation_lattice(rs, 5, AffineVariant::WDl), InvalidInput);
}

TEST(Affine, LinkageExamples) {
  auto a1 = RootSystem::of_type("A1");
  EXPECT_TRUE(linked(a1, 5, Weight({0}), Weight({0})));
  EXPECT_TRUE(linked(a1, 5, Weight({0}), Weight({8})));
  EXPECT_FALSE(linked(a1, 5, Weight({0}), Weight({1})));
  EXPECT_TRUE(in_principal_block(a1, 5, Weight({0})));
  EXPECT_FALSE(in_principal_block(a1, 5, Weight({1})));
  auto block = enumerate_block(a1, 5, Weight({0}), 12);
  EXPECT_EQ(block, (std::set<Weight>{Weight({-12}), Weight({-10}), Weight({-2}), Weight({0}), Weight({8}),
                                     Weight({10})}));
}

TEST(Affine, LinkageIsAnEquivalenceOnABox) {
  // Partition the box by closing under single affine reflections; classes
  // must agree with the lattice test.
  for (const char* t : {"A2", "B2"}) {
    auto rs = RootSystem::of_type(t);
    const Int ell = 5, b = 6;
    LinkageContext ctx(rs, ell);
    std::vector<Weight> box;
    for (Int x = -b; x <= b; ++x)
      for (Int y = -b; y <= b; ++y) box.push_back(Weight({x, y}));
    for (std::size_t i = 0; i < box.size(); i += 7)
      for (std::size_t j = 0; j < box.size(); j += 5) {
        bool ij = ctx.linked(box[i], box[j]);
        EXPECT_EQ(ij, ctx.linked(box[j], box[i]));
        if (!ij) continue;
        for (std::size_t k = 0; k < box.size(); k += 11)
          if (ctx.linked(box[j], box[k])) EXPECT_TRUE(ctx.linked(box[i], box[k]));
      }
    // single reflections stay in the class
    for (std::size_t i = 0; i < box.size(); i += 3)
      for (const auto& pr : rs.positive_roots())
        for (Int m = -2; m <= 2; ++m)
          EXPECT_TRUE(ctx.linked(box[i], affine_reflect(rs, pr, m * ell_beta(pr, ell), box[i])));
  }
}

TEST(Affine, StrongLinkageExamples) {
  auto a1 = RootSystem::of_type("A1");
  auto self = strongly_linked(a1, 5, Weight({3}), Weight({3}));
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->weights.size(), 1u);

  auto c = strongly_linked(a1, 5, Weight({0}), Weight({8}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->weights, (std::vector<Weight>{Weight({8}), Weight({0})}));
  EXPECT_TRUE(verify_chain(a1, 5, *c, Weight({0}), Weight({8})));

  EXPECT_FALSE(strongly_linked(a1, 5, Weight({2}), Weight({8})).has_value());
  EXPECT_FALSE(strongly_linked(a1, 5, Weight({8}), Weight({0})).has_value());
}

TEST(Affine, StrongLinkageRank2) {
  auto a2 = RootSystem::of_type("A2");
  // s_{theta,5} . 0 = 0 + 3 theta and the chain back down
  Weight top = affine_reflect(a2, a2.highest_root(), 5, Weight({0, 0}));
  EXPECT_EQ(top, Weight({3, 3}));
  auto c = strongly_linked(a2, 5, Weight({0, 0}), top);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(verify_chain(a2, 5, *c, Weight({0, 0}), top));
  // a tampered chain fails re-verification
  auto bad = *c;
  bad.weights.back() = Weight({1, 1});
  EXPECT_FALSE(verify_chain(a2, 5, bad, Weight({1, 1}), top));
}

TEST(Affine, AlcovePositionExamples) {
  auto a1 = RootSystem::of_type("A1");
  EXPECT_EQ(fundamental_alcove_position(a1, 5, Weight({0})).kind, AlcoveKind::Interior);
  auto wall = fundamental_alcove_position(a1, 5, Weight({4}));
  ASSERT_EQ(wall.kind, AlcoveKind::Wall);
  ASSERT_EQ(wall.walls.size(), 1u);
  EXPECT_EQ(wall.walls[0].beta, RootVector({1}));
  EXPECT_EQ(wall.walls[0].m, 1);
  EXPECT_EQ(fundamental_alcove_position(a1, 5, Weight({8})).kind, AlcoveKind::Outside);
  EXPECT_EQ(fundamental_alcove_position(a1, 5, Weight({-1})).kind, AlcoveKind::Wall);
}

TEST(Affine, LocateExamples) {
  auto a1 = RootSystem::of_type("A1");
  AlcoveGeometry geo(a1, 5);
  auto id = geo.locate(Weight({2}));
  EXPECT_TRUE(id.word.empty());
  EXPECT_EQ(id.base, Weight({2}));

  auto up = geo.locate(Weight({8}));
  EXPECT_EQ(up.word, (std::vector<int>{0}));
  EXPECT_EQ(up.base, Weight({0}));

  auto down = geo.locate(Weight({-2}));
  EXPECT_EQ(down.word, (std::vector<int>{1}));
  EXPECT_EQ(down.base, Weight({0}));

  EXPECT_THROW(geo.locate(Weight({4})), InvalidInput);
}

TEST(Affine, LocateRoundTrip) {
  for (const char* t : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::of_type(t);
    AlcoveGeometry geo(rs, 7);
    for (Int x = -15; x <= 15; ++x)
      for (Int y = -15; y <= 15; ++y) {
        Weight lambda({x, y});
        if (!is_regular(rs, 7, lambda)) continue;
        auto loc = geo.locate(lambda);
        EXPECT_EQ(dot(rs, loc.element, loc.base), lambda);
        EXPECT_EQ(fundamental_alcove_position(rs, 7, loc.base).kind, AlcoveKind::Interior);
        EXPECT_EQ(geo.length(loc.element), static_cast<Int>(loc.word.size())) << t << " " << lambda;
      }
  }
}

TEST(Affine, WeightUpExamples) {
  auto a1 = RootSystem::of_type("A1");
  AlcoveGeometry geo(a1, 5);
  auto a = geo.weight_up(Weight({0}), 0);
  EXPECT_EQ(a.weight, Weight({8}));
  EXPECT_TRUE(a.up);
  auto b = geo.weight_up(Weight({8}), 0);
  EXPECT_EQ(b.weight, Weight({0}));
  EXPECT_FALSE(b.up);
  auto c = geo.weight_up(Weight({0}), 1);
  EXPECT_EQ(c.weight, Weight({-2}));
  EXPECT_FALSE(c.up);
}

TEST(Affine, WeightUpIsAnInvolutionWithOneUp) {
  auto a2 = RootSystem::of_type("A2");
  AlcoveGeometry geo(a2, 5);
  for (const auto& layer : elements_by_length(geo, 4))
    for (const auto& wa : layer) {
      Weight lambda = dot(a2, wa, Weight({0, 0}));
      for (int s = 0; s < 3; ++s) {
        auto x = geo.weight_up(lambda, s);
        auto y = geo.weight_up(x.weight, s);
        EXPECT_EQ(y.weight, lambda);
        EXPECT_NE(x.up, y.up);
      }
    }
}

TEST(Affine, LengthExamples) {
  auto a1 = RootSystem::of_type("A1");
  AlcoveGeometry geo(a1, 5);
  EXPECT_EQ(geo.length(AffineWeylElement::identity(1)), 0);
  auto t = AffineWeylElement::pure_translation(RootVector({5}));
  EXPECT_EQ(geo.length(t), 2);
  EXPECT_EQ(geo.reduced_word(t), (std::vector<int>{0, 1}));
  EXPECT_EQ(dot(a1, t, Weight({0})), Weight({10}));
  EXPECT_EQ(geo.length(AffineWeylElement::pure_translation(RootVector({10}))), 4);
}

TEST(Affine, LengthCountsSeparatingHyperplanes) {
  // Oracle: count hyperplanes <x, beta^vee> = m ell strictly between a generic
  // point of the fundamental alcove and its image, by direct enumeration.
  for (const char* t : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::of_type(t);
    const Int ell = 7;
    AlcoveGeometry geo(rs, ell);
    Int K = 0;
    for (const auto& pr : rs.positive_roots()) K = std::max(K, RootSystem::coroot_pairing(rs.rho(), pr));
    ++K;
    for (const auto& layer : elements_by_length(geo, 5))
      for (const auto& wa : layer) {
        Weight y0 = rs.rho();  // K * (generic point + rho) with generic point rho / K - rho
        Weight y1 = wa.w.act(rs.rho()) + K * rs.weight_of(wa.translation);
        Int count = 0;
        for (const auto& pr : rs.positive_roots()) {
          Int a = RootSystem::coroot_pairing(y0, pr), b = RootSystem::coroot_pairing(y1, pr);
          Int lo = std::min(a, b), hi = std::max(a, b);
          for (Int m = -20; m <= 20; ++m) count += lo < m * ell * K && m * ell * K < hi;
        }
        EXPECT_EQ(geo.length(wa), count) << t;
      }
  }
}

TEST(Affine, ElementsByLengthCounts) {
  // Poincare series of the affine Weyl group of type A2: 1, 3, 6, 9, 12, ...
  auto a2 = RootSystem::of_type("A2");
  AlcoveGeometry geo(a2, 5);
  auto layers = elements_by_length(geo, 5);
  std::vector<std::size_t> sizes;
  for (const auto& l : layers) sizes.push_back(l.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 6, 9, 12, 15}));
}

TEST(Affine, NoHyperplaneMeetsTheAlcove) {
  for (const char* t : {"A1", "A2", "B2", "G2", "C3"})
    for (Int ell : {5, 7}) {
      auto rs = RootSystem::of_type(t);
      AlcoveGeometry geo(rs, ell);
      EXPECT_TRUE(hyperplanes_meeting_alcove(geo).empty()) << t << " " << ell;
    }
}

TEST(Affine, AlcoveGeometryNeedsCoprimeEll) {
  auto g2 = RootSystem::of_type("G2");
  EXPECT_THROW(AlcoveGeometry(g2, 9), InvalidInput);
}

TEST(Affine, AffineElementGroupLaws) {
  auto b2 = RootSystem::of_type("B2");
  AlcoveGeometry geo(b2, 5);
  auto layers = elements_by_length(geo, 3);
  for (const auto& x : layers[2])
    for (const auto& y : layers[3]) {
      EXPECT_EQ((x * y).inverse(), y.inverse() * x.inverse());
      EXPECT_EQ(dot(b2, x * y, Weight({1, -2})), dot(b2, x, dot(b2, y, Weight({1, -2}))));
    }
  for (std::size_t g = 0; g < geo.num_generators(); ++g)
    EXPECT_EQ(geo.generator(g) * geo.generator(g), AffineWeylElement::identity(2));
}
