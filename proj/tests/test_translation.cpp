#include "linkage_lab/translation.hpp"

#include <gtest/gtest.h>

using namespace linkage_lab;

TEST(Translation, WallAndInteriorWeights) {
  auto a1 = RootSystem::of_type("A1");
  AlcoveGeometry geo(a1, 5);
  EXPECT_EQ(single_wall_weights(geo), (std::vector<Weight>{Weight({-1}), Weight({4})}));
  EXPECT_EQ(interior_weights(geo), (std::vector<Weight>{Weight({0}), Weight({1}), Weight({2}), Weight({3})}));

  auto a2 = RootSystem::of_type("A2");
  AlcoveGeometry g2(a2, 5);
  // (ell - 1)(ell - 2)/2 interior points shifted by rho: x, y >= 1, x + y <= 4
  EXPECT_EQ(interior_weights(g2).size(), 6u);
  for (const auto& mu : single_wall_weights(g2))
    EXPECT_EQ(fundamental_alcove_position(a2, 5, mu).walls.size(), 1u);
}

TEST(Translation, A1IdentityCrossing) {
  auto a1 = RootSystem::of_type("A1");
  AlcoveGeometry geo(a1, 5);
  WallCrossing wc(geo, Weight({0}), Weight({-1}));
  EXPECT_EQ(wc.nu1(), Weight({1}));
  EXPECT_EQ(wc.datum().generator, 1);
  auto e = AffineWeylElement::identity(1);
  auto a = wc.analyze(e);
  EXPECT_EQ(a.to_wall, Weight({-1}));
  EXPECT_EQ(a.w_lambda, Weight({0}));
  EXPECT_EQ(a.ws_lambda, Weight({-2}));
  EXPECT_EQ(a.w_mu, Weight({-1}));
  EXPECT_EQ(a.crossing, CrossingCase::Down);
  EXPECT_TRUE(a.euler.pass);
  EXPECT_TRUE(a.euler.lhs.empty());
  std::set<Weight> out{a.out_of_wall.first, a.out_of_wall.second};
  EXPECT_EQ(out, (std::set<Weight>{Weight({1}), Weight({-1})}));

  auto s = geo.generator(1);
  auto b = wc.analyze(s);
  EXPECT_EQ(b.w_lambda, Weight({-2}));
  EXPECT_EQ(b.ws_lambda, Weight({0}));
  EXPECT_EQ(b.crossing, CrossingCase::Up);
}

TEST(Translation, AffineWallCrossing) {
  auto a1 = RootSystem::of_type("A1");
  AlcoveGeometry geo(a1, 5);
  WallCrossing wc(geo, Weight({0}), Weight({4}));
  EXPECT_EQ(wc.datum().generator, 0);
  EXPECT_EQ(wc.nu1(), Weight({4}));
  auto a = wc.analyze(AffineWeylElement::identity(1));
  EXPECT_EQ(a.to_wall, Weight({4}));
  EXPECT_EQ(a.ws_lambda, Weight({8}));
  EXPECT_EQ(a.crossing, CrossingCase::Up);
}

TEST(Translation, ClassificationFlipsUnderRightMultiplication) {
  for (auto [type, ell] : {std::pair{"A1", 7}, std::pair{"A2", 5}}) {
    auto rs = RootSystem::of_type(type);
    AlcoveGeometry geo(rs, ell);
    auto mus = single_wall_weights(geo);
    auto lambdas = interior_weights(geo);
    for (const auto& mu : mus) {
      WallCrossing wc(geo, lambdas.front(), mu);
      auto s = geo.generator(static_cast<std::size_t>(wc.datum().generator));
      for (const auto& layer : elements_by_length(geo, 3))
        for (const auto& w : layer) {
        auto c1 = wc.classify(w), c2 = wc.classify(w * s);
        EXPECT_NE(c1, c2) << type << " " << mu;
        EXPECT_EQ(wc.to_wall_weight(w), dot(rs, w, mu) - dot(rs, w, lambdas.front()));
        EXPECT_TRUE(wc.triangle_euler_check(w).pass);
        }
    }
  }
}

TEST(Translation, BadDataRejected) {
  auto a2 = RootSystem::of_type("A2");
  AlcoveGeometry geo(a2, 5);
  // corner of two walls
  EXPECT_THROW(WallCrossing(geo, Weight({0, 0}), Weight({-1, -1})), InvalidInput);
  // lambda on a wall
  EXPECT_THROW(WallCrossing(geo, Weight({-1, 0}), Weight({-1, 1})), InvalidInput);
  // mu in the interior
  EXPECT_THROW(WallCrossing(geo, Weight({0, 0}), Weight({1, 0})), InvalidInput);
}

TEST(Translation, ReducedWordsForTranslations) {
  auto a1 = RootSystem::of_type("A1");
  AlcoveGeometry geo(a1, 5);
  auto t = translation_reduced_word(geo, RootVector({1}));
  EXPECT_EQ(t.word, (std::vector<int>{0, 1}));
  EXPECT_EQ(t.images, (std::vector<Weight>{Weight({0}), Weight({8}), Weight({10})}));
  EXPECT_TRUE(t.increasing);
  auto t2 = translation_reduced_word(geo, RootVector({2}));
  EXPECT_EQ(t2.word.size(), 4u);
  EXPECT_TRUE(t2.increasing);

  auto a2 = RootSystem::of_type("A2");
  AlcoveGeometry g(a2, 5);
  auto th = translation_reduced_word(g, RootVector({1, 1}));
  // sum of <nu, beta^vee> over positive beta
  EXPECT_EQ(th.word.size(), 4u);
  EXPECT_TRUE(th.increasing);
  EXPECT_THROW(translation_reduced_word(g, RootVector({1, 0})), InvalidInput);
}
