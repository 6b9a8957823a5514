#include "linkage_lab/root_datum.hpp"

#include <gtest/gtest.h>

using namespace linkage_lab;

namespace {

struct TypeFacts {
  const char* type;
  std::size_t positive_roots;
  Int coxeter;
  Int dual_coxeter;
};

// Bourbaki tables.
const TypeFacts kFacts[] = {
    {"A1", 1, 2, 2},   {"A2", 3, 3, 3},    {"A3", 6, 4, 4},    {"B2", 4, 4, 3},   {"B3", 9, 6, 5},
    {"C3", 9, 6, 4},   {"D4", 12, 6, 6},   {"G2", 6, 6, 4},    {"F4", 24, 12, 9}, {"E6", 36, 12, 12},
    {"E7", 63, 18, 18}, {"E8", 120, 30, 30},
};

}  // namespace

TEST(RootDatum, RootCountsAndCoxeterNumbers) {
  for (const auto& f : kFacts) {
    auto rs = RootSystem::of_type(f.type);
    EXPECT_EQ(rs.positive_roots().size(), f.positive_roots) << f.type;
    EXPECT_EQ(rs.coxeter_number(), f.coxeter) << f.type;
    // <rho, theta_s^vee> = h - 1 and <rho, theta^vee> = h^vee - 1
    EXPECT_EQ(rs.pairing(rs.rho(), rs.highest_short_root().root), f.coxeter - 1) << f.type;
    EXPECT_EQ(rs.pairing(rs.rho(), rs.highest_root().root), f.dual_coxeter - 1) << f.type;
  }
}

TEST(RootDatum, HighestRootsAndSymmetrizers) {
  auto b2 = RootSystem::of_type("B2");
  EXPECT_EQ(b2.symmetrizer(), (std::vector<Int>{2, 1}));
  EXPECT_EQ(b2.highest_root().root, RootVector({1, 2}));
  EXPECT_EQ(b2.highest_short_root().root, RootVector({1, 1}));

  auto c3 = RootSystem::of_type("C3");
  EXPECT_EQ(c3.symmetrizer(), (std::vector<Int>{1, 1, 2}));
  EXPECT_EQ(c3.highest_root().root, RootVector({2, 2, 1}));
  EXPECT_EQ(c3.highest_short_root().root, RootVector({1, 2, 1}));

  auto g2 = RootSystem::of_type("G2");
  EXPECT_EQ(g2.symmetrizer(), (std::vector<Int>{1, 3}));
  EXPECT_EQ(g2.highest_root().root, RootVector({3, 2}));
  EXPECT_EQ(g2.highest_short_root().root, RootVector({2, 1}));
  EXPECT_EQ(g2.highest_root().weight, Weight({0, 1}));

  auto b3 = RootSystem::of_type("B3");
  EXPECT_EQ(b3.highest_root().root, RootVector({1, 2, 2}));
  EXPECT_EQ(b3.highest_short_root().root, RootVector({1, 1, 1}));

  auto f4 = RootSystem::of_type("F4");
  EXPECT_EQ(f4.symmetrizer(), (std::vector<Int>{2, 2, 1, 1}));
  EXPECT_EQ(f4.highest_root().root, RootVector({2, 3, 4, 2}));

  auto e8 = RootSystem::of_type("E8");
  EXPECT_EQ(e8.highest_root().root, RootVector({2, 3, 4, 6, 5, 4, 3, 2}));
}

TEST(RootDatum, FormMatchesSymmetrizer) {
  auto g2 = RootSystem::of_type("G2");
  EXPECT_EQ(g2.form(g2.simple_root(0), g2.simple_root(0)), 2);
  EXPECT_EQ(g2.form(g2.simple_root(1), g2.simple_root(1)), 6);
  EXPECT_EQ(g2.form(g2.simple_root(0), g2.simple_root(1)), -3);
  for (const auto& pr : g2.positive_roots()) EXPECT_EQ(g2.form(pr.root, pr.root), 2 * pr.half_length);
}

TEST(RootDatum, CorootPairingWithRootsIsCartanInteger) {
  for (const char* t : {"B3", "C3", "G2", "F4"}) {
    auto rs = RootSystem::of_type(t);
    for (const auto& a : rs.positive_roots())
      for (const auto& b : rs.positive_roots()) {
        // <a, b^vee> = 2 (a, b) / (b, b)
        Int lhs = rs.pairing(a.weight, b.root);
        Int num = 2 * rs.form(a.root, b.root), den = rs.form(b.root, b.root);
        ASSERT_EQ(num % den, 0);
        EXPECT_EQ(lhs, num / den) << t << " " << a.root << " " << b.root;
      }
  }
}

TEST(RootDatum, RootLatticeAndDominance) {
  auto a1 = RootSystem::of_type("A1");
  EXPECT_TRUE(a1.dominance_leq(Weight({0}), Weight({2})));
  EXPECT_FALSE(a1.dominance_leq(Weight({0}), Weight({1})));
  EXPECT_FALSE(a1.dominance_leq(Weight({2}), Weight({0})));
  auto a2 = RootSystem::of_type("A2");
  EXPECT_EQ(*a2.in_root_lattice(Weight({1, 1})), RootVector({1, 1}));
  EXPECT_FALSE(a2.in_root_lattice(Weight({1, 0})).has_value());
  EXPECT_EQ(a2.height(RootVector({2, 3})), 5);
}

TEST(RootDatum, ValidateEll) {
  auto a2 = RootSystem::of_type("A2");
  EXPECT_TRUE(a2.validate_ell(5).all());
  auto g2 = RootSystem::of_type("G2");
  auto v = g2.validate_ell(9);
  EXPECT_TRUE(v.odd);
  EXPECT_FALSE(v.g2_coprime_to_3);
  EXPECT_TRUE(v.above_coxeter);
  auto b2 = RootSystem::of_type("B2").validate_ell(4);
  EXPECT_FALSE(b2.odd);
  EXPECT_FALSE(b2.above_coxeter);
  EXPECT_THROW(a2.validate_ell(0), InvalidInput);
}

TEST(RootDatum, DecomposableMatrix) {
  Matrix c(2, 2);
  c(0, 0) = 2;
  c(1, 1) = 2;
  auto rs = RootSystem::build(CartanSpec::explicit_matrix(c));
  EXPECT_FALSE(rs.indecomposable());
  EXPECT_EQ(rs.components().size(), 2u);
  EXPECT_EQ(rs.positive_roots().size(), 2u);
  EXPECT_THROW(rs.highest_root(), InvalidInput);
}

TEST(RootDatum, ExplicitMatrixMatchesSeries) {
  Matrix c(2, 2);
  c(0, 0) = 2;
  c(0, 1) = -3;
  c(1, 0) = -1;
  c(1, 1) = 2;
  auto rs = RootSystem::build(CartanSpec::explicit_matrix(c));
  EXPECT_EQ(rs.positive_roots().size(), 6u);
  EXPECT_EQ(rs.symmetrizer(), (std::vector<Int>{1, 3}));
}

TEST(RootDatum, BadMatricesRejected) {
  auto make = [](std::vector<std::vector<Int>> rows) {
    Matrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    return CartanSpec::explicit_matrix(m);
  };
  EXPECT_THROW(RootSystem::build(make({{3, -1}, {-1, 2}})), InvalidInput);
  EXPECT_THROW(RootSystem::build(make({{2, 1}, {1, 2}})), InvalidInput);
  EXPECT_THROW(RootSystem::build(make({{2, -1}, {0, 2}})), InvalidInput);
  EXPECT_THROW(RootSystem::build(make({{2, -2}, {-2, 2}})), InvalidInput);  // affine A1
  EXPECT_THROW(RootSystem::build(make({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}})), InvalidInput);
}

TEST(RootDatum, UnknownTypesRejected) {
  EXPECT_THROW(RootSystem::of_type("G3"), InvalidInput);
  EXPECT_THROW(RootSystem::of_type("E5"), InvalidInput);
  EXPECT_THROW(RootSystem::of_type("X2"), InvalidInput);
  EXPECT_THROW(RootSystem::of_type("A"), InvalidInput);
  EXPECT_THROW(RootSystem::of_type("A2x"), InvalidInput);
}

TEST(RootDatum, RankMismatchRejected) {
  auto a2 = RootSystem::of_type("A2");
  EXPECT_THROW(a2.pairing(Weight({1}), RootVector({1, 0})), InvalidInput);
}
