#include "linkage_lab/quantum.hpp"

#include <gtest/gtest.h>

using namespace linkage_lab;

TEST(Quantum, QuantumIntegers) {
  EXPECT_EQ(qint(0, 1), LaurentPoly(0));
  EXPECT_EQ(qint(1, 1), LaurentPoly(1));
  EXPECT_EQ(qint(3, 1).to_string(), "v^2 + 1 + v^-2");
  EXPECT_EQ(qint(2, 3).to_string(), "v^3 + v^-3");
  EXPECT_EQ(qint(-2, 1).to_string(), "-v - v^-1");
  EXPECT_EQ(qfact(3, 1).to_string(), "v^3 + 2v + 2v^-1 + v^-3");
  EXPECT_EQ(qfact(0, 2), LaurentPoly(1));
}

TEST(Quantum, Binomials) {
  EXPECT_EQ(qbinom(4, 2, 1).to_string(), "v^4 + v^2 + 2 + v^-2 + v^-4");
  EXPECT_EQ(qbinom(5, 0, 1), LaurentPoly(1));
  EXPECT_EQ(qbinom(3, 5, 1), LaurentPoly(0));
  EXPECT_EQ(qbinom(-1, 1, 1), LaurentPoly(-1));
  EXPECT_EQ(qbinom(-2, 2, 1).to_string(), "v^2 + 1 + v^-2");
  EXPECT_EQ(qbinom(2, 1, 2), qint(2, 2));
  // value at v = 1 is the ordinary binomial coefficient
  auto at_one = [](const LaurentPoly& p) {
    Int s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
  };
  EXPECT_EQ(at_one(qbinom(10, 4, 1)), 210);
  EXPECT_EQ(at_one(qbinom(12, 6, 3)), 924);
  EXPECT_THROW(qbinom(3, -1, 1), InvalidInput);
  EXPECT_THROW(qint(3, 0), InvalidInput);
}

TEST(Quantum, NonExactDivisionThrows) {
  EXPECT_THROW(exact_divide(LaurentPoly::monomial(2) + LaurentPoly(1), LaurentPoly::monomial(1) + LaurentPoly(1)),
               std::domain_error);
  EXPECT_EQ(exact_divide(qfact(4, 1), qfact(2, 1) * qfact(2, 1)), qbinom(4, 2, 1));
}

TEST(Quantum, CyclotomicPolynomials) {
  const std::vector<std::vector<Int>> expected = {
      {-1, 1},
      {1, 1},
      {1, 1, 1},
      {1, 0, 1},
      {1, 1, 1, 1, 1},
      {1, -1, 1},
      {1, 1, 1, 1, 1, 1, 1},
      {1, 0, 0, 0, 1},
      {1, 0, 0, 1, 0, 0, 1},
      {1, -1, 1, -1, 1},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, 0, -1, 0, 1},
  };
  for (Int n = 1; n <= 12; ++n) EXPECT_EQ(cyclotomic_polynomial(n), expected[n - 1]) << n;
  EXPECT_EQ(cyclotomic_polynomial(30), (std::vector<Int>{1, 1, 0, -1, -1, -1, 0, 1, 1}));
  EXPECT_THROW(cyclotomic_polynomial(0), InvalidInput);
}

TEST(Quantum, Specialization) {
  auto two = specialize(qint(2, 1), 5);
  EXPECT_EQ(two.to_string(), "-v^3 - v^2 - 1");
  EXPECT_EQ(two.coeffs().size(), 4u);
  for (Int ell : {3, 5, 7, 9, 11}) EXPECT_TRUE(specialize(qint(ell, 1), ell).is_zero()) << ell;
  EXPECT_FALSE(specialize(qint(4, 1), 5).is_zero());
  // q^ell = 1 and 1 + q + ... + q^{ell-1} = 0
  EXPECT_EQ(specialize(LaurentPoly::monomial(7), 7), CycNumber::one(7));
  EXPECT_EQ(specialize(LaurentPoly::monomial(-1), 5), CycNumber(5, {-1, -1, -1, -1}));
  EXPECT_THROW(specialize(LaurentPoly(1), 1), InvalidInput);
}

TEST(Quantum, CycNumberArithmetic) {
  CycNumber q(5, {0, 1});
  CycNumber p = CycNumber::one(5);
  for (int k = 0; k < 5; ++k) p = p * q;
  EXPECT_EQ(p, CycNumber::one(5));
  auto sum = CycNumber::zero(5);
  auto pw = CycNumber::one(5);
  for (int k = 0; k < 5; ++k) {
    sum = sum + pw;
    pw = pw * q;
  }
  EXPECT_TRUE(sum.is_zero());
  EXPECT_THROW(CycNumber::one(5) + CycNumber::one(7), InvalidInput);
  // specialization is a ring map
  auto a = qint(3, 1), b = qbinom(5, 2, 1);
  EXPECT_EQ(specialize(a * b, 7), specialize(a, 7) * specialize(b, 7));
  EXPECT_EQ(specialize(a + b, 7), specialize(a, 7) + specialize(b, 7));
}

TEST(Quantum, ChiLambda) {
  auto b2 = RootSystem::of_type("B2");
  auto [k, br] = chi_lambda(b2, 5, Weight({1, 3}), 1, 0, 1);
  EXPECT_EQ(k, specialize(LaurentPoly::monomial(2), 5));
  EXPECT_EQ(br, specialize(qint(1, 2), 5));
  auto [k2, br2] = chi_lambda(b2, 5, Weight({1, 3}), 2, 2, 5);
  EXPECT_EQ(k2, specialize(LaurentPoly::monomial(3), 5));
  EXPECT_EQ(br2, CycNumber::one(5));
  EXPECT_THROW(chi_lambda(b2, 5, Weight({1, 3}), 0, 0, 1), InvalidInput);
  EXPECT_THROW(chi_lambda(b2, 5, Weight({1, 3}), 3, 0, 1), InvalidInput);
}
