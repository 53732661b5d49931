#include "grcodes/error.hpp"
#include "grcodes/field.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace grcodes;

TEST(Field, PrimeFieldBasics) {
  auto f2 = Field::make(2, 1);
  EXPECT_EQ(f2->order(), 2u);
  EXPECT_EQ(f2->add(f2->one(), f2->one()), f2->zero());

  auto f3 = Field::make(3, 1);
  EXPECT_EQ(f3->mul(f3->from_int(2), f3->from_int(2)), f3->one());
  EXPECT_EQ(f3->frobenius(f3->from_int(2)), f3->from_int(2));
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(Field::make(4, 1), Error);
  EXPECT_THROW(Field::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), Error); // X^2 + 1 = (X + 1)^2
  EXPECT_THROW(Field::make(2, 2, std::vector<std::uint32_t>{1, 1, 0}), Error); // not monic of degree 2
  EXPECT_THROW(Field::make(2, 17), Error);                                     // above 2^16
  auto f3 = Field::make(3, 1);
  EXPECT_THROW(f3->inv(f3->zero()), Error);
}

TEST(Field, Gf9DefaultModulus) {
  auto f9 = Field::make(3, 2);
  EXPECT_EQ(f9->modulus(), (std::vector<std::uint32_t>{2, 2, 1}));
  const Element w = f9->primitive();
  EXPECT_EQ(f9->coords(w), (std::vector<std::uint32_t>{0, 1}));
  // The modulus has no root in F_3.
  for (std::uint32_t v = 0; v < 3; ++v)
    EXPECT_NE((v * v + 2 * v + 2) % 3, 0u);
  EXPECT_EQ(f9->multiplicative_order(w), 8u);
  EXPECT_EQ(f9->mul(w, f9->primitive_power(7)), f9->one());
  EXPECT_EQ(f9->frobenius(w), f9->primitive_power(3));
  for (std::uint32_t i = 0; i < 9; ++i)
    EXPECT_EQ(f9->frobenius(f9->frobenius(f9->element(i))), f9->element(i));
}

TEST(Field, Literals) {
  auto f9 = parse_field("GF(9)");
  EXPECT_EQ(f9->to_literal(f9->zero()), "0");
  EXPECT_EQ(f9->to_literal(f9->one()), "1");
  EXPECT_EQ(f9->to_literal(f9->primitive_power(5)), "w5");
  EXPECT_EQ(f9->parse_literal("w0"), f9->one());
  EXPECT_EQ(f9->parse_literal("w"), f9->primitive());
  EXPECT_EQ(f9->parse_literal("2"), f9->from_int(2));
  EXPECT_EQ(f9->to_literal(f9->from_int(2)), "w4");
  for (std::uint32_t i = 0; i < 9; ++i)
    EXPECT_EQ(f9->parse_literal(f9->to_literal(f9->element(i))), f9->element(i));
  EXPECT_THROW(f9->parse_literal("w9x"), ParseError);
  auto f5 = parse_field("GF(5)");
  EXPECT_EQ(f5->to_literal(f5->from_int(4)), "4");
  EXPECT_THROW(f5->parse_literal("5"), ParseError);
}

TEST(Field, SpecStrings) {
  EXPECT_EQ(parse_field("GF(2)")->spec_string(), "GF(2)");
  EXPECT_EQ(parse_field("GF(3^2)")->spec_string(), "GF(9)");
  auto f = parse_field("GF(3^2;modulus=2,1,1)");
  EXPECT_EQ(f->spec_string(), "GF(3^2;modulus=2,1,1)");
  EXPECT_EQ(parse_field(f->spec_string())->modulus(), f->modulus());
  EXPECT_THROW(parse_field("GF(6)"), Error);
  EXPECT_THROW(parse_field("GF(3^2;modulus=2,0,1)"), Error);
  EXPECT_THROW(parse_field("GF(9"), ParseError);
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<int, int>> {};

// Exhaustive checks against schoolbook polynomial arithmetic.
TEST_P(FieldAxioms, MatchesPolynomialOracle) {
  const auto [p, k] = GetParam();
  auto f = Field::make(p, k);
  const auto ref = oracle::poly_field(*f);
  const std::uint32_t q = f->order();
  std::set<std::uint32_t> powers;
  for (std::uint32_t e = 0; e + 1 < q; ++e)
    powers.insert(f->primitive_power(e).rep);
  EXPECT_EQ(powers.size(), q - 1);
  EXPECT_EQ(powers.count(0), 0u);

  for (std::uint32_t i = 0; i < q; ++i) {
    const Element a = f->element(i);
    const auto ca = f->coords(a);
    EXPECT_EQ(f->frobenius(a), f->from_coords(ref.pow(ca, p)));
    Element fk = a;
    for (int t = 0; t < k; ++t)
      fk = f->frobenius(fk);
    EXPECT_EQ(fk, a);
    if (!a.is_zero()) {
      EXPECT_EQ(f->mul(a, f->inv(a)), f->one());
    }
    EXPECT_EQ(f->add(a, f->neg(a)), f->zero());
    for (std::uint32_t j = 0; j < q; ++j) {
      const Element b = f->element(j);
      const auto cb = f->coords(b);
      ASSERT_EQ(f->add(a, b), f->from_coords(ref.add(ca, cb)));
      ASSERT_EQ(f->mul(a, b), f->from_coords(ref.mul(ca, cb)));
      ASSERT_EQ(f->mul(a, b), f->mul(b, a));
      ASSERT_EQ(f->frobenius(f->mul(a, b)), f->mul(f->frobenius(a), f->frobenius(b)));
      ASSERT_EQ(f->frobenius(f->add(a, b)), f->add(f->frobenius(a), f->frobenius(b)));
      if (q <= 27) {
        for (std::uint32_t l = 0; l < q; ++l) {
          const Element c = f->element(l);
          ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
          ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
          ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2, 1}, std::pair{3, 1}, std::pair{7, 1},
                                           std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2},
                                           std::pair{2, 4}, std::pair{5, 2}, std::pair{3, 3},
                                           std::pair{7, 2}, std::pair{3, 4}));

TEST(Field, LargerFieldSpotChecks) {
  auto f = Field::make(2, 16);
  const auto ref = oracle::poly_field(*f);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    const Element a = f->element(rng() % f->order()), b = f->element(rng() % f->order());
    ASSERT_EQ(f->mul(a, b), f->from_coords(ref.mul(f->coords(a), f->coords(b))));
  }
  EXPECT_EQ(f->multiplicative_order(f->primitive()), 65535u);
}
