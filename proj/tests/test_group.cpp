#include "grcodes/error.hpp"
#include "grcodes/group.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cctype>
#include <map>
#include <set>
#include <tuple>

using namespace grcodes;

namespace {

// 1-based listing index of a word, as printed in tables.
std::size_t pos(const GroupTable &g, std::string_view word) { return g.index_of(word) + 1; }

std::size_t power(const GroupTable &g, std::size_t x, std::uint32_t e) {
  std::size_t r = g.identity();
  for (std::uint32_t i = 0; i < e; ++i)
    r = g.mul(r, x);
  return r;
}

void expect_group_axioms(const GroupTable &g) {
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i) {
    ASSERT_EQ(g.mul(g.identity(), i), i);
    ASSERT_EQ(g.mul(i, g.identity()), i);
    ASSERT_EQ(g.mul(i, g.inverse(i)), g.identity());
    ASSERT_EQ(g.mul(g.inverse(i), i), g.identity());
    std::set<std::size_t> row, col;
    for (std::size_t j = 0; j < n; ++j) {
      row.insert(g.mul(i, j));
      col.insert(g.mul(j, i));
    }
    ASSERT_EQ(row.size(), n);
    ASSERT_EQ(col.size(), n);
  }
  const std::size_t step = n <= 64 ? 1 : n / 17 + 1;
  for (std::size_t i = 0; i < n; i += step)
    for (std::size_t j = 0; j < n; j += step)
      for (std::size_t k = 0; k < n; k += step)
        ASSERT_EQ(g.mul(g.mul(i, j), k), g.mul(i, g.mul(j, k)));
  std::set<std::string> words;
  for (std::size_t i = 0; i < n; ++i) {
    words.insert(g.word(i));
    ASSERT_EQ(g.index_of(g.word(i)), i) << g.word(i);
  }
  EXPECT_EQ(words.size(), n);
}

} // namespace

TEST(Group, CyclicTable) {
  auto c3 = build_group("C3");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(c3->mul(i, j), (i + j) % 3);
  EXPECT_EQ(pos(*c3, "x2"), 3u);
  EXPECT_EQ(c3->word(c3->inverse(c3->index_of("x"))), "x2");
}

TEST(Group, DihedralExamples) {
  auto d3 = build_group("D3:form=f1");
  const std::vector<std::string> listing{"e", "a", "a2", "b", "ba", "ba2"};
  for (std::size_t i = 0; i < 6; ++i)
    EXPECT_EQ(d3->word(i), listing[i]);
  EXPECT_EQ(d3->mul(d3->index_of("a"), d3->index_of("b")) + 1, 6u);
  EXPECT_EQ(pos(*d3, "ab"), 6u);

  auto d5 = build_group("D5:form=f2");
  EXPECT_EQ(d5->word(5), "b");
  EXPECT_EQ(d5->word(6), "ab");
  EXPECT_EQ(pos(*d5, "b"), 6u);
  EXPECT_EQ(d5->inverse(d5->index_of("b")), d5->index_of("b"));

  auto named = build_group("D5:gens=b,a");
  EXPECT_EQ(named->word(1), "b");
  EXPECT_EQ(named->word(5), "a");
  EXPECT_EQ(named->word(6), "ab");
}

TEST(Group, ProductListings) {
  auto g = build_group("C5xC3:inner=2");
  const std::vector<std::string> head{"e", "y", "y2", "x", "xy", "xy2"};
  for (std::size_t i = 0; i < head.size(); ++i)
    EXPECT_EQ(g->word(i), head[i]);
  EXPECT_EQ(g->mul(g->index_of("x"), g->index_of("xy2")) + 1, 9u);
  EXPECT_EQ(g->word(8), "x2y2");

  auto f1 = build_group("C3xC5:form=f1");
  EXPECT_EQ(f1->word(1), "x");
  EXPECT_EQ(f1->word(3), "y");
  auto f2 = build_group("C3xC5:form=f2");
  EXPECT_EQ(f2->word(1), "y");
  EXPECT_EQ(f2->word(5), "x");
}

TEST(Group, QuaternionInverse) {
  auto q8 = build_group("Q8");
  EXPECT_EQ(q8->order(), 8u);
  EXPECT_EQ(q8->word(q8->inverse(q8->index_of("b"))), "a2b");
  expect_group_axioms(*q8);
}

TEST(Group, InvalidSpecs) {
  EXPECT_THROW(build_group("C5sd2C3"), Error); // 2^3 = 8 != 1 mod 5
  EXPECT_THROW(build_group("C6sd2C2"), Error); // gcd(2, 6) != 1
  EXPECT_THROW(build_group("Q6"), Error);
  EXPECT_THROW(build_group("C0"), Error);
  EXPECT_THROW(build_group("C5000"), Error);
  EXPECT_THROW(build_group("D5:gens=e,a"), Error);
  EXPECT_THROW(build_group("D3:form=f9"), Error);
  EXPECT_THROW(build_group("K4"), ParseError);
  auto d3 = build_group("D3");
  EXPECT_THROW(d3->index_of("ax"), ParseError);
}

TEST(Group, SpecRoundTrip) {
  for (const char *text : {"C7", "D5:form=f2", "Q12:form=f2", "C5sd2C4", "C5xC3:inner=2",
                           "C3xD3:form=f2", "C2xC2xC3:order=3,1,2", "D5:gens=b,a"}) {
    const GroupSpec s = parse_group_spec(text);
    EXPECT_TRUE(*build_group(parse_group_spec(to_string(s))) == *build_group(s)) << text;
  }
}

class GroupGrid : public ::testing::TestWithParam<const char *> {};

TEST_P(GroupGrid, Axioms) { expect_group_axioms(*build_group(GetParam())); }

INSTANTIATE_TEST_SUITE_P(
    Specs, GroupGrid,
    ::testing::Values("C1", "C2", "C7", "C12", "D1", "D2", "D3", "D4:form=f2", "D5:form=f3",
                      "D6:form=f4", "D11", "Q8", "Q12", "Q16:form=f2", "C5sd2C4", "C7sd2C3",
                      "C7sd2C3:form=f2", "C5xC3", "C3xC5:form=f2", "C3xD3", "C2xD5:form=f4",
                      "C5xD3:form=f3", "C2xC2xC2", "C3xC2xC4:order=3,2,1", "C20xC21"));

// Dihedral tables against composition of n-gon permutations, for every form.
TEST(Group, DihedralMatchesPermutations) {
  for (std::uint32_t n : {3u, 4u, 5u, 8u}) {
    for (const char *form : {"f1", "f2", "f3", "f4"}) {
      auto g = build_group("D" + std::to_string(n) + ":form=" + form);
      oracle::DihedralPerm d{n};
      // Map each listing word to a permutation through its generator letters.
      std::map<std::string, oracle::DihedralPerm::Perm> perm;
      for (std::size_t i = 0; i < g->order(); ++i) {
        const std::string &w = g->word(i);
        oracle::DihedralPerm::Perm p = d.rotation(0);
        for (std::size_t c = 0; c < w.size();) {
          if (w[c] == 'e') {
            ++c;
            continue;
          }
          const char letter = w[c++];
          std::uint32_t e = 0;
          while (c < w.size() && std::isdigit(static_cast<unsigned char>(w[c])))
            e = e * 10 + (w[c++] - '0');
          if (e == 0)
            e = 1;
          const auto gen = letter == 'a' ? d.rotation(1) : d.reflection();
          for (std::uint32_t t = 0; t < e; ++t)
            p = oracle::DihedralPerm::compose(p, gen);
        }
        perm[w] = p;
      }
      std::set<oracle::DihedralPerm::Perm> distinct;
      for (auto &[w, p] : perm)
        distinct.insert(p);
      ASSERT_EQ(distinct.size(), 2 * n);
      for (std::size_t i = 0; i < g->order(); ++i)
        for (std::size_t j = 0; j < g->order(); ++j)
          ASSERT_EQ(perm[g->word(g->mul(i, j))],
                    oracle::DihedralPerm::compose(perm[g->word(i)], perm[g->word(j)]))
              << "D" << n << " " << form;
    }
  }
}

// The defining relations hold and the generators have the stated orders.
TEST(Group, PresentationRelations) {
  for (std::uint32_t n : {2u, 3u, 5u}) {
    auto q = build_group("Q" + std::to_string(4 * n));
    const std::size_t a = q->index_of("a"), b = q->index_of("b");
    EXPECT_EQ(power(*q, a, 2 * n), q->identity());
    EXPECT_EQ(power(*q, b, 2), power(*q, a, n));
    EXPECT_EQ(q->mul(b, a), q->mul(q->inverse(a), b));
    for (std::uint32_t e = 1; e < 2 * n; ++e)
      EXPECT_NE(power(*q, a, e), q->identity());
  }
  for (auto [l, k, m] : {std::tuple{5u, 2u, 4u}, std::tuple{7u, 2u, 3u}, std::tuple{9u, 4u, 3u}}) {
    auto s = build_group("C" + std::to_string(l) + "sd" + std::to_string(k) + "C" + std::to_string(m));
    const std::size_t x = s->index_of("x"), y = s->index_of("y");
    EXPECT_EQ(s->order(), l * m);
    EXPECT_EQ(power(*s, x, l), s->identity());
    EXPECT_EQ(power(*s, y, m), s->identity());
    EXPECT_EQ(s->mul(s->mul(y, x), s->inverse(y)), power(*s, x, k));
  }
}

TEST(Group, FormsListSameElements) {
  auto f1 = build_group("D5:form=f1"), f2 = build_group("D5:form=f2");
  // Conjugating f1 by the listing permutation yields f2.
  std::vector<std::size_t> to2(f1->order());
  for (std::size_t i = 0; i < f1->order(); ++i)
    to2[i] = f2->index_of(f1->word(i));
  for (std::size_t i = 0; i < f1->order(); ++i)
    for (std::size_t j = 0; j < f1->order(); ++j)
      ASSERT_EQ(to2[f1->mul(i, j)], f2->mul(to2[i], to2[j]));
}

TEST(Group, TrivialSemidirectIsDirectProduct) {
  auto sd = build_group("C5sd1C3"), dp = build_group("C5xC3");
  ASSERT_EQ(sd->order(), dp->order());
  for (std::size_t i = 0; i < sd->order(); ++i) {
    EXPECT_EQ(sd->word(i), dp->word(i));
    for (std::size_t j = 0; j < sd->order(); ++j)
      ASSERT_EQ(sd->mul(i, j), dp->mul(i, j));
  }
}
