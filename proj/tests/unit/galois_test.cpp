#include <gtest/gtest.h>

#include <set>

#include "j4free/error.hpp"
#include "j4free/galois.hpp"
#include "oracles.hpp"

using namespace j4free;

TEST(Galois, PrimeFieldOfOrderTwo) {
  const auto f = FieldCtx::create(2, 1);
  ASSERT_EQ(f.exp_table().size(), 1u);
  EXPECT_EQ(f.exp_table()[0], f.one());
}

TEST(Galois, FourElementFieldUsesXSquaredPlusXPlusOne) {
  const auto f = FieldCtx::create(2, 2);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(f.log(f.primitive()), 1u);
  std::set<std::uint32_t> seen;
  for (auto e : f.exp_table()) seen.insert(e.code);
  EXPECT_EQ(seen, (std::set<std::uint32_t>{1, 2, 3}));
}

TEST(Galois, ExpTableEntriesAreDistinct) {
  for (auto [p, h] : std::vector<std::pair<int, int>>{{3, 3}, {2, 6}, {5, 2}, {7, 3}, {2, 12}}) {
    const auto f = FieldCtx::create(p, h);
    std::set<std::uint32_t> seen;
    for (auto e : f.exp_table()) seen.insert(e.code);
    EXPECT_EQ(seen.size(), f.order() - 1u) << p << "^" << h;
    EXPECT_FALSE(seen.count(0));
  }
}

TEST(Galois, LogInvertsExp) {
  const auto f = FieldCtx::create(3, 4);
  for (std::uint32_t i = 0; i + 1 < f.order(); ++i) EXPECT_EQ(f.log(f.exp(i)), i);
  EXPECT_THROW(f.log(f.zero()), Error);
}

TEST(Galois, MultiplicationMatchesSchoolbookPolynomials) {
  for (auto [p, h] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {5, 2}, {7, 2}, {2, 5}}) {
    const auto f = FieldCtx::create(p, h);
    const oracle::NaivePoly np{static_cast<std::uint32_t>(p), f.modulus()};
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      for (std::uint32_t b = 0; b < f.order(); ++b) {
        const auto want = np.encode(np.mul(np.decode(a), np.decode(b)));
        ASSERT_EQ(f.mul(Element{a}, Element{b}).code, want);
        ASSERT_EQ(f.add(Element{a}, Element{b}).code, np.encode(np.add(np.decode(a), np.decode(b))));
      }
    }
  }
}

TEST(Galois, ModulusIsIrreducibleAndXIsPrimitive) {
  for (auto [p, h] : std::vector<std::pair<int, int>>{{2, 3}, {2, 8}, {3, 2}, {3, 6}, {5, 3}, {11, 3}}) {
    const auto f = FieldCtx::create(p, h);
    EXPECT_TRUE(is_irreducible(f.modulus(), p));
    const oracle::NaivePoly np{static_cast<std::uint32_t>(p), f.modulus()};
    EXPECT_EQ(np.encode(np.pow(np.decode(p), f.order() - 1)), 1u);
  }
}

TEST(Galois, IrreducibilityAgreesWithRootScanForSmallDegrees) {
  // Degree <= 3 polynomials are irreducible iff they have no root.
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t c0 = 0; c0 < p; ++c0) {
      for (std::uint32_t c1 = 0; c1 < p; ++c1) {
        for (std::uint32_t c2 = 0; c2 < p; ++c2) {
          const std::vector<std::uint32_t> f{c0, c1, c2, 1};
          bool root = false;
          for (std::uint32_t x = 0; x < p; ++x) root = root || (c0 + c1 * x + c2 * x * x + x * x * x) % p == 0;
          EXPECT_EQ(is_irreducible(f, p), !root);
        }
      }
    }
  }
  EXPECT_FALSE(is_irreducible(std::vector<std::uint32_t>{1, 0, 1, 0, 1}, 2));  // (x^2+x+1)^2
}

TEST(Galois, TraceExamples) {
  const auto f4 = FieldCtx::create(2, 2);
  EXPECT_EQ(rel_trace(f4, 2, f4.zero()), f4.zero());
  EXPECT_EQ(rel_trace(f4, 2, f4.primitive()), f4.one());
  const auto f8 = FieldCtx::create(2, 3);
  EXPECT_EQ(rel_trace(f8, 3, f8.one()), f8.one());
  EXPECT_THROW(rel_trace(f8, 2, f8.one()), Error);
}

TEST(Galois, TraceLandsInBaseField) {
  for (auto [p, h, e] : std::vector<std::tuple<int, int, int>>{{2, 6, 3}, {3, 6, 2}, {2, 8, 2}, {5, 3, 3}, {2, 12, 3}}) {
    const auto f = FieldCtx::create(p, h);
    const std::uint32_t base_degree = h / e;
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      const auto tr = rel_trace(f, e, Element{a});
      ASSERT_EQ(f.frobenius(tr, base_degree), tr);
    }
  }
}

TEST(Galois, FrobeniusIsAFieldAutomorphism) {
  const auto f = FieldCtx::create(2, 10);
  for (std::uint32_t a = 0; a < f.order(); a += 7) {
    for (std::uint32_t b = 0; b < f.order(); b += 13) {
      const Element x{a}, y{b};
      ASSERT_EQ(f.frobenius(f.add(x, y)), f.add(f.frobenius(x), f.frobenius(y)));
      ASSERT_EQ(f.frobenius(f.mul(x, y)), f.mul(f.frobenius(x), f.frobenius(y)));
    }
  }
  const auto g = FieldCtx::create(3, 5);
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    for (std::uint32_t b = 0; b < g.order(); b += 5) {
      const Element x{a}, y{b};
      ASSERT_EQ(g.frobenius(g.add(x, y)), g.add(g.frobenius(x), g.frobenius(y)));
    }
  }
}

TEST(Galois, InverseAndDivision) {
  const auto f = FieldCtx::create(7, 2);
  for (std::uint32_t a = 1; a < f.order(); ++a) {
    EXPECT_EQ(f.mul(Element{a}, f.inv(Element{a})), f.one());
    EXPECT_EQ(f.div(Element{a}, Element{a}), f.one());
    EXPECT_EQ(f.add(Element{a}, f.neg(Element{a})), f.zero());
  }
  EXPECT_EQ(f.pow(f.primitive(), f.order() - 1), f.one());
}

TEST(Galois, CreationErrors) {
  EXPECT_THROW(FieldCtx::create(4, 1), Error);
  try {
    FieldCtx::create(2, 25);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::table_overflow);
  }
  try {
    FieldCtx::create(9, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_prime);
  }
}

TEST(Galois, SubfieldMembership) {
  const auto f = FieldCtx::create(2, 6);
  std::size_t in4 = 0, in8 = 0;
  for (std::uint32_t a = 0; a < f.order(); ++a) {
    in4 += f.in_subfield(Element{a}, 2) ? 1 : 0;
    in8 += f.in_subfield(Element{a}, 3) ? 1 : 0;
  }
  EXPECT_EQ(in4, 4u);
  EXPECT_EQ(in8, 8u);
  EXPECT_THROW(f.in_subfield(f.one(), 4), Error);
}
