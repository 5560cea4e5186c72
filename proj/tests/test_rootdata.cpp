#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dirac/rootdata.hpp"

using namespace dirac;

namespace {

// Independent oracle: all roots as the orbit of the simple roots under simple reflections,
// acting on simple-root coordinates through the Cartan matrix only.
std::set<std::vector<int>> roots_by_reflection_closure(const std::vector<std::vector<int>>& a) {
  const std::size_t r = a.size();
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> stack;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    all.insert(e);
    stack.push_back(e);
  }
  while (!stack.empty()) {
    auto b = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < r; ++i) {
      int p = 0;
      for (std::size_t k = 0; k < r; ++k) p += b[k] * a[k][i];
      auto c = b;
      c[i] -= p;
      if (all.insert(c).second) stack.push_back(c);
    }
  }
  return all;
}

// Independent oracle: orbit size of rho (all ones) under simple reflections on fundamental coordinates.
std::size_t rho_orbit_size(const std::vector<std::vector<int>>& a) {
  const std::size_t r = a.size();
  std::set<std::vector<long>> seen{std::vector<long>(r, 1)};
  std::vector<std::vector<long>> stack{std::vector<long>(r, 1)};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < r; ++j) {
      auto w = v;
      for (std::size_t i = 0; i < r; ++i) w[i] -= v[j] * a[j][i];
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size();
}

std::size_t expected_positive_count(const SimpleFactor& f) {
  const std::size_t n = static_cast<std::size_t>(f.rank);
  switch (f.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
                                              "D4", "F4", "G2", "A1xA1", "A1xB2", "A2xG2", "A1xA1xA1"};

Weight W(std::vector<long> v) { return Weight::from_ints(v); }

}  // namespace

TEST(CartanType, ParsesProducts) {
  auto t = CartanType::parse("A1xB2");
  ASSERT_EQ(t.factors.size(), 2u);
  EXPECT_EQ(t.factors[0], (SimpleFactor{'A', 1}));
  EXPECT_EQ(t.factors[1], (SimpleFactor{'B', 2}));
  EXPECT_EQ(t.total_rank(), 3);
  EXPECT_EQ(t.to_string(), "A1xB2");
}

TEST(CartanType, RejectsInadmissibleFactorsByName) {
  for (const char* bad : {"B1", "C1", "D3", "E5", "E9", "F3", "G3", "A0"}) {
    try {
      build_root_system(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::inadmissible_type) << bad;
      EXPECT_NE(std::string(e.what()).find(bad), std::string::npos) << e.what();
    }
  }
  try {
    build_root_system("H3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_family);
  }
}

TEST(RootSystem, RankOneAndProducts) {
  auto a1 = build_root_system("A1");
  ASSERT_EQ(a1->positive_roots().size(), 1u);
  EXPECT_EQ(a1->root(0).simple, std::vector<int>{1});
  auto a1a1 = build_root_system("A1xA1");
  EXPECT_EQ(a1a1->positive_roots().size(), 2u);
  EXPECT_EQ(a1a1->cartan(0, 1), 0);
  EXPECT_EQ(a1a1->cartan(1, 0), 0);
  EXPECT_EQ(a1a1->factor_of(0), 0u);
  EXPECT_EQ(a1a1->factor_of(1), 1u);
}

TEST(RootSystem, RootCountsMatchTableAndReflectionClosure) {
  for (const char* name : {"A1", "A2", "A5", "B2", "B3", "B5", "C3", "C4", "D4", "D5", "D6", "E6", "E7", "E8", "F4",
                           "G2", "A1xA1", "A2xB3", "G2xD4"}) {
    auto rs = build_root_system(name);
    std::size_t expected = 0;
    for (const auto& f : rs->type().factors) expected += expected_positive_count(f);
    EXPECT_EQ(rs->positive_roots().size(), expected) << name;
    auto closure = roots_by_reflection_closure(rs->cartan_matrix());
    EXPECT_EQ(closure.size(), 2 * expected) << name;
    for (const auto& r : rs->positive_roots()) EXPECT_TRUE(closure.count(r.simple)) << name;
  }
}

TEST(RootSystem, StructuralInvariants) {
  for (const auto& name : kSmallTypes) {
    auto rs = build_root_system(name);
    const std::size_t r = rs->rank();
    for (std::size_t i = 0; i < r; ++i) {
      EXPECT_EQ(rs->cartan(i, i), 2);
      for (std::size_t j = 0; j < r; ++j) {
        if (i != j) {
          EXPECT_LE(rs->cartan(i, j), 0);
        }
        // symmetrized Cartan matrix
        EXPECT_EQ(rs->cartan(i, j) * rs->symmetrizer()[j], rs->cartan(j, i) * rs->symmetrizer()[i]);
      }
    }
    int prev_height = 0;
    for (const auto& root : rs->positive_roots()) {
      for (int c : root.simple) EXPECT_GE(c, 0);
      EXPECT_GE(root.height, prev_height);
      prev_height = root.height;
    }
    // positive definite: leading principal minors of the Gram matrix on simple roots
    std::vector<RationalVector> g(r, RationalVector(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) g[i][j] = rs->cartan(i, j) * rs->half_norm(j);
    for (std::size_t k = 1; k <= r; ++k) {
      std::vector<RationalVector> m(k, RationalVector(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = g[i][j];
      Rational det = 1;
      for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && m[p][c] == 0) ++p;
        ASSERT_LT(p, k);
        if (p != c) {
          std::swap(m[p], m[c]);
          det = -det;
        }
        det *= m[c][c];
        for (std::size_t rr = c + 1; rr < k; ++rr) {
          Rational f = m[rr][c] / m[c][c];
          for (std::size_t j = c; j < k; ++j) m[rr][j] -= f * m[c][j];
        }
      }
      EXPECT_GT(det, 0) << name;
    }
  }
}

TEST(RootSystem, LongRootsHaveNormTwo) {
  for (const char* name : {"B3", "C3", "F4", "G2"}) {
    auto rs = build_root_system(name);
    Rational mx = 0;
    for (const auto& r : rs->positive_roots()) mx = std::max(mx, r.norm2);
    EXPECT_EQ(mx, 2) << name;
  }
  auto b2 = build_root_system("B2");
  EXPECT_EQ(b2->root(0).norm2, 2);  // alpha_1 long
  EXPECT_EQ(b2->root(1).norm2, 1);  // alpha_2 short
}

TEST(InnerProduct, NormalizationExamples) {
  auto a1 = build_root_system("A1");
  Weight alpha({Rational(1)}, Basis::simple_root);
  EXPECT_EQ(inner_product(alpha, alpha, *a1), 2);
  EXPECT_EQ(inner_product(W({1}), W({1}), *a1), make_rational(1, 2));
  EXPECT_THROW(inner_product(W({1}), W({1, 0}), *a1), Error);
}

TEST(InnerProduct, SymmetricAndBilinearOnRandomWeights) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<long> d(-4, 4);
  for (const auto& name : kSmallTypes) {
    auto rs = build_root_system(name);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long> a(rs->rank()), b(rs->rank()), c(rs->rank());
      for (auto* v : {&a, &b, &c})
        for (auto& x : *v) x = d(gen);
      EXPECT_EQ(inner_product(W(a), W(b), *rs), inner_product(W(b), W(a), *rs));
      EXPECT_EQ(inner_product(W(a) + W(c), W(b), *rs),
                inner_product(W(a), W(b), *rs) + inner_product(W(c), W(b), *rs));
    }
  }
}

TEST(Weight, BasisConversionRoundTrip) {
  std::mt19937 gen(11);
  std::uniform_int_distribution<long> d(-5, 5);
  for (const auto& name : kSmallTypes) {
    auto rs = build_root_system(name);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<long> v(rs->rank());
      for (auto& x : v) x = d(gen);
      Weight w = W(v);
      EXPECT_EQ(rs->to_fundamental(rs->to_simple_root(w)), w);
      Weight s = Weight::from_ints(v, Basis::simple_root);
      EXPECT_EQ(rs->to_simple_root(rs->to_fundamental(s)), s);
    }
  }
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(*build_root_system("A1")), W({1}));
  EXPECT_EQ(rho(*build_root_system("A2")), W({1, 1}));
  // B2: half-sum of alpha1, alpha2, alpha1+alpha2, alpha1+2alpha2 = (3/2, 2) in root coordinates
  auto b2 = build_root_system("B2");
  Weight half_sum(RationalVector{make_rational(3, 2), Rational(2)}, Basis::simple_root);
  EXPECT_EQ(b2->to_fundamental(half_sum), W({1, 1}));
  EXPECT_EQ(rho(*b2), W({1, 1}));
}

TEST(Rho, HalfSumAndSimpleCorootPairings) {
  for (const auto& name : kSmallTypes) {
    auto rs = build_root_system(name);
    RationalVector sum(rs->rank(), Rational(0));
    for (const auto& r : rs->positive_roots())
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += r.fundamental[i];
    Weight rh = rho(*rs);
    for (std::size_t i = 0; i < sum.size(); ++i) {
      EXPECT_EQ(sum[i], 2 * rh.coords[i]);
      EXPECT_EQ(rh.coords[i], 1);
    }
  }
}

TEST(Reflect, Examples) {
  auto a1 = build_root_system("A1");
  Weight alpha = a1->root_weight(0);
  EXPECT_EQ(reflect(rho(*a1), alpha, *a1), W({-1}));
  auto a2 = build_root_system("A2");
  Weight a1r = a2->root_weight(0);
  EXPECT_EQ(reflect(W({1, 0}), a1r, *a2), W({1, 0}) - a1r);
  EXPECT_EQ(reflect(W({3, -2}), -a1r, *a2), reflect(W({3, -2}), a1r, *a2));
  EXPECT_THROW(reflect(W({1, 0}), W({1, 0}), *a2), Error);
}

TEST(Reflect, IsAnInvolutionForEveryRoot) {
  for (const auto& name : kSmallTypes) {
    auto rs = build_root_system(name);
    std::vector<long> v(rs->rank());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<long>(i) * 2 - 3;
    for (std::size_t k = 0; k < rs->positive_roots().size(); ++k) {
      Weight r = rs->root_weight(k);
      EXPECT_EQ(reflect(reflect(W(v), r, *rs), r, *rs), W(v));
    }
  }
}

TEST(WeylGroup, EnumerationSizes) {
  EXPECT_EQ(weyl_group(*build_root_system("A1")).size(), 2u);
  EXPECT_EQ(weyl_group(*build_root_system("B2")).size(), 8u);
  EXPECT_EQ(weyl_group(*build_root_system("G2")).size(), 12u);
}

TEST(WeylGroup, OrderFormulaAgreesWithEnumerationAndOrbitOracle) {
  for (const auto& name : kSmallTypes) {
    auto rs = build_root_system(name);
    auto group = weyl_group(*rs);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(group.size())), weyl_order(*rs)) << name;
    EXPECT_EQ(group.size(), rho_orbit_size(rs->cartan_matrix())) << name;
  }
}

TEST(WeylGroup, OrderFormulaValues) {
  for (int n = 1; n <= 8; ++n) {
    BigInt f = 1;
    for (int k = 2; k <= n + 1; ++k) f *= k;
    EXPECT_EQ(weyl_order(*build_root_system("A" + std::to_string(n))), f);
  }
  EXPECT_EQ(weyl_order(*build_root_system("E8")), BigInt(696729600));
  EXPECT_EQ(weyl_order(*build_root_system("B2xG2")),
            weyl_order(*build_root_system("B2")) * weyl_order(*build_root_system("G2")));
}

TEST(WeylGroup, HeightDistributionOrderMatchesDegreeTable) {
  for (const char* name : {"A1", "A7", "B5", "C6", "D4", "D7", "E6", "E7", "E8", "F4", "G2", "A2xE6"}) {
    auto rs = build_root_system(name);
    EXPECT_EQ(RootSubsystem::full(*rs).weyl_order(), weyl_order(*rs)) << name;
  }
}

TEST(WeylGroup, CapExceededCarriesExactOrder) {
  auto e8 = build_root_system("E8");
  try {
    weyl_group(*e8);
    FAIL();
  } catch (const WeylCapExceeded& e) {
    EXPECT_EQ(e.code(), ErrorCode::weyl_cap_exceeded);
    EXPECT_EQ(e.order(), BigInt(696729600));
  }
  EXPECT_THROW(weyl_group(*build_root_system("A3"), 23), WeylCapExceeded);
  EXPECT_EQ(weyl_group(*build_root_system("A3"), 24).size(), 24u);
}

TEST(WeylGroup, SimpleReflectionsPermuteTheGroup) {
  for (const char* name : {"A3", "B3", "G2", "A1xA2"}) {
    auto rs = build_root_system(name);
    auto full = RootSubsystem::full(*rs);
    auto group = weyl_group(*rs);
    std::set<std::vector<std::int64_t>> mats;
    for (const auto& w : group) mats.insert(w.matrix.a);
    for (std::size_t j = 0; j < rs->rank(); ++j) {
      std::set<std::vector<std::int64_t>> image;
      IntMatrix s = full.simple_reflection_matrix(j);
      for (const auto& w : group) image.insert((s * w.matrix).a);
      EXPECT_EQ(image, mats) << name;
    }
  }
}

TEST(WeylGroup, ElementsPreserveFormAndHaveSignedDeterminant) {
  std::mt19937 gen(3);
  std::uniform_int_distribution<long> d(-3, 3);
  for (const char* name : {"A2", "B2", "G2", "B3", "A1xA1"}) {
    auto rs = build_root_system(name);
    for (const auto& w : weyl_group(*rs)) {
      std::vector<long> a(rs->rank()), b(rs->rank());
      for (auto* v : {&a, &b})
        for (auto& x : *v) x = d(gen);
      EXPECT_EQ(inner_product(w.apply(W(a)), w.apply(W(b)), *rs), inner_product(W(a), W(b), *rs));
      // determinant by cofactor-free elimination on rationals
      std::vector<RationalVector> m(rs->rank(), RationalVector(rs->rank()));
      for (std::size_t i = 0; i < rs->rank(); ++i)
        for (std::size_t j = 0; j < rs->rank(); ++j) m[i][j] = static_cast<long>(w.matrix(i, j));
      Rational det = 1;
      for (std::size_t c = 0; c < m.size(); ++c) {
        std::size_t p = c;
        while (m[p][c] == 0) ++p;
        if (p != c) {
          std::swap(m[p], m[c]);
          det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < m.size(); ++r) {
          Rational f = m[r][c] / m[c][c];
          for (std::size_t j = c; j < m.size(); ++j) m[r][j] -= f * m[c][j];
        }
      }
      EXPECT_EQ(det, w.sign());
    }
  }
}

TEST(DominantConjugate, Examples) {
  auto a2 = build_root_system("A2");
  auto id = dominant_conjugate(W({2, 1}), *a2);
  EXPECT_EQ(id.weight, W({2, 1}));
  EXPECT_TRUE(id.element.word.empty());
  EXPECT_EQ(id.sign, 1);

  auto a1 = build_root_system("A1");
  auto r = dominant_conjugate(W({-3}), *a1);
  EXPECT_EQ(r.weight, W({3}));
  EXPECT_EQ(r.element.word, std::vector<int>{0});
  EXPECT_EQ(r.sign, -1);

  // -rho goes to rho via the longest element, length 3, so det = -1.
  auto l = dominant_conjugate(W({-1, -1}), *a2);
  EXPECT_EQ(l.weight, W({1, 1}));
  EXPECT_EQ(l.element.length(), 3u);
  EXPECT_EQ(l.sign, -1);
  std::size_t longest = 0;
  for (const auto& w : weyl_group(*a2)) longest = std::max(longest, w.length());
  EXPECT_EQ(longest, 3u);
}

TEST(DominantConjugate, ElementMapsInputToDominantAndIsUniqueForRegular) {
  std::mt19937 gen(5);
  std::uniform_int_distribution<long> d(-4, 4);
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    auto rs = build_root_system(name);
    auto group = weyl_group(*rs);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<long> v(rs->rank());
      for (auto& x : v) x = d(gen);
      auto dc = dominant_conjugate(W(v), *rs);
      EXPECT_TRUE(is_dominant(dc.weight, *rs));
      EXPECT_EQ(dc.element.apply(W(v)), dc.weight);
      if (is_regular(W(v), *rs)) {
        int hits = 0;
        for (const auto& w : group)
          if (w.apply(W(v)) == dc.weight) ++hits;
        EXPECT_EQ(hits, 1);
      }
    }
  }
}

TEST(IsRegular, Examples) {
  for (const auto& name : kSmallTypes) {
    auto rs = build_root_system(name);
    EXPECT_TRUE(is_regular(rho(*rs), *rs));
    EXPECT_FALSE(is_regular(Weight::zero(rs->rank()), *rs));
  }
  EXPECT_FALSE(is_regular(W({1, 0}), *build_root_system("A2")));
}

TEST(RootSubsystem, ClosedSubsetsAndHeights) {
  auto b2 = build_root_system("B2");
  // long roots alpha1 and alpha1 + 2 alpha2 form A1 x A1
  auto k1 = b2->find_root({1, 0});
  auto k2 = b2->find_root({1, 2});
  RootSubsystem s(*b2, {*k1, *k2});
  EXPECT_EQ(s.simple().size(), 2u);
  EXPECT_EQ(s.weyl_order(), BigInt(4));
  // alpha2 and alpha1 + alpha2 are not closed (their sum is a root)
  EXPECT_THROW(RootSubsystem(*b2, {*b2->find_root({0, 1}), *b2->find_root({1, 1})}), Error);
  RootSubsystem torus(*b2, {});
  EXPECT_EQ(torus.weyl_order(), BigInt(1));
  EXPECT_EQ(torus.weyl_group().size(), 1u);
}
