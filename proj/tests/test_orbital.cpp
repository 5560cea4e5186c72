#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "dirac/orbital.hpp"
#include "dirac/presets.hpp"

using namespace dirac;

namespace {

using C = std::complex<double>;

C approx(const CyclotomicNumber& z) {
  auto [re, im] = z.to_complex_approx();
  return {re, im};
}

C cis(const Rational& q) {
  double a = 2 * M_PI * q.get_d();
  return {std::cos(a), std::sin(a)};
}

TorsionElement T(std::vector<Rational> x) { return TorsionElement(std::move(x)); }

std::vector<TorsionElement> regular_elements(const SymmetricPair& p, long max_order) {
  std::vector<TorsionElement> out;
  for (const auto& t : enumerate_torsion(p.rank(), max_order))
    if (is_regular_element(t, p)) out.push_back(t);
  return out;
}

const std::vector<std::string> kHermitian = {"su11", "hilbert2", "su21"};

}  // namespace

TEST(OrbitalGTau, Examples) {
  auto su11 = preset_pair("su11");
  // <alpha, x> = 2x = 1/3
  auto t = T({Rational(1, 6)});
  auto r = orbital_g_tau(t, TauSpec::trivial(1), su11);
  EXPECT_TRUE(r.regular);
  EXPECT_FALSE(r.c_g.has_value());
  EXPECT_EQ(r.value, (CyclotomicNumber(1) - root_of_unity(-1, 3)).inverse());
  try {
    orbital_g_tau(TorsionElement::identity(1), TauSpec::trivial(1), su11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::non_regular_element);
  }
}

TEST(OrbitalGTau, FactorsOverProductPairs) {
  auto su11 = preset_pair("su11");
  auto h2 = preset_pair("hilbert2");
  for (const auto& a : regular_elements(su11, 6))
    for (const auto& b : regular_elements(su11, 6)) {
      auto t = T({a.coords()[0], b.coords()[0]});
      for (long m1 : {0L, 1L, -3L})
        for (long m2 : {0L, 2L}) {
          auto v = orbital_g_tau(t, TauSpec{Weight::from_ints({m1, m2}), ""}, h2).value;
          auto va = orbital_g_tau(a, TauSpec{Weight::from_ints({m1}), ""}, su11).value;
          auto vb = orbital_g_tau(b, TauSpec{Weight::from_ints({m2}), ""}, su11).value;
          EXPECT_EQ(v, va * vb);
        }
    }
}

TEST(OrbitalGTau, MatchesComplexOracle) {
  for (const auto& name : preset_names()) {
    auto p = preset_pair(name);
    TauSpec tau = TauSpec::trivial(p.rank());
    if (name == "su21") tau = TauSpec{Weight::from_ints({1, 0}), ""};
    if (name == "so41") tau = TauSpec{Weight::from_ints({0, 2}), ""};
    auto ch = k_character(tau.highest, p);
    for (const auto& t : regular_elements(p, 7)) {
      C trace = 0;
      for (const auto& [mu, m] : ch.terms()) trace += static_cast<double>(m) * cis(t.pairing(mu));
      C det = 1;
      for (auto k : p.noncompact) det *= C(1) - cis(-t.pairing_root(p.roots(), k));
      C expected = trace / det;
      C got = approx(orbital_g_tau(t, tau, p).value);
      EXPECT_LT(std::abs(got - expected), 1e-8 * (1 + std::abs(expected))) << name;
    }
  }
}

TEST(OrbitalGTau, InvariantUnderCompactWeylGroupOnHermitianPairs) {
  for (const auto& name : kHermitian) {
    auto p = preset_pair(name);
    auto wk = p.k.weyl_group();
    TauSpec tau = TauSpec::trivial(p.rank());
    if (name == "su21") tau = TauSpec{Weight::from_ints({2, 0}), ""};
    for (const auto& t : regular_elements(p, 8)) {
      auto v = orbital_g_tau(t, tau, p).value;
      for (const auto& w : wk) EXPECT_EQ(orbital_g_tau(conjugate(t, w, p.k), tau, p).value, v) << name;
    }
  }
}

TEST(OrbitalFSigma, RegularCases) {
  for (const auto& name : preset_names()) {
    auto p = preset_pair(name);
    Weight sigma = Weight::zero(p.rank());
    sigma.coords[0] = 1;
    auto ch = irreducible_character(sigma, p.roots());
    for (const auto& t : regular_elements(p, 6)) {
      auto triv = orbital_f_sigma(t, Weight::zero(p.rank()), p);
      EXPECT_TRUE(triv.regular);
      EXPECT_EQ(triv.value, CyclotomicNumber(1));
      auto r = orbital_f_sigma(t, sigma, p);
      EXPECT_EQ(r.value, evaluate_at_torsion(ch, t));
      // constants never enter at regular elements
      auto scaled = orbital_f_sigma(t, sigma, p, Rational(7, 3), 4);
      EXPECT_EQ(scaled.value, r.value);
      EXPECT_FALSE(scaled.c_g.has_value());
      EXPECT_FALSE(scaled.component_index.has_value());
    }
  }
}

TEST(OrbitalFSigma, IdentityElement) {
  auto su11 = preset_pair("su11");
  auto r = orbital_f_sigma(TorsionElement::identity(1), Weight::zero(1), su11);
  EXPECT_FALSE(r.regular);
  EXPECT_EQ(r.value, CyclotomicNumber(2));
  EXPECT_EQ(r.centralizer_roots, 1u);
  EXPECT_EQ(r.centralizer_weyl_order, BigInt(2));
  ASSERT_TRUE(r.c_g.has_value());
  EXPECT_EQ(*r.c_g, 1);
  auto scaled = orbital_f_sigma(TorsionElement::identity(1), Weight::zero(1), su11, Rational(1, 2), 2);
  EXPECT_EQ(scaled.value, CyclotomicNumber(2));
  EXPECT_THROW(orbital_f_sigma(TorsionElement::identity(1), Weight::zero(1), su11, Rational(0)), Error);
  EXPECT_THROW(orbital_f_sigma(TorsionElement::identity(1), Weight::zero(1), su11, Rational(1), 0), Error);
}

TEST(OrbitalFSigma, SingularElementsUseCentralizerData) {
  // A2: x with <alpha1, x> integral only; the centralizer is A1 x torus
  auto p = preset_pair("su21");
  auto t = T({Rational(1, 4), Rational(1, 2)});
  auto r = orbital_f_sigma(t, Weight::zero(2), p);
  EXPECT_FALSE(r.regular);
  EXPECT_EQ(r.centralizer_roots, 1u);
  EXPECT_EQ(r.centralizer_weyl_order, BigInt(2));
  EXPECT_EQ(r.value, CyclotomicNumber(2));  // |W| (rho_g, alpha) = 2 * 1
}

TEST(OrbitalFSigma, InvariantUnderCompactWeylGroup) {
  for (const auto& name : preset_names()) {
    auto p = preset_pair(name);
    auto wk = p.k.weyl_group();
    Weight sigma = Weight::zero(p.rank());
    sigma.coords.back() = 1;
    for (const auto& t : enumerate_torsion(p.rank(), 6)) {
      auto v = orbital_f_sigma(t, sigma, p).value;
      for (const auto& w : wk) EXPECT_EQ(orbital_f_sigma(conjugate(t, w, p.k), sigma, p).value, v) << name;
    }
  }
}

TEST(OrbitalConsistency, Examples) {
  auto su11 = preset_pair("su11");
  EXPECT_TRUE(orbital_consistency(T({Rational(1, 6)}), TauSpec::trivial(1), su11));
  EXPECT_THROW(orbital_consistency(TorsionElement::identity(1), TauSpec::trivial(1), su11), Error);
  for (const auto& name : preset_names()) {
    auto p = preset_pair(name);
    for (const auto& t : regular_elements(p, 8)) EXPECT_TRUE(orbital_consistency(t, TauSpec::trivial(p.rank()), p));
  }
}

TEST(EulerCharacterVanishing, Examples) {
  auto su11 = preset_pair("su11");
  EXPECT_TRUE(euler_character_vanishing(TorsionElement::identity(1), su11));
  EXPECT_FALSE(euler_character_vanishing(T({Rational(1, 6)}), su11));
  auto su21 = preset_pair("su21");
  // <alpha2, x> = 1, <alpha1 + alpha2, x> = 1/2
  auto t = T({Rational(0), Rational(1, 2)});
  const auto& rs = su21.roots();
  EXPECT_TRUE(is_integer(t.pairing_root(rs, *rs.find_root({0, 1}))));
  EXPECT_FALSE(is_integer(t.pairing_root(rs, *rs.find_root({1, 1}))));
  EXPECT_TRUE(euler_character_vanishing(t, su21));
}
