#pragma once

// Elliptic orbital integrals at torsion elements of the compact Cartan.

#include <optional>
#include <vector>

#include "dirac/charlib.hpp"
#include "dirac/cyclo.hpp"
#include "dirac/diracindex.hpp"
#include "dirac/sympair.hpp"
#include "dirac/torsion.hpp"

namespace dirac {

struct OrbitalResult {
  CyclotomicNumber value;
  bool regular = true;
  // Only set when the element is singular and these constants enter the value.
  std::optional<Rational> c_g;
  std::optional<long> component_index;
  std::size_t centralizer_roots = 0;  // |Phi_g^+|
  BigInt centralizer_weyl_order = 1;  // |W(t, g_g)|
};

// det(1 - g^{-1} | p_+) = prod_{alpha in Phi_n^+} (1 - e^{-2 pi i <alpha, x>})
inline CyclotomicNumber p_plus_determinant(const TorsionElement& t, const SymmetricPair& p) {
  CyclotomicNumber d = 1;
  for (auto k : p.noncompact) d *= CyclotomicNumber(1) - exp_2pi_i(-t.pairing_root(p.roots(), k));
  return d;
}

inline CyclotomicNumber orbital_g_tau_character(const TorsionElement& t, const FormalCharacter& tau_char,
                                                const SymmetricPair& p) {
  if (!is_regular_element(t, p))
    throw Error(ErrorCode::non_regular_element,
                "g_tau orbital integral needs a regular element; x = " + to_string(t.coords()));
  return evaluate_at_torsion(tau_char, t) / p_plus_determinant(t, p);
}

// O_g(g_tau) = tr tau(g) / det(1 - g^{-1} | p_+), regular g only.
inline OrbitalResult orbital_g_tau(const TorsionElement& t, const TauSpec& tau, const SymmetricPair& p) {
  validate_tau(tau, p);
  OrbitalResult r;
  r.value = orbital_g_tau_character(t, k_character(tau.highest, p), p);
  return r;
}

// Positive roots pairing integrally with x: the root system of the centralizer.
inline RootSubsystem centralizer_roots(const TorsionElement& t, const RootSystem& rs) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
    if (is_integer(t.pairing_root(rs, k))) idx.push_back(k);
  return RootSubsystem(rs, std::move(idx));
}

// O_g(f_sigma) = tr sigma(g) |W(t, g_g)| prod_{Phi_g^+} (rho_g, alpha) / ([G_g : G_g^0] c_g).
// At regular g the centralizer is the torus and the constants do not enter.
inline OrbitalResult orbital_f_sigma(const TorsionElement& t, const Weight& sigma, const SymmetricPair& p,
                                     const Rational& c_g = 1, long component_index = 1) {
  if (c_g == 0) throw Error(ErrorCode::division_by_zero, "c_g must be nonzero");
  if (component_index < 1) throw Error(ErrorCode::bad_argument, "component index must be positive");
  const RootSystem& rs = p.roots();
  OrbitalResult r;
  CyclotomicNumber trace = evaluate_at_torsion(irreducible_character(sigma, rs), t);
  RootSubsystem cent = centralizer_roots(t, rs);
  r.regular = cent.size() == 0;
  r.centralizer_roots = cent.size();
  r.centralizer_weyl_order = cent.weyl_order();
  if (r.regular) {
    r.value = trace;
    return r;
  }
  Weight rho_g = cent.rho();
  Rational prod = 1;
  for (auto k : cent.positive()) prod *= rs.pair_with_root(rho_g.coords, k);
  Rational scale = Rational(r.centralizer_weyl_order) * prod / (Rational(component_index) * c_g);
  r.value = trace * CyclotomicNumber(scale);
  r.c_g = c_g;
  r.component_index = component_index;
  return r;
}

// Sum over the K-types of tau (x) (S+ - S-) of O_g(g_{tau_i}) equals tr tau(g).
// When p_+ is not K-stable, wedge p_- is only a T-module; the K-module is then the spin
// module e^{rho_n} wedge p_-, paired with the denominator g^{rho_n} det(1 - g^{-1} | p_+).
inline bool orbital_consistency(const TorsionElement& t, const TauSpec& tau, const SymmetricPair& p) {
  validate_tau(tau, p);
  if (!is_regular_element(t, p))
    throw Error(ErrorCode::non_regular_element, "orbital consistency needs a regular element");
  FormalCharacter tau_char = k_character(tau.highest, p);
  if (is_hermitian(p)) {
    VirtualKDecomposition d = branch_to_compact(tensor(tau_char, euler_virtual_character(p)), p);
    CyclotomicNumber lhs = 0;
    for (const auto& [hw, m] : d.terms) {
      OrbitalResult piece = orbital_g_tau(t, TauSpec{hw, ""}, p);
      lhs += CyclotomicNumber(static_cast<long>(m)) * piece.value;
    }
    return lhs == evaluate_at_torsion(tau_char, t);
  }
  VirtualKDecomposition d = branch_to_compact(tensor(tau_char, spin_twisted_euler_character(p)), p);
  CyclotomicNumber num = 0;
  for (const auto& [hw, m] : d.terms)
    num += CyclotomicNumber(static_cast<long>(m)) * evaluate_at_torsion(k_character(hw, p), t);
  CyclotomicNumber det = evaluate_at_torsion(FormalCharacter::monomial(p.rho_n), t) * p_plus_determinant(t, p);
  return num / det == evaluate_at_torsion(tau_char, t);
}

// Whether (S+ - S-)(g) vanishes.
inline bool euler_character_vanishing(const TorsionElement& t, const SymmetricPair& p) {
  return evaluate_at_torsion(euler_virtual_character(p), t).is_zero();
}

}  // namespace dirac
