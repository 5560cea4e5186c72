#pragma once

// Index quantities for homogeneous Dirac operators on G/K and their arithmetic quotients.

#include <cstdint>
#include <string>
#include <vector>

#include "dirac/charlib.hpp"
#include "dirac/error.hpp"
#include "dirac/rational.hpp"
#include "dirac/rootdata.hpp"
#include "dirac/sympair.hpp"

namespace dirac {

// An irreducible K-type, given by its highest weight in fundamental coordinates of G.
// The weight may be rational (spin K-types sit in rho_n + weight lattice); it must be
// dominant and integral for the compact roots.
struct TauSpec {
  Weight highest;
  std::string label;

  static TauSpec trivial(std::size_t rank) { return {Weight::zero(rank), "trivial"}; }
};

inline void validate_tau(const TauSpec& tau, const SymmetricPair& p) {
  p.roots().check_rank(tau.highest);
  Weight hw = p.roots().to_fundamental(tau.highest);
  if (!p.k.is_integral(hw))
    throw Error(ErrorCode::not_integral, "K-type " + to_string(hw.coords) + " is not integral for the compact roots");
  if (!p.k.is_dominant(hw))
    throw Error(ErrorCode::not_dominant, "K-type " + to_string(hw.coords) + " is not dominant for the compact roots");
}

// lambda_tau = Lambda_tau + rho_c
inline Weight infinitesimal_character(const TauSpec& tau, const SymmetricPair& p) {
  validate_tau(tau, p);
  return p.roots().to_fundamental(tau.highest) + p.rho_c;
}

struct IndexReport {
  Weight lambda;
  bool regular = false;
  Weight dominant;      // w . lambda
  WeylElement element;  // w
  int sign = 1;         // det(w)
  BigInt dim_w = 0;     // dim W_lambda
  BigInt chi_dual = 1;
  Rational unsigned_index = 0;
  Rational signed_index = 0;
};

// G-index of D_tau^+: dim W_lambda / chi(X^d) for regular lambda, 0 otherwise. The signed
// variant multiplies by det(w) for the unique w carrying lambda into the dominant chamber.
inline IndexReport g_index(const TauSpec& tau, const SymmetricPair& p) {
  IndexReport r;
  r.lambda = infinitesimal_character(tau, p);
  r.chi_dual = chi_dual(p);
  auto dc = dominant_conjugate(r.lambda, p.roots());
  r.dominant = dc.weight;
  r.element = dc.element;
  r.sign = dc.sign;
  r.regular = is_regular(r.lambda, p.roots());
  if (!r.regular) return r;
  Weight mu = r.dominant - p.rho;
  if (!all_integral(mu.coords))
    throw Error(ErrorCode::no_genuine_representation,
                "no genuine W_lambda: w.lambda - rho = " + to_string(mu.coords) + " is not integral");
  r.dim_w = weyl_dimension(mu, p.roots());
  r.unsigned_index = Rational(r.dim_w) / Rational(r.chi_dual);
  r.signed_index = r.sign * r.unsigned_index;
  return r;
}

// (lambda, lambda + 2 rho_S) in the long-root-2 normalization.
inline Rational casimir_eigenvalue(const Weight& hw, const RootSubsystem& sub) {
  const RootSystem& rs = sub.ambient();
  Weight l = rs.to_fundamental(hw);
  Weight two_rho = Rational(2) * sub.rho();
  return rs.form(l.coords, (l + two_rho).coords);
}

inline Rational casimir_eigenvalue(const Weight& hw, const RootSystem& rs) {
  return casimir_eigenvalue(hw, RootSubsystem::full(rs));
}

// Parthasarathy: D^2 = -pi(C) + tau(C_K) + |rho_c|^2 - |rho|^2.
inline Rational dirac_square_eigenvalue(const Weight& pi_hw, const TauSpec& tau, const SymmetricPair& p) {
  validate_tau(tau, p);
  const RootSystem& rs = p.roots();
  return -casimir_eigenvalue(pi_hw, rs) + casimir_eigenvalue(tau.highest, p.k) + rs.form(p.rho_c.coords, p.rho_c.coords) -
         rs.form(p.rho.coords, p.rho.coords);
}

// sum_q (-1)^q dim(V_pi (x) L^q p (x) V_tau^vee)^K
inline std::int64_t euler_number_spectral(const Weight& pi_hw, const TauSpec& tau, const SymmetricPair& p) {
  validate_tau(tau, p);
  FormalCharacter base = tensor(irreducible_character(pi_hw, p.roots()), contragredient(k_character(tau.highest, p)));
  FormalCharacter pc = p_character(p);
  std::int64_t total = 0;
  for (long q = 0; q <= dim_x(p); ++q) {
    FormalCharacter term = tensor(base, exterior_power(pc, q));
    std::int64_t m = trivial_multiplicity(term, p);
    total += (q % 2 == 0) ? m : -m;
  }
  return total;
}

// Same quantity through prod_{alpha in Phi_n^+} (1 - e^alpha)(1 - e^-alpha) folded into the tensor.
inline std::int64_t euler_number_product(const Weight& pi_hw, const TauSpec& tau, const SymmetricPair& p) {
  validate_tau(tau, p);
  FormalCharacter c = tensor(irreducible_character(pi_hw, p.roots()), contragredient(k_character(tau.highest, p)));
  for (auto k : p.noncompact) {
    Weight a = p.roots().root_weight(k);
    FormalCharacter f = FormalCharacter::trivial(p.rank());
    f.add(a.coords, -1);
    FormalCharacter g = FormalCharacter::trivial(p.rank());
    g.add((-a).coords, -1);
    c = tensor(tensor(c, f), g);
  }
  return trivial_multiplicity(c, p);
}

struct EulerIndexReport {
  VirtualKDecomposition decomposition;  // tau (x) half-spin virtual character
  std::vector<IndexReport> pieces;
  Rational value = 0;
};

// Index of the Euler operator d + d* twisted by tau, assembled from the K-types of
// tau (x) e^{rho_n}(S+ - S-) and their signed G-indices.
inline EulerIndexReport euler_index_report(const TauSpec& tau, const SymmetricPair& p) {
  validate_tau(tau, p);
  EulerIndexReport r;
  FormalCharacter c = tensor(k_character(tau.highest, p), spin_twisted_euler_character(p));
  r.decomposition = branch_to_compact(c, p);
  for (const auto& [hw, m] : r.decomposition.terms) {
    IndexReport piece = g_index(TauSpec{hw, ""}, p);
    r.value += Rational(static_cast<long>(m)) * piece.signed_index;
    r.pieces.push_back(std::move(piece));
  }
  return r;
}

inline Rational euler_index(const TauSpec& tau, const SymmetricPair& p) { return euler_index_report(tau, p).value; }

enum class OperatorKind { dirac, euler };

// ind(D_Gamma) = ind_G(D) chi(X_Gamma) + R
inline Rational arithmetic_index(OperatorKind kind, const TauSpec& tau, const SymmetricPair& p, const BigInt& chi_gamma,
                                 const Rational& error_term = 0) {
  Rational g = kind == OperatorKind::dirac ? g_index(tau, p).signed_index : euler_index(tau, p);
  return g * Rational(chi_gamma) + error_term;
}

}  // namespace dirac
