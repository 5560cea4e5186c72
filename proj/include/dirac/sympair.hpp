#pragma once

// Equal-rank symmetric pairs (g, k) described by their compact positive roots.

#include <string>
#include <utility>
#include <vector>

#include "dirac/charlib.hpp"
#include "dirac/error.hpp"
#include "dirac/rootdata.hpp"
#include "dirac/torsion.hpp"

namespace dirac {

struct SymmetricPair {
  RootSystemPtr rs;
  std::vector<bool> compact;            // indexed by positive root
  std::vector<std::size_t> noncompact;  // positive noncompact roots
  RootSubsystem k;                      // compact positive roots
  Weight rho, rho_c, rho_n;

  const RootSystem& roots() const { return *rs; }
  std::size_t rank() const { return rs->rank(); }
};

namespace detail {

inline std::string label(const std::vector<int>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

}  // namespace detail

// Grading closure over all of Phi (both signs): c+c -> c, c+n -> n, n+n -> c.
inline SymmetricPair validate_pair(RootSystemPtr rs, std::vector<std::size_t> compact_indices) {
  const std::size_t np = rs->positive_roots().size();
  std::vector<bool> compact(np, false);
  for (auto k : compact_indices) {
    if (k >= np) throw Error(ErrorCode::not_positive_root, "compact root index out of range");
    compact[k] = true;
  }
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a; b < np; ++b)
      for (int sb : {1, -1}) {
        std::vector<int> sum = rs->root(a).simple;
        const auto& cb = rs->root(b).simple;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += sb * cb[i];
        bool neg = std::any_of(sum.begin(), sum.end(), [](int x) { return x < 0; });
        std::vector<int> abs_sum = sum;
        if (neg)
          for (auto& x : abs_sum) x = -x;
        auto s = rs->find_root(abs_sum);
        if (!s) continue;
        // parity: compact = 0, noncompact = 1
        bool expected_compact = (compact[a] == compact[b]);
        if (compact[*s] != expected_compact) {
          std::string sb_str = sb > 0 ? " + " : " - ";
          throw Error(ErrorCode::grading_violation,
                      "grading violation: " + detail::label(rs->root(a).simple) + (compact[a] ? "(c)" : "(n)") +
                          sb_str + detail::label(cb) + (compact[b] ? "(c)" : "(n)") + " = " + detail::label(sum) +
                          " is " + (compact[*s] ? "compact" : "noncompact") + " but must be " +
                          (expected_compact ? "compact" : "noncompact"));
        }
      }
  SymmetricPair p;
  p.rs = rs;
  p.compact = compact;
  for (std::size_t k = 0; k < np; ++k)
    if (!compact[k]) p.noncompact.push_back(k);
  p.k = RootSubsystem(*rs, compact_indices);
  p.rho = rho(*rs);
  p.rho_c = p.k.rho();
  p.rho_n = p.rho - p.rho_c;
  return p;
}

// Compact roots given in simple-root coordinates.
inline SymmetricPair validate_pair(RootSystemPtr rs, const std::vector<std::vector<int>>& compact_roots) {
  std::vector<std::size_t> idx;
  for (const auto& c : compact_roots) {
    if (c.size() != rs->rank())
      throw Error(ErrorCode::rank_mismatch, "compact root " + detail::label(c) + " has the wrong length");
    auto k = rs->find_root(c);
    if (!k) throw Error(ErrorCode::not_positive_root, "compact root " + detail::label(c) + " is not a positive root");
    idx.push_back(*k);
  }
  return validate_pair(std::move(rs), std::move(idx));
}

// Character of p_- : weights -alpha for alpha in the positive noncompact roots.
inline FormalCharacter p_minus_character(const SymmetricPair& p) {
  FormalCharacter c(p.rank());
  for (auto k : p.noncompact) c.add((-p.roots().root_weight(k)).coords, 1);
  return c;
}

// Character of p: weights +-alpha over the noncompact roots.
inline FormalCharacter p_character(const SymmetricPair& p) {
  FormalCharacter c(p.rank());
  for (auto k : p.noncompact) {
    Weight a = p.roots().root_weight(k);
    c.add(a.coords, 1);
    c.add((-a).coords, 1);
  }
  return c;
}

// (S+, S-) = (even, odd) exterior powers of p_-.
inline std::pair<FormalCharacter, FormalCharacter> spin_characters(const SymmetricPair& p) {
  FormalCharacter pm = p_minus_character(p);
  FormalCharacter even(p.rank()), odd(p.rank());
  const long top = static_cast<long>(p.noncompact.size());
  for (long q = 0; q <= top; ++q) {
    FormalCharacter e = exterior_power(pm, q);
    (q % 2 == 0 ? even : odd) += e;
  }
  return {even, odd};
}

inline FormalCharacter euler_virtual_character(const SymmetricPair& p) {
  auto [plus, minus] = spin_characters(p);
  return plus - minus;
}

// prod_{alpha in Phi_n^+} (1 - e^{-alpha}) expanded directly.
inline FormalCharacter euler_product_character(const SymmetricPair& p) {
  FormalCharacter acc = FormalCharacter::trivial(p.rank());
  for (auto k : p.noncompact) {
    FormalCharacter f = FormalCharacter::trivial(p.rank());
    f.add((-p.roots().root_weight(k)).coords, -1);
    acc = tensor(acc, f);
  }
  return acc;
}

// e^{rho_n} (S+ - S-): the half-spin virtual character, whose weights lie in rho_n + root lattice.
inline FormalCharacter spin_twisted_euler_character(const SymmetricPair& p) {
  return tensor(FormalCharacter::monomial(p.rho_n), euler_virtual_character(p));
}

// |W(g)| / |W(k)|: the Euler characteristic of the compact dual G^d/K.
inline BigInt chi_dual(const SymmetricPair& p) {
  BigInt g = weyl_order(p.roots());
  BigInt k = p.k.weyl_order();
  if (g % k != 0) throw Error(ErrorCode::not_integral, "|W(K)| does not divide |W(G)|");
  return g / k;
}

// |W(T, G^d)| as literally stated alongside the G-index formula; diagnostic only.
inline BigInt chi_dual_raw_weyl(const SymmetricPair& p) { return weyl_order(p.roots()); }

// Whether p_+ is K-stable, i.e. the compact Weyl group preserves the positive noncompact roots.
inline bool is_hermitian(const SymmetricPair& p) {
  const RootSystem& rs = p.roots();
  for (auto b : p.k.simple())
    for (auto n : p.noncompact) {
      long c = to_long(rs.pair_with_coroot(rs.root_weight(n).coords, b));
      std::vector<int> image = rs.root(n).simple;
      for (std::size_t i = 0; i < image.size(); ++i) image[i] -= static_cast<int>(c) * rs.root(b).simple[i];
      if (!rs.find_root(image)) return false;
    }
  return true;
}

inline long dim_x(const SymmetricPair& p) { return 2 * static_cast<long>(p.noncompact.size()); }

// (-1)^(dim X / 2), the sign relating Euler-Poincare volume and chi(Gamma\X).
inline int ep_sign(const SymmetricPair& p) { return p.noncompact.size() % 2 == 0 ? 1 : -1; }

inline bool is_regular_element(const TorsionElement& t, const SymmetricPair& p) {
  for (std::size_t k = 0; k < p.roots().positive_roots().size(); ++k)
    if (is_integer(t.pairing_root(p.roots(), k))) return false;
  return true;
}

inline std::vector<std::size_t> fixed_noncompact_roots(const TorsionElement& t, const SymmetricPair& p) {
  std::vector<std::size_t> out;
  for (auto k : p.noncompact)
    if (is_integer(t.pairing_root(p.roots(), k))) out.push_back(k);
  return out;
}

inline FormalCharacter k_character(const Weight& hw, const SymmetricPair& p) {
  return irreducible_character(hw, p.k);
}

inline VirtualKDecomposition branch_to_compact(const FormalCharacter& c, const SymmetricPair& p) {
  return branch_to_compact(c, p.k);
}

inline std::int64_t trivial_multiplicity(const FormalCharacter& c, const SymmetricPair& p) {
  return trivial_multiplicity(c, p.k);
}

}  // namespace dirac
