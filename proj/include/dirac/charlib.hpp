#pragma once

// Formal characters of the compact Cartan torus: finitely supported integer-valued
// functions on the weight lattice, keyed by fundamental-weight coordinates.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dirac/cyclo.hpp"
#include "dirac/error.hpp"
#include "dirac/rational.hpp"
#include "dirac/rootdata.hpp"
#include "dirac/torsion.hpp"

namespace dirac {

class FormalCharacter {
 public:
  using Map = std::map<RationalVector, std::int64_t>;

  explicit FormalCharacter(std::size_t rank = 0) : rank_(rank) {}

  static FormalCharacter trivial(std::size_t rank) { return monomial(Weight::zero(rank)); }

  static FormalCharacter monomial(const Weight& w, std::int64_t mult = 1) {
    FormalCharacter c(w.rank());
    c.add(w.coords, mult);
    return c;
  }

  std::size_t rank() const { return rank_; }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  std::int64_t multiplicity(const RationalVector& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? 0 : it->second;
  }
  std::int64_t multiplicity(const Weight& mu) const { return multiplicity(mu.coords); }

  void add(const RationalVector& mu, std::int64_t m) {
    if (mu.size() != rank_)
      throw Error(ErrorCode::rank_mismatch, "weight rank does not match character rank");
    if (m == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Sum of multiplicities, i.e. the (virtual) dimension.
  std::int64_t total_mass() const {
    std::int64_t s = 0;
    for (const auto& [mu, m] : terms_) s += m;
    return s;
  }

  bool integral() const {
    for (const auto& [mu, m] : terms_)
      if (!all_integral(mu)) return false;
    return true;
  }

  FormalCharacter& operator+=(const FormalCharacter& o) {
    check_same(o);
    for (const auto& [mu, m] : o.terms_) add(mu, m);
    return *this;
  }
  FormalCharacter& operator-=(const FormalCharacter& o) {
    check_same(o);
    for (const auto& [mu, m] : o.terms_) add(mu, -m);
    return *this;
  }
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
  friend FormalCharacter operator*(std::int64_t s, const FormalCharacter& a) {
    FormalCharacter out(a.rank_);
    for (const auto& [mu, m] : a.terms_) out.add(mu, s * m);
    return out;
  }
  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

  void check_same(const FormalCharacter& o) const {
    if (o.rank_ != rank_) throw Error(ErrorCode::rank_mismatch, "characters live on tori of different rank");
  }

 private:
  std::size_t rank_;
  Map terms_;
};

// ---- ring operations --------------------------------------------------------------------

inline FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b) {
  a.check_same(b);
  FormalCharacter out(a.rank());
  RationalVector sum(a.rank());
  for (const auto& [mu, m] : a.terms())
    for (const auto& [nu, n] : b.terms()) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = mu[i] + nu[i];
      out.add(sum, m * n);
    }
  return out;
}

// psi^k: every weight scaled by k.
inline FormalCharacter adams(const FormalCharacter& c, long k) {
  FormalCharacter out(c.rank());
  for (const auto& [mu, m] : c.terms()) {
    RationalVector v = mu;
    for (auto& x : v) x *= k;
    out.add(v, m);
  }
  return out;
}

// Newton's identity: q * L^q = sum_{k=1}^{q} (-1)^(k+1) psi^k(c) * L^(q-k).
inline FormalCharacter exterior_power(const FormalCharacter& c, long q) {
  if (q < 0 || q > c.total_mass())
    throw Error(ErrorCode::out_of_range, "exterior power " + std::to_string(q) + " outside [0, " +
                                             std::to_string(c.total_mass()) + "]");
  std::vector<FormalCharacter> lam{FormalCharacter::trivial(c.rank())};
  std::vector<FormalCharacter> psi;
  for (long n = 1; n <= q; ++n) {
    psi.push_back(adams(c, n));
    FormalCharacter acc(c.rank());
    for (long k = 1; k <= n; ++k) {
      FormalCharacter term = tensor(psi[static_cast<std::size_t>(k - 1)], lam[static_cast<std::size_t>(n - k)]);
      acc += (k % 2 == 1) ? term : -1 * term;
    }
    FormalCharacter next(c.rank());
    for (const auto& [mu, m] : acc.terms()) {
      if (m % n != 0) throw Error(ErrorCode::not_integral, "non-integral exterior power coefficient");
      next.add(mu, m / n);
    }
    lam.push_back(std::move(next));
  }
  return lam.back();
}

inline FormalCharacter contragredient(const FormalCharacter& c) {
  FormalCharacter out(c.rank());
  for (const auto& [mu, m] : c.terms()) {
    RationalVector v = mu;
    for (auto& x : v) x = -x;
    out.add(v, m);
  }
  return out;
}

// Image of c under a Weyl element (acting on weights).
inline FormalCharacter transform(const FormalCharacter& c, const WeylElement& w) {
  FormalCharacter out(c.rank());
  for (const auto& [mu, m] : c.terms()) out.add(w.matrix.apply(mu), m);
  return out;
}

// sum_mu mult(mu) e^(2 pi i <mu, x>)
inline CyclotomicNumber evaluate_at_torsion(const FormalCharacter& c, const TorsionElement& t) {
  if (t.rank() != c.rank()) throw Error(ErrorCode::rank_mismatch, "torsion element rank mismatch");
  std::vector<std::pair<Rational, std::int64_t>> phases;
  phases.reserve(c.support_size());
  BigInt n = 1;
  for (const auto& [mu, m] : c.terms()) {
    Rational p = frac(t.pairing(mu));
    n = lcm(n, p.get_den());
    phases.emplace_back(std::move(p), m);
  }
  if (!n.fits_ulong_p() || n > 1'000'000) throw Error(ErrorCode::out_of_range, "conductor too large: " + n.get_str());
  const std::uint64_t N = n.get_ui();
  RationalVector dense(N, Rational(0));
  for (const auto& [p, m] : phases) {
    Rational idx = p * Rational(n);
    dense[to_long(idx)] += Rational(static_cast<long>(m));
  }
  return CyclotomicNumber::from_dense(N, std::move(dense));
}

// ---- irreducible characters -------------------------------------------------------------

namespace detail {

inline std::string subsystem_key(const RootSubsystem& s) {
  std::string key = s.ambient().type().to_string() + "|";
  for (auto k : s.positive()) key += std::to_string(k) + ",";
  return key;
}

// Write-once memo: concurrent writers compute identical values, so last writer wins.
class CharacterMemo {
 public:
  static CharacterMemo& instance() {
    static CharacterMemo memo;
    return memo;
  }
  std::optional<FormalCharacter> find(const std::string& key, const RationalVector& hw) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find({key, hw});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::string& key, const RationalVector& hw, const FormalCharacter& c) {
    std::lock_guard<std::mutex> lock(mu_);
    table_[{key, hw}] = c;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<std::string, RationalVector>, FormalCharacter> table_;
};

}  // namespace detail

// Weight multiplicities of the irreducible module of highest weight hw for the
// (possibly non-semisimple) subgroup attached to `sub`, via Freudenthal's recursion.
// hw must be dominant and integral with respect to the simple coroots of `sub`; its
// component orthogonal to the subsystem is carried along unchanged.
inline FormalCharacter irreducible_character(const Weight& hw_in, const RootSubsystem& sub) {
  const RootSystem& rs = sub.ambient();
  rs.check_rank(hw_in);
  const Weight hw = rs.to_fundamental(hw_in);
  if (!sub.is_integral(hw))
    throw Error(ErrorCode::not_integral, "highest weight " + to_string(hw.coords) + " is not integral");
  if (!sub.is_dominant(hw))
    throw Error(ErrorCode::not_dominant, "highest weight " + to_string(hw.coords) + " is not dominant");

  const std::string key = detail::subsystem_key(sub);
  if (auto hit = detail::CharacterMemo::instance().find(key, hw.coords)) return *hit;

  const auto& simple = sub.simple();
  const std::size_t ns = simple.size();
  const Weight rho_s = sub.rho();
  const Rational top = rs.form((hw + rho_s).coords, (hw + rho_s).coords);

  std::map<RationalVector, std::int64_t> mult;
  mult[hw.coords] = 1;
  // level sets: weight -> coefficients of hw - weight in the simple roots of `sub`
  std::map<RationalVector, std::vector<long>> level{{hw.coords, std::vector<long>(ns, 0)}};

  auto is_weight = [&](const Weight& mu, std::vector<long> depth) {
    Weight cur = mu;
    for (;;) {
      std::size_t j = 0;
      for (; j < ns; ++j)
        if (sub.simple_pairing(cur, j) < 0) break;
      if (j == ns) break;
      Rational p = sub.simple_pairing(cur, j);
      cur = sub.reflect_simple(cur, j);
      depth[j] += to_long(p);
    }
    return std::all_of(depth.begin(), depth.end(), [](long d) { return d >= 0; });
  };

  while (!level.empty()) {
    std::map<RationalVector, std::vector<long>> next;
    for (const auto& [mu, depth] : level)
      for (std::size_t j = 0; j < ns; ++j) {
        RationalVector nu = mu;
        const auto& beta = rs.root(simple[j]).fundamental;
        for (std::size_t i = 0; i < nu.size(); ++i) nu[i] -= beta[i];
        if (next.count(nu)) continue;
        std::vector<long> d = depth;
        d[j] += 1;
        next.emplace(std::move(nu), std::move(d));
      }
    std::map<RationalVector, std::vector<long>> kept;
    for (auto& [nu, depth] : next) {
      if (!is_weight(Weight(nu), depth)) continue;
      Rational num = 0;
      for (std::size_t k : sub.positive()) {
        const auto& alpha = rs.root(k).fundamental;
        RationalVector up = nu;
        for (;;) {
          for (std::size_t i = 0; i < up.size(); ++i) up[i] += alpha[i];
          auto it = mult.find(up);
          if (it == mult.end()) break;
          num += Rational(static_cast<long>(it->second)) * rs.pair_with_root(up, k);
        }
      }
      RationalVector shifted = nu;
      for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += rho_s.coords[i];
      Rational den = top - rs.form(shifted, shifted);
      if (den == 0) throw Error(ErrorCode::division_by_zero, "degenerate Freudenthal denominator");
      Rational m = 2 * num / den;
      if (!is_integer(m) || m < 0) throw Error(ErrorCode::not_integral, "non-integral Freudenthal multiplicity");
      long mm = to_long(m);
      if (mm == 0) continue;
      mult[nu] = mm;
      kept.emplace(nu, std::move(depth));
    }
    level = std::move(kept);
  }

  FormalCharacter out(rs.rank());
  for (const auto& [mu, m] : mult) out.add(mu, m);
  detail::CharacterMemo::instance().store(key, hw.coords, out);
  return out;
}

inline FormalCharacter irreducible_character(const Weight& hw, const RootSystem& rs) {
  return irreducible_character(hw, RootSubsystem::full(rs));
}

// prod_{alpha>0} (lambda + rho, alpha) / (rho, alpha)
inline Rational weyl_dimension_rational(const Weight& lambda, const RootSubsystem& sub) {
  const RootSystem& rs = sub.ambient();
  const Weight l = rs.to_fundamental(lambda) + sub.rho();
  const Weight r = sub.rho();
  Rational num = 1, den = 1;
  for (std::size_t k : sub.positive()) {
    num *= rs.pair_with_root(l.coords, k);
    den *= rs.pair_with_root(r.coords, k);
  }
  return num / den;
}

// For a parameter that already includes rho: prod (lambda, alpha) / (rho, alpha).
inline Rational weyl_dimension_shifted(const Weight& lambda, const RootSubsystem& sub) {
  const RootSystem& rs = sub.ambient();
  const Weight l = rs.to_fundamental(lambda);
  const Weight r = sub.rho();
  Rational num = 1, den = 1;
  for (std::size_t k : sub.positive()) {
    num *= rs.pair_with_root(l.coords, k);
    den *= rs.pair_with_root(r.coords, k);
  }
  return num / den;
}

inline BigInt weyl_dimension(const Weight& lambda, const RootSubsystem& sub) {
  if (!sub.is_dominant(sub.ambient().to_fundamental(lambda)))
    throw Error(ErrorCode::not_dominant, "weyl_dimension needs a dominant weight");
  Rational d = weyl_dimension_rational(lambda, sub);
  if (!is_integer(d)) throw Error(ErrorCode::not_integral, "non-integral dimension " + d.get_str());
  return d.get_num();
}

inline BigInt weyl_dimension(const Weight& lambda, const RootSystem& rs) {
  return weyl_dimension(lambda, RootSubsystem::full(rs));
}

// sum_{s in W} det(s) e^{s(mu)}
inline FormalCharacter alternating_sum(const Weight& mu, const RootSubsystem& sub,
                                       std::uint64_t cap = default_weyl_cap) {
  FormalCharacter out(mu.rank());
  const Weight m = sub.ambient().to_fundamental(mu);
  for (const auto& w : sub.weyl_group(cap)) out.add(w.matrix.apply(m.coords), w.sign());
  return out;
}

// ---- branching to the compact subgroup -------------------------------------------------

struct VirtualKDecomposition {
  // K-dominant highest weight (fundamental coordinates) with signed multiplicity.
  std::vector<std::pair<Weight, std::int64_t>> terms;

  std::int64_t multiplicity_of(const Weight& hw) const {
    for (const auto& [w, m] : terms)
      if (w.coords == hw.coords) return m;
    return 0;
  }
};

inline void check_invariant(const FormalCharacter& c, const RootSubsystem& k) {
  for (std::size_t j = 0; j < k.simple().size(); ++j)
    for (const auto& [mu, m] : c.terms()) {
      Weight s = k.reflect_simple(Weight(mu), j);
      if (c.multiplicity(s.coords) != m)
        throw Error(ErrorCode::not_k_invariant,
                    "character is not invariant under the compact Weyl group at weight " + to_string(mu));
    }
}

// Iterated highest-weight extraction: the support weight maximizing (mu, rho_K) is
// K-dominant, and its multiplicity is the coefficient of that K-type.
inline VirtualKDecomposition branch_to_compact(const FormalCharacter& c, const RootSubsystem& k) {
  const RootSystem& rs = k.ambient();
  if (c.rank() != rs.rank()) throw Error(ErrorCode::rank_mismatch, "character rank mismatch");
  check_invariant(c, k);
  const RationalVector rho_k = k.rho().coords;
  FormalCharacter work = c;
  VirtualKDecomposition out;
  while (!work.empty()) {
    const RationalVector* best = nullptr;
    Rational best_h;
    for (const auto& [mu, m] : work.terms()) {
      Rational h = rs.form(mu, rho_k);
      if (!best || h > best_h || (h == best_h && mu > *best)) {
        best = &mu;
        best_h = h;
      }
    }
    Weight hw(*best);
    std::int64_t m = work.multiplicity(hw);
    if (!k.is_dominant(hw))
      throw Error(ErrorCode::non_dominant_extraction, "maximal weight " + to_string(hw.coords) + " is not K-dominant");
    work -= m * irreducible_character(hw, k);
    out.terms.emplace_back(std::move(hw), m);
  }
  auto height = [&](const Weight& w) {
    Weight s = rs.to_simple_root(w);
    Rational h = 0;
    for (const auto& x : s.coords) h += x;
    return h;
  };
  std::sort(out.terms.begin(), out.terms.end(), [&](const auto& a, const auto& b) {
    Rational ha = height(a.first), hb = height(b.first);
    if (ha != hb) return ha > hb;
    return a.first.coords > b.first.coords;
  });
  return out;
}

inline FormalCharacter expand(const VirtualKDecomposition& d, const RootSubsystem& k) {
  FormalCharacter out(k.ambient().rank());
  for (const auto& [hw, m] : d.terms) out += m * irreducible_character(hw, k);
  return out;
}

inline std::int64_t trivial_multiplicity(const FormalCharacter& c, const RootSubsystem& k) {
  return branch_to_compact(c, k).multiplicity_of(Weight::zero(c.rank()));
}

}  // namespace dirac
