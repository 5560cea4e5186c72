#pragma once

#include <vector>

#include "dirac/rational.hpp"
#include "dirac/rootdata.hpp"

namespace dirac {

// Finite-order element g = exp(2 pi i x) of the compact Cartan, x in simple-coroot
// coordinates, so <mu, x> is the dot product with fundamental-weight coordinates of mu.
// x is kept reduced into [0, 1) coordinatewise.
class TorsionElement {
 public:
  TorsionElement() = default;
  explicit TorsionElement(RationalVector x) : x_(std::move(x)) {
    for (auto& v : x_) v = frac(v);
  }

  static TorsionElement identity(std::size_t rank) { return TorsionElement(RationalVector(rank, Rational(0))); }

  const RationalVector& coords() const { return x_; }
  std::size_t rank() const { return x_.size(); }

  // Least common denominator of <mu, x> over the weight lattice.
  BigInt order() const { return common_denominator(x_); }

  Rational pairing(const RationalVector& mu_fundamental) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x_.size(); ++i)
      if (mu_fundamental[i] != 0 && x_[i] != 0) s += mu_fundamental[i] * x_[i];
    return s;
  }

  Rational pairing_root(const RootSystem& rs, std::size_t k) const {
    Rational s = 0;
    const auto& f = rs.root(k).fundamental;
    for (std::size_t i = 0; i < x_.size(); ++i)
      if (f[i] != 0 && x_[i] != 0) s += x_[i] * f[i];
    return s;
  }

  friend bool operator==(const TorsionElement&, const TorsionElement&) = default;

 private:
  RationalVector x_;
};

// Every torsion element of order at most max_order, grouped by order, lexicographic within.
inline std::vector<TorsionElement> enumerate_torsion(std::size_t rank, long max_order) {
  std::vector<TorsionElement> out;
  for (long n = 1; n <= max_order; ++n) {
    std::vector<long> k(rank, 0);
    for (;;) {
      RationalVector x;
      x.reserve(rank);
      for (long v : k) x.push_back(make_rational(v, n));
      TorsionElement t(std::move(x));
      if (t.order() == n) out.push_back(std::move(t));
      std::size_t i = 0;
      while (i < rank && ++k[i] == n) k[i++] = 0;
      if (i == rank) break;
    }
  }
  return out;
}

// w . t, acting on x through the contragredient of the weight action.
inline TorsionElement conjugate(const TorsionElement& t, const WeylElement& w, const RootSubsystem& sub) {
  std::vector<int> inverse_word(w.word.rbegin(), w.word.rend());
  IntMatrix inv = sub.element_from_word(inverse_word).matrix;
  RationalVector y(t.rank(), Rational(0));
  for (std::size_t j = 0; j < inv.n; ++j)
    for (std::size_t i = 0; i < inv.n; ++i)
      if (inv(i, j) != 0) y[j] += Rational(static_cast<long>(inv(i, j))) * t.coords()[i];
  return TorsionElement(std::move(y));
}

}  // namespace dirac
