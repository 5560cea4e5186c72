#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n), zeta_n = exp(2 pi i / n).
//
// Elements are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) reduced modulo the
// n-th cyclotomic polynomial. Binary operations lift both operands to the lcm of their
// conductors; nothing shrinks the conductor unless normalized() is called.

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "dirac/error.hpp"
#include "dirac/rational.hpp"

namespace dirac {

namespace detail {

inline std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}
inline std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return a / gcd_u(a, b) * b; }

// Coefficients of Phi_n, lowest degree first.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& q = cyclotomic_polynomial(d);
    const std::size_t dq = q.size() - 1;
    std::vector<std::int64_t> quot(p.size() - dq, 0);
    for (std::size_t k = p.size() - 1; k + 1 > dq; --k) {
      std::int64_t c = p[k];  // q is monic
      if (c == 0) continue;
      quot[k - dq] = c;
      for (std::size_t j = 0; j <= dq; ++j) p[k - dq + j] -= c * q[j];
    }
    p = std::move(quot);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

inline std::uint64_t euler_phi(std::uint64_t n) { return cyclotomic_polynomial(n).size() - 1; }

// Reduce a dense polynomial (any length) modulo x^n - 1 and then Phi_n.
inline RationalVector reduce_dense(std::uint64_t n, RationalVector poly) {
  if (poly.size() > n) {
    for (std::size_t k = n; k < poly.size(); ++k)
      if (poly[k] != 0) poly[k % n] += poly[k];
    poly.resize(n);
  }
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  if (poly.size() < deg) poly.resize(deg, Rational(0));
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (poly[k] == 0) continue;
    Rational c = poly[k];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j] != 0) poly[k - deg + j] -= c * phi[j];
  }
  poly.resize(deg);
  return poly;
}

}  // namespace detail

class CyclotomicNumber {
 public:
  CyclotomicNumber() : n_(1), c_{Rational(0)} {}
  CyclotomicNumber(const Rational& q) : n_(1), c_{q} {}  // NOLINT: implicit by design of the field embedding
  CyclotomicNumber(long q) : n_(1), c_{Rational(q)} {}   // NOLINT

  // e^(2 pi i k / n)
  static CyclotomicNumber root_of_unity(long k, std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::bad_argument, "root of unity of order 0");
    long m = static_cast<long>(n);
    long e = ((k % m) + m) % m;
    RationalVector dense(n, Rational(0));
    dense[static_cast<std::size_t>(e)] = 1;
    return from_dense(n, std::move(dense));
  }

  // sum_j dense[j] * zeta_n^j for a vector of any length.
  static CyclotomicNumber from_dense(std::uint64_t n, RationalVector dense) {
    CyclotomicNumber z;
    z.n_ = n;
    z.c_ = detail::reduce_dense(n, std::move(dense));
    return z;
  }

  // Exact coefficients at the given conductor, which must already be canonical.
  static CyclotomicNumber from_coefficients(std::uint64_t n, RationalVector coeffs) {
    if (coeffs.size() != detail::euler_phi(n))
      throw Error(ErrorCode::bad_argument, "coefficient vector length must equal phi(n)");
    CyclotomicNumber z;
    z.n_ = n;
    z.c_ = std::move(coeffs);
    return z;
  }

  std::uint64_t conductor() const { return n_; }
  const RationalVector& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  // Lift into Q(zeta_m); requires n | m.
  CyclotomicNumber embed(std::uint64_t m) const {
    if (m % n_ != 0) throw Error(ErrorCode::bad_argument, "conductor does not divide target");
    if (m == n_) return *this;
    const std::uint64_t step = m / n_;
    RationalVector dense(m, Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j)
      if (c_[j] != 0) dense[j * step] = c_[j];
    return from_dense(m, std::move(dense));
  }

  // zeta_n -> zeta_n^k, gcd(k, n) = 1.
  CyclotomicNumber galois(long k) const {
    long m = static_cast<long>(n_);
    long kk = ((k % m) + m) % m;
    if (detail::gcd_u(static_cast<std::uint64_t>(kk), n_) != 1 && n_ != 1)
      throw Error(ErrorCode::bad_argument, "Galois exponent must be a unit mod the conductor");
    RationalVector dense(n_, Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j)
      if (c_[j] != 0) dense[(j * static_cast<std::uint64_t>(kk)) % n_] += c_[j];
    return from_dense(n_, std::move(dense));
  }

  CyclotomicNumber inverse() const {
    if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero in Q(zeta_" + std::to_string(n_) + ")");
    const std::size_t d = c_.size();
    // columns: this * zeta^j
    std::vector<RationalVector> a(d, RationalVector(d + 1, Rational(0)));
    for (std::size_t j = 0; j < d; ++j) {
      RationalVector dense(d + j, Rational(0));
      for (std::size_t i = 0; i < d; ++i) dense[i + j] = c_[i];
      RationalVector col = detail::reduce_dense(n_, std::move(dense));
      for (std::size_t i = 0; i < d; ++i) a[i][j] = col[i];
    }
    a[0][d] = 1;
    for (std::size_t col = 0; col < d; ++col) {
      std::size_t piv = col;
      while (piv < d && a[piv][col] == 0) ++piv;
      std::swap(a[piv], a[col]);
      Rational p = a[col][col];
      for (std::size_t j = col; j <= d; ++j) a[col][j] /= p;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational f = a[r][col];
        for (std::size_t j = col; j <= d; ++j) a[r][j] -= f * a[col][j];
      }
    }
    RationalVector sol(d);
    for (std::size_t i = 0; i < d; ++i) sol[i] = a[i][d];
    return from_coefficients(n_, std::move(sol));
  }

  // Same value at the smallest conductor that contains it.
  CyclotomicNumber normalized() const {
    for (std::uint64_t d = 1; d < n_; ++d) {
      if (n_ % d) continue;
      if (auto z = try_descend(d)) return *z;
    }
    return *this;
  }

  std::pair<double, double> to_complex_approx() const {
    long double re = 0, im = 0;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) /
                          static_cast<long double>(n_);
      long double v = c_[j].get_d();
      re += v * std::cos(angle);
      im += v * std::sin(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    std::uint64_t m = detail::lcm_u(a.n_, b.n_);
    CyclotomicNumber x = a.embed(m), y = b.embed(m);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend CyclotomicNumber operator-(const CyclotomicNumber& a) {
    CyclotomicNumber x = a;
    for (auto& v : x.c_) v = -v;
    return x;
  }
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    std::uint64_t m = detail::lcm_u(a.n_, b.n_);
    CyclotomicNumber x = a.embed(m), y = b.embed(m);
    if (x.c_.size() == 1 || y.c_.size() == 1) {
      const Rational s = x.c_.size() == 1 ? x.c_[0] : y.c_[0];
      CyclotomicNumber out = x.c_.size() == 1 ? y : x;
      for (auto& v : out.c_) v *= s;
      return out;
    }
    RationalVector prod(x.c_.size() + y.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j)
        if (y.c_[j] != 0) prod[i + j] += x.c_[i] * y.c_[j];
    }
    return from_dense(m, std::move(prod));
  }
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b.inverse(); }

  CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& b) { return *this = *this - b; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    std::uint64_t m = detail::lcm_u(a.n_, b.n_);
    return a.embed(m).c_ == b.embed(m).c_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z) {
    bool first = true;
    for (std::size_t j = 0; j < z.c_.size(); ++j) {
      if (z.c_[j] == 0) continue;
      if (!first) os << (z.c_[j] > 0 ? " + " : " - ");
      else if (z.c_[j] < 0) os << "-";
      Rational mag = abs(z.c_[j]);
      if (j == 0) os << mag;
      else {
        if (mag != 1) os << mag << "*";
        os << "z" << z.n_;
        if (j > 1) os << "^" << j;
      }
      first = false;
    }
    if (first) os << "0";
    return os;
  }

 private:
  std::optional<CyclotomicNumber> try_descend(std::uint64_t d) const {
    const std::size_t rows = c_.size();
    const std::size_t cols = detail::euler_phi(d);
    // [E | c] where column j of E is zeta_d^j embedded in Q(zeta_n)
    std::vector<RationalVector> a(rows, RationalVector(cols + 1, Rational(0)));
    for (std::size_t j = 0; j < cols; ++j) {
      RationalVector dense(d, Rational(0));
      dense[j] = 1;
      auto col = from_dense(d, std::move(dense)).embed(n_);
      for (std::size_t i = 0; i < rows; ++i) a[i][j] = col.c_[i];
    }
    for (std::size_t i = 0; i < rows; ++i) a[i][cols] = c_[i];
    std::size_t r = 0;
    std::vector<std::size_t> pivcol;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
      std::size_t piv = r;
      while (piv < rows && a[piv][col] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[r]);
      Rational p = a[r][col];
      for (std::size_t j = col; j <= cols; ++j) a[r][j] /= p;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || a[i][col] == 0) continue;
        Rational f = a[i][col];
        for (std::size_t j = col; j <= cols; ++j) a[i][j] -= f * a[r][j];
      }
      pivcol.push_back(col);
      ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][cols] != 0) return std::nullopt;
    RationalVector sol(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) sol[pivcol[i]] = a[i][cols];
    return from_coefficients(d, std::move(sol));
  }

  std::uint64_t n_;
  RationalVector c_;
};

inline CyclotomicNumber root_of_unity(long k, std::uint64_t n) { return CyclotomicNumber::root_of_unity(k, n); }

// e^(2 pi i q) for rational q.
inline CyclotomicNumber exp_2pi_i(const Rational& q) {
  Rational f = frac(q);
  return CyclotomicNumber::root_of_unity(f.get_num().get_si(), f.get_den().get_ui());
}

}  // namespace dirac
