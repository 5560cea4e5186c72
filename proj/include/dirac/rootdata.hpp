#pragma once

// Root data for finite products of simple Cartan types.
//
// Conventions (Bourbaki numbering):
//   cartan(i, j) = <alpha_i, alpha_j^vee>, so row i is alpha_i in fundamental-weight coordinates.
//   The invariant form is normalized per simple factor so that long roots have (alpha, alpha) = 2.
//   A weight in fundamental coordinates pairs with the simple coroot alpha_i^vee as its i-th entry.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dirac/error.hpp"
#include "dirac/rational.hpp"

namespace dirac {

struct SimpleFactor {
  char family = 'A';
  int rank = 1;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

inline bool admissible(const SimpleFactor& f) {
  switch (f.family) {
    case 'A': return f.rank >= 1;
    case 'B':
    case 'C': return f.rank >= 2;
    case 'D': return f.rank >= 4;
    case 'E': return f.rank >= 6 && f.rank <= 8;
    case 'F': return f.rank == 4;
    case 'G': return f.rank == 2;
    default: return false;
  }
}

struct CartanType {
  std::vector<SimpleFactor> factors;

  int total_rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank;
    return r;
  }

  // "A1xA1", "B2", "G2"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "x";
      out += factors[i].family;
      out += std::to_string(factors[i].rank);
    }
    return out;
  }

  static CartanType parse(std::string_view text) {
    CartanType t;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find_first_of("xX*", pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view piece = text.substr(pos, end - pos);
      if (piece.size() < 2)
        throw Error(ErrorCode::unknown_family, "malformed Cartan factor \"" + std::string(piece) + "\"");
      char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(piece[0])));
      if (std::string_view("ABCDEFG").find(fam) == std::string_view::npos)
        throw Error(ErrorCode::unknown_family, "unknown Cartan family '" + std::string(1, piece[0]) + "'");
      int rank = 0;
      for (char c : piece.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw Error(ErrorCode::unknown_family, "malformed Cartan factor \"" + std::string(piece) + "\"");
        rank = rank * 10 + (c - '0');
        if (rank > 1000) throw Error(ErrorCode::inadmissible_type, "rank too large in \"" + std::string(piece) + "\"");
      }
      t.factors.push_back({fam, rank});
      pos = end + 1;
    }
    if (t.factors.empty()) throw Error(ErrorCode::unknown_family, "empty Cartan type");
    return t;
  }

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

enum class Basis { simple_root, fundamental };

struct Weight {
  RationalVector coords;
  Basis basis = Basis::fundamental;

  Weight() = default;
  explicit Weight(RationalVector c, Basis b = Basis::fundamental) : coords(std::move(c)), basis(b) {}

  static Weight zero(std::size_t rank, Basis b = Basis::fundamental) {
    return Weight(RationalVector(rank, Rational(0)), b);
  }
  static Weight from_ints(const std::vector<long>& v, Basis b = Basis::fundamental) {
    RationalVector c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return Weight(std::move(c), b);
  }

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x == 0; });
  }

  friend bool operator==(const Weight&, const Weight&) = default;
};

inline Weight operator+(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
  return a;
}
inline Weight operator-(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] -= b.coords[i];
  return a;
}
inline Weight operator*(const Rational& s, Weight a) {
  for (auto& x : a.coords) x *= s;
  return a;
}
inline Weight operator-(Weight a) {
  for (auto& x : a.coords) x = -x;
  return a;
}

// Square integer matrix, row-major.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> a;

  static IntMatrix identity(std::size_t n) {
    IntMatrix m{n, std::vector<std::int64_t>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) m.a[i * n + i] = 1;
    return m;
  }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix r{x.n, std::vector<std::int64_t>(x.n * x.n, 0)};
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t k = 0; k < x.n; ++k) {
        std::int64_t v = x(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < x.n; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }
  RationalVector apply(const RationalVector& v) const {
    RationalVector out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a[i * n + j] != 0) out[i] += Rational(static_cast<long>(a[i * n + j])) * v[j];
    return out;
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator<(const IntMatrix& x, const IntMatrix& y) { return x.a < y.a; }
};

// An element of a Weyl group: a reduced word in the generating simple reflections
// (indices into the simple roots of the system it was produced from) and its action
// on fundamental-weight coordinates.
struct WeylElement {
  std::vector<int> word;
  IntMatrix matrix;

  std::size_t length() const { return word.size(); }
  int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
  Weight apply(const Weight& w) const { return Weight(matrix.apply(w.coords), Basis::fundamental); }
};

struct Root {
  std::vector<int> simple;       // coordinates in simple roots
  std::vector<int> fundamental;  // coordinates in fundamental weights
  std::vector<int> coroot;       // alpha^vee in simple-coroot coordinates
  int height = 0;
  Rational norm2;                // (alpha, alpha)
  int factor = 0;
};

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix_of(const SimpleFactor& f) {
  const int n = f.rank;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  auto link = [&](int i, int j, int aij = -1, int aji = -1) {
    m[i][j] = aij;
    m[j][i] = aji;
  };
  switch (f.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2, -2, -1);
      link(2, 3);
      break;
    case 'G':
      link(0, 1, -1, -3);
      break;
  }
  return m;
}

inline std::vector<int> degrees_of(const SimpleFactor& f) {
  const int n = f.rank;
  std::vector<int> d;
  switch (f.family) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F': d = {2, 6, 8, 12}; break;
    case 'G': d = {2, 6}; break;
  }
  return d;
}

inline std::vector<RationalVector> invert(const std::vector<RationalVector>& m) {
  const std::size_t n = m.size();
  std::vector<RationalVector> a = m;
  std::vector<RationalVector> inv(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::division_by_zero, "singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace detail

class RootSystem {
 public:
  explicit RootSystem(CartanType type) : type_(std::move(type)) {
    for (const auto& f : type_.factors)
      if (!admissible(f))
        throw Error(ErrorCode::inadmissible_type,
                    std::string("inadmissible Cartan factor ") + f.family + std::to_string(f.rank));
    rank_ = static_cast<std::size_t>(type_.total_rank());
    build_cartan();
    build_roots();
  }

  const CartanType& type() const { return type_; }
  std::size_t rank() const { return rank_; }
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  // (alpha_i, alpha_i) / 2
  const Rational& half_norm(std::size_t i) const { return half_norm_[i]; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& root(std::size_t k) const { return roots_[k]; }
  std::size_t factor_of(std::size_t i) const { return factor_of_[i]; }
  std::size_t num_factors() const { return type_.factors.size(); }
  const std::vector<RationalVector>& inverse_cartan() const { return inverse_cartan_; }

  std::vector<int> degrees() const {
    std::vector<int> d;
    for (const auto& f : type_.factors) {
      auto fd = detail::degrees_of(f);
      d.insert(d.end(), fd.begin(), fd.end());
    }
    return d;
  }

  Weight root_weight(std::size_t k) const {
    RationalVector c;
    for (int x : roots_[k].fundamental) c.emplace_back(x);
    return Weight(std::move(c), Basis::fundamental);
  }

  std::optional<std::size_t> find_root(const std::vector<int>& simple_coords) const {
    auto it = index_.find(simple_coords);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Weight to_fundamental(const Weight& w) const {
    check_rank(w);
    if (w.basis == Basis::fundamental) return w;
    RationalVector out(rank_, Rational(0));
    for (std::size_t k = 0; k < rank_; ++k) {
      if (w.coords[k] == 0) continue;
      for (std::size_t i = 0; i < rank_; ++i)
        if (cartan_[k][i] != 0) out[i] += w.coords[k] * cartan_[k][i];
    }
    return Weight(std::move(out), Basis::fundamental);
  }

  Weight to_simple_root(const Weight& w) const {
    check_rank(w);
    if (w.basis == Basis::simple_root) return w;
    RationalVector out(rank_, Rational(0));
    for (std::size_t k = 0; k < rank_; ++k) {
      if (w.coords[k] == 0) continue;
      for (std::size_t i = 0; i < rank_; ++i) out[i] += w.coords[k] * inverse_cartan_[k][i];
    }
    return Weight(std::move(out), Basis::simple_root);
  }

  // Form on fundamental coordinates.
  Rational form(const RationalVector& a, const RationalVector& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (a[i] == 0) continue;
      Rational row = 0;
      for (std::size_t j = 0; j < rank_; ++j)
        if (b[j] != 0) row += gram_[i][j] * b[j];
      s += a[i] * row;
    }
    return s;
  }

  // (w, alpha) for a positive root, w in fundamental coordinates.
  Rational pair_with_root(const RationalVector& w, std::size_t k) const {
    Rational s = 0;
    const auto& c = roots_[k].simple;
    for (std::size_t i = 0; i < rank_; ++i)
      if (c[i] != 0 && w[i] != 0) s += w[i] * half_norm_[i] * c[i];
    return s;
  }

  // <w, alpha^vee> for a positive root.
  Rational pair_with_coroot(const RationalVector& w, std::size_t k) const {
    Rational s = 0;
    const auto& c = roots_[k].coroot;
    for (std::size_t i = 0; i < rank_; ++i)
      if (c[i] != 0 && w[i] != 0) s += w[i] * c[i];
    return s;
  }

  void check_rank(const Weight& w) const {
    if (w.rank() != rank_)
      throw Error(ErrorCode::rank_mismatch, "weight of rank " + std::to_string(w.rank()) +
                                                " used with a rank " + std::to_string(rank_) + " system");
  }

 private:
  void build_cartan() {
    cartan_.assign(rank_, std::vector<int>(rank_, 0));
    half_norm_.assign(rank_, Rational(0));
    symmetrizer_.assign(rank_, 0);
    factor_of_.assign(rank_, 0);
    std::size_t off = 0;
    for (std::size_t f = 0; f < type_.factors.size(); ++f) {
      const auto& fac = type_.factors[f];
      auto m = detail::cartan_matrix_of(fac);
      const std::size_t n = static_cast<std::size_t>(fac.rank);
      for (std::size_t i = 0; i < n; ++i) {
        factor_of_[off + i] = f;
        for (std::size_t j = 0; j < n; ++j) cartan_[off + i][off + j] = m[i][j];
      }
      // a_ij d_j = a_ji d_i along the (connected) Dynkin diagram
      std::vector<Rational> d(n, Rational(0));
      d[0] = 1;
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
          if (d[i] == 0) continue;
          for (std::size_t j = 0; j < n; ++j)
            if (i != j && m[i][j] != 0 && d[j] == 0) {
              d[j] = d[i] * m[j][i] / m[i][j];
              changed = true;
            }
        }
      }
      Rational mx = *std::max_element(d.begin(), d.end());
      BigInt den = 1;
      for (auto& x : d) {
        x /= mx;
        den = lcm(den, x.get_den());
      }
      for (std::size_t i = 0; i < n; ++i) {
        half_norm_[off + i] = d[i];
        symmetrizer_[off + i] = static_cast<int>(to_long(d[i] * Rational(den)));
      }
      off += n;
    }
    std::vector<RationalVector> a(rank_, RationalVector(rank_));
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) a[i][j] = cartan_[i][j];
    inverse_cartan_ = detail::invert(a);
    gram_.assign(rank_, RationalVector(rank_));
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) gram_[i][j] = inverse_cartan_[i][j] * half_norm_[j];
  }

  void build_roots() {
    std::vector<std::vector<int>> found;
    std::set<std::vector<int>> known;
    for (std::size_t i = 0; i < rank_; ++i) {
      std::vector<int> e(rank_, 0);
      e[i] = 1;
      found.push_back(e);
      known.insert(e);
    }
    std::size_t frontier_begin = 0;
    while (frontier_begin < found.size()) {
      std::size_t frontier_end = found.size();
      for (std::size_t r = frontier_begin; r < frontier_end; ++r) {
        for (std::size_t i = 0; i < rank_; ++i) {
          const std::vector<int> beta = found[r];
          int q = 0;
          for (std::vector<int> down = beta;;) {
            down[i] -= 1;
            if (!known.count(down)) break;
            ++q;
          }
          int pairing = 0;
          for (std::size_t k = 0; k < rank_; ++k) pairing += beta[k] * cartan_[k][i];
          if (q - pairing > 0) {
            std::vector<int> up = beta;
            up[i] += 1;
            if (known.insert(up).second) found.push_back(up);
          }
        }
      }
      frontier_begin = frontier_end;
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
      int hx = std::accumulate(x.begin(), x.end(), 0);
      int hy = std::accumulate(y.begin(), y.end(), 0);
      if (hx != hy) return hx < hy;
      return x > y;
    });
    for (const auto& c : found) {
      Root r;
      r.simple = c;
      r.height = std::accumulate(c.begin(), c.end(), 0);
      r.fundamental.assign(rank_, 0);
      for (std::size_t k = 0; k < rank_; ++k)
        for (std::size_t i = 0; i < rank_; ++i) r.fundamental[i] += c[k] * cartan_[k][i];
      r.norm2 = 0;
      for (std::size_t k = 0; k < rank_; ++k) r.norm2 += Rational(r.fundamental[k] * c[k]) * half_norm_[k];
      r.coroot.assign(rank_, 0);
      for (std::size_t k = 0; k < rank_; ++k) {
        Rational v = Rational(2 * c[k]) * half_norm_[k] / r.norm2;
        r.coroot[k] = static_cast<int>(to_long(v));
      }
      for (std::size_t k = 0; k < rank_; ++k)
        if (c[k] != 0) {
          r.factor = static_cast<int>(factor_of_[k]);
          break;
        }
      index_[c] = roots_.size();
      roots_.push_back(std::move(r));
    }
  }

  CartanType type_;
  std::size_t rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symmetrizer_;
  std::vector<Rational> half_norm_;
  std::vector<std::size_t> factor_of_;
  std::vector<RationalVector> inverse_cartan_;
  std::vector<RationalVector> gram_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, std::size_t> index_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr build_root_system(const CartanType& type) { return std::make_shared<const RootSystem>(type); }

inline RootSystemPtr build_root_system(std::string_view type) { return build_root_system(CartanType::parse(type)); }

class WeylCapExceeded : public Error {
 public:
  WeylCapExceeded(BigInt order, std::uint64_t cap)
      : Error(ErrorCode::weyl_cap_exceeded,
              "Weyl group of order " + order.get_str() + " exceeds enumeration cap " + std::to_string(cap)),
        order_(std::move(order)) {}
  const BigInt& order() const { return order_; }

 private:
  BigInt order_;
};

struct DominantConjugate {
  Weight weight;
  WeylElement element;
  int sign = 1;
};

inline constexpr std::uint64_t default_weyl_cap = 1'000'000;

// A closed subsystem of an ambient root system, positivity inherited from the ambient
// ordering. The full system is the subsystem containing every positive root. Holds a
// non-owning pointer: the ambient RootSystem must outlive it.
class RootSubsystem {
 public:
  RootSubsystem() = default;

  static RootSubsystem full(const RootSystem& rs) {
    RootSubsystem s;
    s.rs_ = &rs;
    const std::size_t n = rs.positive_roots().size();
    s.positive_.resize(n);
    std::iota(s.positive_.begin(), s.positive_.end(), std::size_t{0});
    s.member_.assign(n, true);
    s.heights_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      s.heights_[k] = rs.root(k).height;
      if (rs.root(k).height == 1) s.simple_.push_back(k);
    }
    return s;
  }

  // `positive` must be closed under addition within the ambient system (checked).
  RootSubsystem(const RootSystem& rs, std::vector<std::size_t> positive) : rs_(&rs), positive_(std::move(positive)) {
    std::sort(positive_.begin(), positive_.end());
    positive_.erase(std::unique(positive_.begin(), positive_.end()), positive_.end());
    member_.assign(rs.positive_roots().size(), false);
    for (auto k : positive_) member_[k] = true;
    for (std::size_t a : positive_)
      for (std::size_t b : positive_) {
        auto s = sum_index(a, b);
        if (s && !member_[*s])
          throw Error(ErrorCode::grading_violation,
                      "root subset is not closed: " + root_label(a) + " + " + root_label(b) + " = " + root_label(*s) +
                          " is missing");
      }
    for (std::size_t k : positive_) {
      bool decomposable = false;
      for (std::size_t a : positive_) {
        if (a == k) continue;
        auto diff = difference_index(k, a);
        if (diff && member_[*diff]) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) simple_.push_back(k);
    }
    heights_.assign(rs.positive_roots().size(), 0);
    for (std::size_t k : positive_) {  // positive_ is sorted by ambient height
      if (std::find(simple_.begin(), simple_.end(), k) != simple_.end()) {
        heights_[k] = 1;
        continue;
      }
      for (std::size_t s : simple_) {
        auto diff = difference_index(k, s);
        if (diff && member_[*diff]) {
          heights_[k] = heights_[*diff] + 1;
          break;
        }
      }
    }
  }

  const RootSystem& ambient() const { return *rs_; }
  const std::vector<std::size_t>& positive() const { return positive_; }
  const std::vector<std::size_t>& simple() const { return simple_; }
  std::size_t size() const { return positive_.size(); }
  bool contains(std::size_t k) const { return member_[k]; }
  int height(std::size_t k) const { return heights_[k]; }

  Weight rho() const {
    RationalVector c(rs_->rank(), Rational(0));
    for (auto k : positive_)
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += rs_->root(k).fundamental[i];
    for (auto& x : c) x /= 2;
    return Weight(std::move(c));
  }

  Rational simple_pairing(const Weight& w, std::size_t j) const { return rs_->pair_with_coroot(w.coords, simple_[j]); }

  bool is_dominant(const Weight& w) const {
    for (std::size_t j = 0; j < simple_.size(); ++j)
      if (simple_pairing(w, j) < 0) return false;
    return true;
  }

  bool is_integral(const Weight& w) const {
    for (std::size_t j = 0; j < simple_.size(); ++j)
      if (!is_integer(simple_pairing(w, j))) return false;
    return true;
  }

  bool is_regular(const Weight& w) const {
    for (auto k : positive_)
      if (rs_->pair_with_root(w.coords, k) == 0) return false;
    return true;
  }

  Weight reflect_simple(const Weight& w, std::size_t j) const {
    Rational p = simple_pairing(w, j);
    Weight out = w;
    const auto& beta = rs_->root(simple_[j]).fundamental;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= p * beta[i];
    return out;
  }

  IntMatrix simple_reflection_matrix(std::size_t j) const {
    const auto& r = rs_->root(simple_[j]);
    IntMatrix m = IntMatrix::identity(rs_->rank());
    for (std::size_t k = 0; k < m.n; ++k)
      for (std::size_t i = 0; i < m.n; ++i) m(k, i) -= static_cast<std::int64_t>(r.fundamental[k]) * r.coroot[i];
    return m;
  }

  WeylElement element_from_word(const std::vector<int>& word) const {
    WeylElement e{word, IntMatrix::identity(rs_->rank())};
    for (int j : word) e.matrix = e.matrix * simple_reflection_matrix(static_cast<std::size_t>(j));
    return e;
  }

  // Repeated simple reflections until dominant; the returned element maps w to the result.
  DominantConjugate dominant_conjugate(const Weight& w) const {
    rs_->check_rank(w);
    Weight cur = rs_->to_fundamental(w);
    std::vector<int> applied;
    for (;;) {
      std::size_t j = 0;
      for (; j < simple_.size(); ++j)
        if (simple_pairing(cur, j) < 0) break;
      if (j == simple_.size()) break;
      cur = reflect_simple(cur, j);
      applied.push_back(static_cast<int>(j));
    }
    std::vector<int> word(applied.rbegin(), applied.rend());
    WeylElement e = element_from_word(word);
    int sign = e.sign();
    return {std::move(cur), std::move(e), sign};
  }

  // Order via the degrees read off from the root height distribution.
  BigInt weyl_order() const {
    std::map<int, int> count;
    int max_h = 0;
    for (auto k : positive_) {
      ++count[heights_[k]];
      max_h = std::max(max_h, heights_[k]);
    }
    BigInt order = 1;
    for (int h = 1; h <= max_h; ++h) {
      int with_exponent_h = count[h] - (count.count(h + 1) ? count[h + 1] : 0);
      for (int i = 0; i < with_exponent_h; ++i) order *= (h + 1);
    }
    return order;
  }

  std::vector<WeylElement> weyl_group(std::uint64_t cap = default_weyl_cap) const {
    BigInt order = weyl_order();
    if (order > BigInt(std::to_string(cap))) throw WeylCapExceeded(order, cap);
    std::vector<WeylElement> out;
    std::set<std::vector<std::int64_t>> seen;
    std::vector<IntMatrix> gens;
    for (std::size_t j = 0; j < simple_.size(); ++j) gens.push_back(simple_reflection_matrix(j));
    out.push_back({{}, IntMatrix::identity(rs_->rank())});
    seen.insert(out.back().matrix.a);
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        IntMatrix m = gens[j] * out[idx].matrix;
        if (!seen.insert(m.a).second) continue;
        std::vector<int> word;
        word.reserve(out[idx].word.size() + 1);
        word.push_back(static_cast<int>(j));
        word.insert(word.end(), out[idx].word.begin(), out[idx].word.end());
        out.push_back({std::move(word), std::move(m)});
      }
    }
    return out;
  }

  std::string root_label(std::size_t k) const {
    std::ostringstream os;
    os << "[";
    const auto& c = rs_->root(k).simple;
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
  }

 private:
  std::optional<std::size_t> sum_index(std::size_t a, std::size_t b) const {
    std::vector<int> c = rs_->root(a).simple;
    const auto& d = rs_->root(b).simple;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
    return rs_->find_root(c);
  }
  std::optional<std::size_t> difference_index(std::size_t a, std::size_t b) const {
    std::vector<int> c = rs_->root(a).simple;
    const auto& d = rs_->root(b).simple;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= d[i];
    return rs_->find_root(c);
  }

  const RootSystem* rs_ = nullptr;
  std::vector<std::size_t> positive_;
  std::vector<std::size_t> simple_;
  std::vector<bool> member_;
  std::vector<int> heights_;
};

// ---- Free functions on the full system ------------------------------------------------

inline Rational inner_product(const Weight& a, const Weight& b, const RootSystem& rs) {
  rs.check_rank(a);
  rs.check_rank(b);
  return rs.form(rs.to_fundamental(a).coords, rs.to_fundamental(b).coords);
}

inline Weight rho(const RootSystem& rs) { return RootSubsystem::full(rs).rho(); }

// s_root(w) = w - <w, root^vee> root. `root` must lie in the root system (either sign).
inline Weight reflect(const Weight& w, const Weight& root, const RootSystem& rs) {
  Weight r = rs.to_simple_root(root);
  std::vector<int> c;
  for (const auto& x : r.coords) {
    if (!is_integer(x)) throw Error(ErrorCode::not_a_root, "not a root: " + to_string(root.coords));
    c.push_back(static_cast<int>(to_long(x)));
  }
  bool negative = !c.empty() && std::any_of(c.begin(), c.end(), [](int x) { return x < 0; });
  if (negative)
    for (auto& x : c) x = -x;
  auto k = rs.find_root(c);
  if (!k) throw Error(ErrorCode::not_a_root, "not a root: " + to_string(root.coords));
  Weight wf = rs.to_fundamental(w);
  Rational p = rs.pair_with_coroot(wf.coords, *k);
  const auto& beta = rs.root(*k).fundamental;
  for (std::size_t i = 0; i < wf.coords.size(); ++i) wf.coords[i] -= p * beta[i];
  return wf;
}

// Product of the fundamental degrees of each simple factor.
inline BigInt weyl_order(const RootSystem& rs) {
  BigInt order = 1;
  for (int d : rs.degrees()) order *= d;
  return order;
}

inline std::vector<WeylElement> weyl_group(const RootSystem& rs, std::uint64_t cap = default_weyl_cap) {
  BigInt order = weyl_order(rs);
  if (order > BigInt(std::to_string(cap))) throw WeylCapExceeded(order, cap);
  return RootSubsystem::full(rs).weyl_group(cap);
}

inline DominantConjugate dominant_conjugate(const Weight& w, const RootSystem& rs) {
  return RootSubsystem::full(rs).dominant_conjugate(w);
}

inline bool is_regular(const Weight& w, const RootSystem& rs) {
  rs.check_rank(w);
  Weight f = rs.to_fundamental(w);
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
    if (rs.pair_with_root(f.coords, k) == 0) return false;
  return true;
}

inline bool is_dominant(const Weight& w, const RootSystem& rs) {
  Weight f = rs.to_fundamental(w);
  return std::all_of(f.coords.begin(), f.coords.end(), [](const Rational& x) { return x >= 0; });
}

}  // namespace dirac
