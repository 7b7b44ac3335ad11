#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chevhopf/errors.hpp"
#include "chevhopf/linalg.hpp"
#include "chevhopf/rational.hpp"

namespace chevhopf {

inline constexpr int kMaxConductor = 256;

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Precomputed data for Q(zeta_N) = Q[x]/Phi_N(x).
struct CyclotomicTable {
  int conductor = 1;
  int degree = 1;
  std::vector<std::int64_t> minpoly;               // Phi_N, ascending, monic
  std::vector<std::vector<std::int64_t>> powers;   // x^k mod Phi_N
};

namespace detail {

using IntPoly = std::vector<std::int64_t>;

// Exact division by a monic integer polynomial.
inline IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

class CyclotomicRegistry {
 public:
  static CyclotomicRegistry& instance() {
    static CyclotomicRegistry r;
    return r;
  }

  const CyclotomicTable& get(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "conductor must be positive");
    if (n > kMaxConductor)
      throw Error(ErrorCode::ConductorTooLarge,
                  "conductor " + std::to_string(n) + " exceeds " + std::to_string(kMaxConductor));
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto it = tables_.find(n);
    if (it != tables_.end()) return *it->second;
    auto table = std::make_unique<CyclotomicTable>();
    table->conductor = n;
    table->minpoly = cyclotomic_poly(n);
    table->degree = static_cast<int>(table->minpoly.size()) - 1;
    const int d = table->degree;
    const int count = std::max(n, 2 * d - 1);
    std::vector<std::int64_t> cur(d, 0);
    cur[0] = 1;
    for (int k = 0; k < count; ++k) {
      table->powers.push_back(cur);
      // multiply by x and reduce
      std::int64_t carry = cur[d - 1];
      for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (carry != 0)
        for (int i = 0; i < d; ++i) cur[i] -= carry * table->minpoly[i];
    }
    auto& ref = *table;
    tables_.emplace(n, std::move(table));
    return ref;
  }

 private:
  IntPoly cyclotomic_poly(int n) {
    auto it = polys_.find(n);
    if (it != polys_.end()) return it->second;
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) p = divide_monic(p, cyclotomic_poly(d));
    polys_.emplace(n, p);
    return p;
  }

  std::recursive_mutex mutex_;
  std::map<int, std::unique_ptr<CyclotomicTable>> tables_;
  std::map<int, IntPoly> polys_;
};

}  // namespace detail

inline const CyclotomicTable& cyclotomic_table(int n) { return detail::CyclotomicRegistry::instance().get(n); }

/// Exact element of Q(zeta_N), stored on the power basis 1, zeta, ...,
/// zeta^(phi(N)-1) reduced modulo Phi_N. Equality is field equality, so
/// values at different conductors compare by lifting to the lcm.
class CycloScalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  CycloScalar() : coeffs_(1) {}
  CycloScalar(std::int64_t n) : coeffs_{Rational(n)} {}  // NOLINT(google-explicit-constructor)
  CycloScalar(Rational r) : coeffs_{std::move(r)} {}     // NOLINT(google-explicit-constructor)

  CycloScalar(int conductor, Coeffs coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != cyclotomic_table(conductor_).degree)
      throw Error(ErrorCode::InvalidInput, "coefficient count does not match phi(conductor)");
  }

  static CycloScalar root_of_unity(int n, std::int64_t k) {
    const auto& t = cyclotomic_table(n);
    std::int64_t e = k % n;
    if (e < 0) e += n;
    Coeffs c(t.degree);
    for (int i = 0; i < t.degree; ++i) c[i] = Rational(t.powers[e][i]);
    return CycloScalar(n, std::move(c));
  }

  int conductor() const noexcept { return conductor_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool is_rational_kind() const noexcept { return coeffs_.size() == 1; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  bool is_one() const {
    if (!coeffs_[0].is_one()) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return false;
    return true;
  }

  /// The value as a rational number, if it lies in Q.
  std::optional<Rational> as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return std::nullopt;
    return coeffs_[0];
  }

  /// Same field element written at conductor m (a multiple of the current one).
  CycloScalar lift(int m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0)
      throw Error(ErrorCode::InvalidInput, "lift target " + std::to_string(m) + " is not a multiple of " +
                                               std::to_string(conductor_));
    const auto& target = cyclotomic_table(m);
    Coeffs out(target.degree);
    if (is_rational_kind()) {
      out[0] = coeffs_[0];
      return CycloScalar(m, std::move(out));
    }
    const int step = m / conductor_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      const auto& p = target.powers[(static_cast<int>(i) * step) % m];
      for (int r = 0; r < target.degree; ++r)
        if (p[r] != 0) out[r] += coeffs_[i] * Rational(p[r]);
    }
    return CycloScalar(m, std::move(out));
  }

  /// Rewrites the value at conductor m (m dividing the current conductor), if
  /// the value lies in Q(zeta_m).
  std::optional<CycloScalar> project(int m) const {
    if (m == conductor_) return *this;
    if (conductor_ % m != 0) return std::nullopt;
    const auto& small = cyclotomic_table(m);
    const auto& big = cyclotomic_table(conductor_);
    const int step = conductor_ / m;
    Matrix<Rational> a(big.degree, small.degree);
    for (int j = 0; j < small.degree; ++j) {
      const auto& p = big.powers[(j * step) % conductor_];
      for (int r = 0; r < big.degree; ++r) a(r, j) = Rational(p[r]);
    }
    std::vector<Rational> b(coeffs_.begin(), coeffs_.end());
    auto x = solve(a, b);
    if (!x) return std::nullopt;
    return CycloScalar(m, Coeffs(x->begin(), x->end()));
  }

  /// Smallest conductor dividing the current one that still holds the value.
  CycloScalar reduced() const {
    for (int m = 1; m < conductor_; ++m) {
      if (conductor_ % m != 0) continue;
      if (auto p = project(m)) return *p;
    }
    return *this;
  }

  friend std::pair<CycloScalar, CycloScalar> unify(const CycloScalar& a, const CycloScalar& b) {
    const int l = std::lcm(a.conductor_, b.conductor_);
    return {a.lift(l), b.lift(l)};
  }

  CycloScalar operator-() const {
    CycloScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
    if (a.conductor_ == b.conductor_ || b.is_rational_kind() || a.is_rational_kind()) {
      if (b.is_rational_kind()) {
        CycloScalar r = a;
        r.coeffs_[0] += b.coeffs_[0];
        return r;
      }
      if (a.is_rational_kind()) {
        CycloScalar r = b;
        r.coeffs_[0] += a.coeffs_[0];
        return r;
      }
      CycloScalar r = a;
      for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        if (!b.coeffs_[i].is_zero()) r.coeffs_[i] += b.coeffs_[i];
      return r;
    }
    auto [x, y] = unify(a, b);
    return x + y;
  }

  friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) { return a + (-b); }

  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
    if (b.is_rational_kind()) {
      CycloScalar r = a;
      for (auto& c : r.coeffs_)
        if (!c.is_zero()) c *= b.coeffs_[0];
      return r;
    }
    if (a.is_rational_kind()) return b * a;
    if (a.conductor_ != b.conductor_) {
      auto [x, y] = unify(a, b);
      return x * y;
    }
    const auto& t = cyclotomic_table(a.conductor_);
    const int d = t.degree;
    boost::container::small_vector<Rational, 8> prod(2 * d - 1);
    for (int i = 0; i < d; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (int j = 0; j < d; ++j)
        if (!b.coeffs_[j].is_zero()) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    Coeffs out(d);
    for (int k = 0; k < 2 * d - 1; ++k) {
      if (prod[k].is_zero()) continue;
      if (k < d) {
        out[k] += prod[k];
        continue;
      }
      const auto& p = t.powers[k];
      for (int r = 0; r < d; ++r)
        if (p[r] != 0) out[r] += prod[k] * Rational(p[r]);
    }
    return CycloScalar(a.conductor_, std::move(out), NoCheck{});
  }

  /// Inverse via the multiplication-by-a matrix over Q.
  CycloScalar inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero cyclotomic scalar");
    if (is_rational_kind()) return CycloScalar(conductor_, Coeffs{coeffs_[0].inverse()}, NoCheck{});
    const auto& t = cyclotomic_table(conductor_);
    const int d = t.degree;
    Matrix<Rational> m(d, d);
    for (int j = 0; j < d; ++j) {
      const CycloScalar col = *this * root_of_unity(conductor_, j);
      for (int i = 0; i < d; ++i) m(i, j) = col.coeffs_[i];
    }
    std::vector<Rational> e(d);
    e[0] = Rational(1);
    auto x = solve(m, e);
    if (!x) throw Error(ErrorCode::DivisionByZero, "singular multiplication matrix");
    return CycloScalar(conductor_, Coeffs(x->begin(), x->end()), NoCheck{});
  }

  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }

  CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
  CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
  CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }

  CycloScalar pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    CycloScalar result(1);
    CycloScalar base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// Complex conjugation zeta -> zeta^{-1}.
  CycloScalar conjugate() const {
    if (is_rational_kind()) return *this;
    CycloScalar r;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) r += CycloScalar(coeffs_[i]) * root_of_unity(conductor_, -static_cast<int>(i));
    return r.lift(conductor_);
  }

  friend bool operator==(const CycloScalar& a, const CycloScalar& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    if (a.is_rational_kind() && b.is_rational_kind()) return a.coeffs_[0] == b.coeffs_[0];
    if (b.is_rational_kind()) {
      auto r = a.as_rational();
      return r && *r == b.coeffs_[0];
    }
    if (a.is_rational_kind()) return b == a;
    auto [x, y] = unify(a, b);
    return x.coeffs_ == y.coeffs_;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += coeffs_[i].str();
      if (i > 0) out += "*z" + std::to_string(conductor_) + "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  struct NoCheck {};
  CycloScalar(int conductor, Coeffs coeffs, NoCheck) : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  int conductor_ = 1;
  Coeffs coeffs_;
};

using Scalar = CycloScalar;

/// Multiplicative order of a root of unity of conductor dividing n, or 0 if
/// the value is not such a root.
inline int root_of_unity_order(const CycloScalar& x, int n) {
  CycloScalar p = x;
  for (int k = 1; k <= n; ++k) {
    if (p.is_one()) return k;
    p *= x;
  }
  return 0;
}

/// Exponent e in [0, n) with x == zeta_n^e, if any.
inline std::optional<int> discrete_log(const CycloScalar& x, int n) {
  for (int e = 0; e < n; ++e)
    if (x == CycloScalar::root_of_unity(n, e)) return e;
  return std::nullopt;
}

/// Some n-th root of c, provided c = q * zeta with q rational, zeta a root of
/// unity in c's field and |q|^{1/n} rational. nullopt otherwise.
inline std::optional<CycloScalar> nth_root(const CycloScalar& c, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "root index must be positive");
  if (c.is_zero()) return CycloScalar();
  const int l = std::lcm(c.conductor(), 2);
  for (int e = 0; e < l; ++e) {
    auto q = (c * CycloScalar::root_of_unity(l, -e)).as_rational();
    if (!q) continue;
    int ee = e;
    Rational r = *q;
    if (r.sign() < 0) {
      r = -r;
      ee += l / 2;
    }
    mpz_class num = r.numerator(), den = r.denominator(), rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
    const CycloScalar mag(Rational(mpq_class(rn, rd)));
    return (mag * CycloScalar::root_of_unity(l * n, ee)).reduced();
  }
  return std::nullopt;
}

}  // namespace chevhopf
