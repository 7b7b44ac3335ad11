#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chevhopf/cyclotomic.hpp"
#include "chevhopf/errors.hpp"
#include "chevhopf/linalg.hpp"
#include "chevhopf/sparse.hpp"

namespace chevhopf {

using Parity = std::uint8_t;

/// Finite-dimensional Hopf superalgebra given by structure constants on a
/// homogeneous basis e_0..e_{d-1}.
///
/// mult[i*d+j] is e_i e_j; comult[i] is Delta(e_i) as a sparse vector over
/// flat indices j*d+k of e_j (x) e_k; antipode[i] is S(e_i).
class HopfSuperAlgebra {
 public:
  struct Parts {
    std::vector<Parity> parity;
    std::vector<SparseVec> mult;
    Vec unit;
    std::vector<SparseVec> comult;
    Vec counit;
    std::vector<SparseVec> antipode;
  };

  HopfSuperAlgebra() : HopfSuperAlgebra(trivial_parts()) {}

  explicit HopfSuperAlgebra(Parts parts) : p_(std::move(parts)) {
    const std::size_t d = p_.parity.size();
    if (d == 0) throw Error(ErrorCode::InvalidInput, "algebra of dimension 0");
    if (p_.mult.size() != d * d || p_.unit.size() != d || p_.comult.size() != d || p_.counit.size() != d ||
        p_.antipode.size() != d)
      throw Error(ErrorCode::InvalidInput, "structure constant shapes do not match dimension " + std::to_string(d));
    for (auto par : p_.parity)
      if (par > 1) throw Error(ErrorCode::ParityError, "parity entries must be 0 or 1");
    auto check_range = [&](const SparseVec& v, std::size_t bound, const char* what) {
      for (const auto& t : v)
        if (t.index >= bound) throw Error(ErrorCode::InvalidInput, std::string(what) + " index out of range");
      for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k - 1].index >= v[k].index) throw Error(ErrorCode::InvalidInput, std::string(what) + " not sorted");
    };
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const auto& m = p_.mult[i * d + j];
        check_range(m, d, "mult");
        for (const auto& t : m)
          if (p_.parity[t.index] != (p_.parity[i] ^ p_.parity[j]))
            throw Error(ErrorCode::ParityError, "product e_" + std::to_string(i) + " e_" + std::to_string(j) +
                                                    " is not homogeneous of summed parity");
      }
    for (std::size_t i = 0; i < d; ++i) {
      check_range(p_.comult[i], d * d, "comult");
      for (const auto& t : p_.comult[i])
        if ((p_.parity[t.index / d] ^ p_.parity[t.index % d]) != p_.parity[i])
          throw Error(ErrorCode::ParityError, "coproduct of e_" + std::to_string(i) + " changes parity");
      check_range(p_.antipode[i], d, "antipode");
      for (const auto& t : p_.antipode[i])
        if (p_.parity[t.index] != p_.parity[i])
          throw Error(ErrorCode::ParityError, "antipode of e_" + std::to_string(i) + " changes parity");
      if (p_.parity[i] && !p_.counit[i].is_zero())
        throw Error(ErrorCode::ParityError, "counit does not vanish on odd e_" + std::to_string(i));
      if (p_.parity[i] && !p_.unit[i].is_zero())
        throw Error(ErrorCode::ParityError, "unit has an odd component");
    }
  }

  std::size_t dim() const noexcept { return p_.parity.size(); }
  const std::vector<Parity>& parity() const noexcept { return p_.parity; }
  Parity parity(std::size_t i) const { return p_.parity[i]; }
  const Parts& parts() const noexcept { return p_; }

  const SparseVec& product(std::size_t i, std::size_t j) const { return p_.mult[i * dim() + j]; }
  const SparseVec& coproduct(std::size_t i) const { return p_.comult[i]; }
  const SparseVec& antipode(std::size_t i) const { return p_.antipode[i]; }
  const Vec& unit() const noexcept { return p_.unit; }
  const Vec& counit() const noexcept { return p_.counit; }

  bool purely_even() const {
    for (auto x : p_.parity)
      if (x) return false;
    return true;
  }

  /// Least conductor whose field holds all structure constants as written.
  int conductor() const {
    int n = 1;
    auto visit = [&](const Scalar& s) { n = std::lcm(n, s.conductor()); };
    for (const auto& v : p_.mult)
      for (const auto& t : v) visit(t.value);
    for (const auto& v : p_.comult)
      for (const auto& t : v) visit(t.value);
    for (const auto& v : p_.antipode)
      for (const auto& t : v) visit(t.value);
    for (const auto& s : p_.unit) visit(s);
    for (const auto& s : p_.counit) visit(s);
    return n % 4 == 2 ? n / 2 : n;
  }

  Vec multiply(const Vec& a, const Vec& b) const {
    Vec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (b[j].is_zero()) continue;
        const Scalar c = a[i] * b[j];
        for (const auto& t : product(i, j)) out[t.index] += c * t.value;
      }
    }
    return out;
  }

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const {
    Accumulator acc(dim());
    for (const auto& x : a)
      for (const auto& y : b) {
        const Scalar c = x.value * y.value;
        for (const auto& t : product(x.index, y.index)) acc.add(t.index, c * t.value);
      }
    return acc.finish();
  }

  Vec apply_antipode(const Vec& a) const {
    Vec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i].is_zero()) continue;
      for (const auto& t : antipode(i)) out[t.index] += a[i] * t.value;
    }
    return out;
  }

  Scalar apply_counit(const Vec& a) const {
    Scalar s;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!a[i].is_zero() && !p_.counit[i].is_zero()) s += a[i] * p_.counit[i];
    return s;
  }

  /// Parity of a nonzero homogeneous element; nullopt if inhomogeneous.
  std::optional<Parity> parity_of(const Vec& a) const {
    std::optional<Parity> p;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i].is_zero()) continue;
      if (p && *p != p_.parity[i]) return std::nullopt;
      p = p_.parity[i];
    }
    return p ? p : std::optional<Parity>(Parity{0});
  }

  /// Two-sided inverse, or nullopt.
  std::optional<Vec> inverse(const Vec& a) const {
    auto mul = [this](const SparseVec& x, const SparseVec& y) { return multiply(x, y); };
    auto r = krylov_inverse(mul, to_sparse(p_.unit), to_sparse(a), dim());
    if (!r) return std::nullopt;
    return to_dense(*r, dim());
  }

  Vec basis(std::size_t i) const { return basis_vector(dim(), i); }

  friend bool operator==(const HopfSuperAlgebra& a, const HopfSuperAlgebra& b) {
    return a.p_.parity == b.p_.parity && a.p_.mult == b.p_.mult && a.p_.unit == b.p_.unit &&
           a.p_.comult == b.p_.comult && a.p_.counit == b.p_.counit && a.p_.antipode == b.p_.antipode;
  }

 private:
  static Parts trivial_parts() {
    Parts p;
    p.parity = {0};
    p.mult = {SparseVec{{0, Scalar(1)}}};
    p.unit = {Scalar(1)};
    p.comult = {SparseVec{{0, Scalar(1)}}};
    p.counit = {Scalar(1)};
    p.antipode = {SparseVec{{0, Scalar(1)}}};
    return p;
  }

  Parts p_;
};

/// Sparse element of A^{(x)2} or A^{(x)3}. Flat index of e_i(x)e_j(x)e_k is
/// (i*d + j)*d + k.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(int arity, std::size_t dim, SparseVec entries = {})
      : arity_(arity), dim_(dim), entries_(std::move(entries)) {
    if (arity_ != 2 && arity_ != 3) throw Error(ErrorCode::ArityMismatch, "tensor arity must be 2 or 3");
    const std::size_t bound = space_dim();
    for (const auto& t : entries_)
      if (t.index >= bound) throw Error(ErrorCode::InvalidInput, "tensor index out of range");
  }

  int arity() const noexcept { return arity_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t space_dim() const noexcept { return arity_ == 2 ? dim_ * dim_ : dim_ * dim_ * dim_; }
  const SparseVec& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  std::uint32_t flat(std::size_t i, std::size_t j) const { return static_cast<std::uint32_t>(i * dim_ + j); }
  std::uint32_t flat(std::size_t i, std::size_t j, std::size_t k) const {
    return static_cast<std::uint32_t>((i * dim_ + j) * dim_ + k);
  }
  std::array<std::uint32_t, 3> split(std::uint32_t f) const {
    const auto d = static_cast<std::uint32_t>(dim_);
    if (arity_ == 2) return {f / d, f % d, 0};
    return {f / (d * d), (f / d) % d, f % d};
  }

  Scalar coefficient(std::size_t i, std::size_t j) const { return sparse_get(entries_, flat(i, j)); }
  Scalar coefficient(std::size_t i, std::size_t j, std::size_t k) const { return sparse_get(entries_, flat(i, j, k)); }

  friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
    a.check_compatible(b);
    return TensorElement(a.arity_, a.dim_, sparse_axpy(a.entries_, Scalar(1), b.entries_));
  }
  friend TensorElement operator-(const TensorElement& a, const TensorElement& b) {
    a.check_compatible(b);
    return TensorElement(a.arity_, a.dim_, sparse_axpy(a.entries_, Scalar(-1), b.entries_));
  }
  friend TensorElement operator*(const Scalar& c, const TensorElement& a) {
    return TensorElement(a.arity_, a.dim_, sparse_scale(a.entries_, c));
  }
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  void check_compatible(const TensorElement& o) const {
    if (arity_ != o.arity_ || dim_ != o.dim_)
      throw Error(ErrorCode::ArityMismatch, "tensor elements of arity/dim " + std::to_string(arity_) + "/" +
                                                std::to_string(dim_) + " and " + std::to_string(o.arity_) + "/" +
                                                std::to_string(o.dim_));
  }

 private:
  int arity_ = 2;
  std::size_t dim_ = 0;
  SparseVec entries_;
};

/// Multiplication context for A^{(x)n}, n in {2,3}, with Koszul signs:
/// (a(x)b)(c(x)d) = (-1)^{|b||c|} ac(x)bd and
/// (a(x)b(x)c)(d(x)e(x)f) = (-1)^{|d|(|b|+|c|)+|e||c|} ad(x)be(x)cf.
class TensorAlgebra {
 public:
  TensorAlgebra(const HopfSuperAlgebra& a, int arity) : a_(&a), arity_(arity) {
    if (arity != 2 && arity != 3) throw Error(ErrorCode::ArityMismatch, "tensor algebra arity must be 2 or 3");
  }

  const HopfSuperAlgebra& algebra() const noexcept { return *a_; }
  int arity() const noexcept { return arity_; }

  TensorElement zero() const { return TensorElement(arity_, a_->dim()); }

  TensorElement unit() const {
    std::vector<Vec> f(arity_, a_->unit());
    return pure(f);
  }

  /// f_0 (x) f_1 (x) ... for dense factors.
  TensorElement pure(const std::vector<Vec>& factors) const {
    if (static_cast<int>(factors.size()) != arity_) throw Error(ErrorCode::ArityMismatch, "pure tensor factor count");
    const std::size_t d = a_->dim();
    SparseVec cur;
    for (std::size_t i = 0; i < d; ++i)
      if (!factors[0][i].is_zero()) cur.push_back({static_cast<std::uint32_t>(i), factors[0][i]});
    for (int s = 1; s < arity_; ++s) {
      SparseVec next;
      for (const auto& t : cur)
        for (std::size_t i = 0; i < d; ++i)
          if (!factors[s][i].is_zero())
            next.push_back({static_cast<std::uint32_t>(t.index * d + i), t.value * factors[s][i]});
      cur = std::move(next);
    }
    return TensorElement(arity_, d, std::move(cur));
  }

  TensorElement basis_tensor(std::size_t i, std::size_t j) const {
    TensorElement t(2, a_->dim());
    return TensorElement(2, a_->dim(), SparseVec{{t.flat(i, j), Scalar(1)}});
  }

  TensorElement multiply(const TensorElement& x, const TensorElement& y) const {
    check(x);
    check(y);
    const std::size_t d = a_->dim();
    const auto& par = a_->parity();
    Accumulator acc(x.space_dim());
    if (arity_ == 2) {
      for (const auto& tx : x.entries()) {
        const auto ix = x.split(tx.index);
        for (const auto& ty : y.entries()) {
          const auto iy = y.split(ty.index);
          const auto& p = a_->product(ix[0], iy[0]);
          if (p.empty()) continue;
          const auto& q = a_->product(ix[1], iy[1]);
          if (q.empty()) continue;
          Scalar c = tx.value * ty.value;
          if (par[ix[1]] & par[iy[0]]) c = -c;
          for (const auto& a : p) {
            const Scalar ca = c * a.value;
            for (const auto& b : q) acc.add(static_cast<std::uint32_t>(a.index * d + b.index), ca * b.value);
          }
        }
      }
    } else {
      for (const auto& tx : x.entries()) {
        const auto ix = x.split(tx.index);
        for (const auto& ty : y.entries()) {
          const auto iy = y.split(ty.index);
          const auto& p = a_->product(ix[0], iy[0]);
          if (p.empty()) continue;
          const auto& q = a_->product(ix[1], iy[1]);
          if (q.empty()) continue;
          const auto& r = a_->product(ix[2], iy[2]);
          if (r.empty()) continue;
          Scalar c = tx.value * ty.value;
          const int e = par[iy[0]] * (par[ix[1]] + par[ix[2]]) + par[iy[1]] * par[ix[2]];
          if (e & 1) c = -c;
          for (const auto& a : p)
            for (const auto& b : q) {
              const Scalar cab = c * a.value * b.value;
              for (const auto& cc : r)
                acc.add(static_cast<std::uint32_t>((a.index * d + b.index) * d + cc.index), cab * cc.value);
            }
        }
      }
    }
    return TensorElement(arity_, d, acc.finish());
  }

  TensorElement multiply(std::initializer_list<const TensorElement*> xs) const {
    TensorElement r = unit();
    for (const auto* x : xs) r = multiply(r, *x);
    return r;
  }

  TensorElement power(const TensorElement& x, unsigned k) const {
    TensorElement r = unit();
    for (unsigned i = 0; i < k; ++i) r = multiply(r, x);
    return r;
  }

  bool invertible(const TensorElement& x) const { return try_inverse(x).has_value(); }

  std::optional<TensorElement> try_inverse(const TensorElement& x) const {
    check(x);
    auto mul = [this, &x](const SparseVec& a, const SparseVec& b) {
      return multiply(TensorElement(arity_, x.dim(), a), TensorElement(arity_, x.dim(), b)).entries();
    };
    auto r = krylov_inverse(mul, unit().entries(), x.entries(), x.space_dim());
    if (!r) return std::nullopt;
    return TensorElement(arity_, x.dim(), std::move(*r));
  }

  TensorElement inverse(const TensorElement& x) const {
    auto r = try_inverse(x);
    if (!r) throw Error(ErrorCode::NotInvertible, "tensor element is not invertible");
    return *r;
  }

  /// Super flip a(x)b -> (-1)^{|a||b|} b(x)a.
  TensorElement flip(const TensorElement& x) const {
    check(x);
    if (arity_ != 2) throw Error(ErrorCode::ArityMismatch, "flip needs arity 2");
    const auto& par = a_->parity();
    Accumulator acc(x.space_dim());
    for (const auto& t : x.entries()) {
      const auto ij = x.split(t.index);
      acc.add(x.flat(ij[1], ij[0]), (par[ij[0]] & par[ij[1]]) ? -t.value : t.value);
    }
    return TensorElement(2, x.dim(), acc.finish());
  }

 private:
  void check(const TensorElement& x) const {
    if (x.arity() != arity_ || x.dim() != a_->dim())
      throw Error(ErrorCode::ArityMismatch, "tensor of arity " + std::to_string(x.arity()) +
                                                " used in tensor algebra of arity " + std::to_string(arity_));
  }

  const HopfSuperAlgebra* a_;
  int arity_;
};

/// Delta(x) for a dense element x.
inline TensorElement coproduct(const HopfSuperAlgebra& a, const Vec& x) {
  Accumulator acc(a.dim() * a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& t : a.coproduct(i)) acc.add(t.index, x[i] * t.value);
  }
  return TensorElement(2, a.dim(), acc.finish());
}

/// (Delta (x) id)(X) for slot 0, (id (x) Delta)(X) for slot 1.
inline TensorElement coproduct_slot(const HopfSuperAlgebra& a, const TensorElement& x, int slot) {
  if (x.arity() != 2) throw Error(ErrorCode::ArityMismatch, "coproduct_slot needs arity 2");
  const std::size_t d = a.dim();
  Accumulator acc(d * d * d);
  for (const auto& t : x.entries()) {
    const auto ij = x.split(t.index);
    if (slot == 0) {
      for (const auto& c : a.coproduct(ij[0]))
        acc.add(static_cast<std::uint32_t>(c.index * d + ij[1]), t.value * c.value);
    } else {
      for (const auto& c : a.coproduct(ij[1]))
        acc.add(static_cast<std::uint32_t>(ij[0] * d * d + c.index), t.value * c.value);
    }
  }
  return TensorElement(3, d, acc.finish());
}

/// Places an arity-2 tensor into slots (s, t) of A^{(x)3}, with 1 in the third.
/// Koszul signs vanish because the unit is even.
inline TensorElement embed3(const HopfSuperAlgebra& a, const TensorElement& x, int s, int t) {
  if (x.arity() != 2 || s == t || s < 0 || t < 0 || s > 2 || t > 2 || s > t)
    throw Error(ErrorCode::ArityMismatch, "embed3 expects arity 2 and slots s < t in {0,1,2}");
  const std::size_t d = a.dim();
  const int free_slot = 3 - s - t;
  Accumulator acc(d * d * d);
  for (const auto& e : x.entries()) {
    const auto ij = x.split(e.index);
    for (std::size_t u = 0; u < d; ++u) {
      if (a.unit()[u].is_zero()) continue;
      std::array<std::size_t, 3> idx{};
      idx[s] = ij[0];
      idx[t] = ij[1];
      idx[free_slot] = u;
      acc.add(static_cast<std::uint32_t>((idx[0] * d + idx[1]) * d + idx[2]), e.value * a.unit()[u]);
    }
  }
  return TensorElement(3, d, acc.finish());
}

/// (eps (x) id)(X) for slot 0, (id (x) eps)(X) for slot 1.
inline Vec counit_slot(const HopfSuperAlgebra& a, const TensorElement& x, int slot) {
  if (x.arity() != 2) throw Error(ErrorCode::ArityMismatch, "counit_slot needs arity 2");
  Vec out(a.dim());
  for (const auto& t : x.entries()) {
    const auto ij = x.split(t.index);
    const Scalar& e = a.counit()[slot == 0 ? ij[0] : ij[1]];
    if (e.is_zero()) continue;
    out[slot == 0 ? ij[1] : ij[0]] += t.value * e;
  }
  return out;
}

/// Applies even linear maps f (x) g given by basis images.
inline TensorElement map_tensor(const TensorElement& x, std::size_t target_dim, const std::vector<SparseVec>& f,
                                const std::vector<SparseVec>& g) {
  if (x.arity() != 2) throw Error(ErrorCode::ArityMismatch, "map_tensor needs arity 2");
  Accumulator acc(target_dim * target_dim);
  for (const auto& t : x.entries()) {
    const auto ij = x.split(t.index);
    for (const auto& a : f[ij[0]])
      for (const auto& b : g[ij[1]])
        acc.add(static_cast<std::uint32_t>(a.index * target_dim + b.index), t.value * a.value * b.value);
  }
  return TensorElement(2, target_dim, acc.finish());
}

/// m(X) = sum a b over X = sum a (x) b.
inline Vec multiply_out(const HopfSuperAlgebra& a, const TensorElement& x) {
  if (x.arity() != 2) throw Error(ErrorCode::ArityMismatch, "multiply_out needs arity 2");
  Vec out(a.dim());
  for (const auto& t : x.entries()) {
    const auto ij = x.split(t.index);
    for (const auto& p : a.product(ij[0], ij[1])) out[p.index] += t.value * p.value;
  }
  return out;
}

/// m(S (x) id)(X) for slot 0, m(id (x) S)(X) for slot 1.
inline Vec antipode_multiply(const HopfSuperAlgebra& a, const TensorElement& x, int slot) {
  if (x.arity() != 2) throw Error(ErrorCode::ArityMismatch, "antipode_multiply needs arity 2");
  Vec out(a.dim());
  for (const auto& t : x.entries()) {
    const auto ij = x.split(t.index);
    if (slot == 0) {
      for (const auto& s : a.antipode(ij[0]))
        for (const auto& p : a.product(s.index, ij[1])) out[p.index] += t.value * s.value * p.value;
    } else {
      for (const auto& s : a.antipode(ij[1]))
        for (const auto& p : a.product(ij[0], s.index)) out[p.index] += t.value * s.value * p.value;
    }
  }
  return out;
}

/// Coefficient matrix of X in A (x) A: entry (i, j) is the coefficient of e_i (x) e_j.
inline Matrix<Scalar> coefficient_matrix(const TensorElement& x) {
  if (x.arity() != 2) throw Error(ErrorCode::ArityMismatch, "coefficient_matrix needs arity 2");
  Matrix<Scalar> m(x.dim(), x.dim());
  for (const auto& t : x.entries()) {
    const auto ij = x.split(t.index);
    m(ij[0], ij[1]) = t.value;
  }
  return m;
}

}  // namespace chevhopf
