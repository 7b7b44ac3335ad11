#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "chevhopf/algebra.hpp"
#include "chevhopf/linalg.hpp"

namespace chevhopf {

/// Multiplication table view: product(i, j) is e_i e_j.
using ProductFn = std::function<SparseVec(std::size_t, std::size_t)>;

/// Radical via the trace form: x is in Rad iff tr(L_{xy}) = 0 for all y.
/// Valid in characteristic 0.
inline Subspace<Scalar> trace_form_radical(std::size_t d, const ProductFn& product) {
  std::vector<Scalar> tr(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) tr[k] += sparse_get(product(k, l), static_cast<std::uint32_t>(l));
  Matrix<Scalar> form(d, d);  // transposed trace form, so the radical is its nullspace
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : product(i, j)) form(j, i) += t.value * tr[t.index];
  return Subspace<Scalar>::span(d, nullspace(form));
}

/// Jacobson radical of the underlying algebra, parity ignored.
inline Subspace<Scalar> jacobson_radical(const HopfSuperAlgebra& a) {
  return trace_form_radical(a.dim(), [&a](std::size_t i, std::size_t j) { return a.product(i, j); });
}

struct RadicalReport {
  Subspace<Scalar> radical;
  bool semisimple = true;
  bool hopf_ideal = true;
  bool chevalley = true;
};

/// Delta(X) lies in R (x) A + A (x) R iff (phi (x) psi)(X) = 0 for phi, psi
/// vanishing on R.
inline bool in_ideal_tensor(const TensorElement& x, const std::vector<std::vector<Scalar>>& ann) {
  if (ann.empty()) return true;
  // First contract the second slot: rows[i][q] = sum_j X_ij psi_q(j).
  std::vector<std::vector<Scalar>> rows(x.dim(), std::vector<Scalar>(ann.size()));
  for (const auto& t : x.entries()) {
    const auto ij = x.split(t.index);
    for (std::size_t q = 0; q < ann.size(); ++q)
      if (!ann[q][ij[1]].is_zero()) rows[ij[0]][q] += t.value * ann[q][ij[1]];
  }
  for (const auto& phi : ann)
    for (std::size_t q = 0; q < ann.size(); ++q) {
      Scalar s;
      for (std::size_t i = 0; i < x.dim(); ++i)
        if (!phi[i].is_zero() && !rows[i][q].is_zero()) s += phi[i] * rows[i][q];
      if (!s.is_zero()) return false;
    }
  return true;
}

/// True iff the subspace is a Hopf ideal: coideal, killed by epsilon, S-stable.
inline bool is_hopf_ideal(const HopfSuperAlgebra& a, const Subspace<Scalar>& r) {
  const auto ann = r.annihilator();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const Vec v = r.vector(i);
    if (!a.apply_counit(v).is_zero()) return false;
    if (!r.contains(a.apply_antipode(v))) return false;
    if (!in_ideal_tensor(coproduct(a, v), ann)) return false;
  }
  return true;
}

inline RadicalReport chevalley_check(const HopfSuperAlgebra& a) {
  RadicalReport rep;
  rep.radical = jacobson_radical(a);
  rep.semisimple = rep.radical.dim() == 0;
  rep.hopf_ideal = is_hopf_ideal(a, rep.radical);
  rep.chevalley = rep.hopf_ideal;
  return rep;
}

/// Smallest k with R^k = 0, or 0 if R is not nilpotent within dim + 1 steps.
inline std::size_t nilpotency_index(const HopfSuperAlgebra& a, const Subspace<Scalar>& r) {
  if (r.dim() == 0) return 1;
  auto power = r.vectors();
  for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
    if (power.empty()) return k;
    EchelonBasis<Scalar> next(a.dim());
    for (const auto& p : power)
      for (std::size_t i = 0; i < r.dim(); ++i) next.add(a.multiply(p, r.vector(i)));
    power = next.vectors();
  }
  return 0;
}

/// A/R is commutative: every commutator lies in R.
inline bool quotient_is_commutative(const HopfSuperAlgebra& a, const Subspace<Scalar>& r) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const SparseVec c = sparse_axpy(a.product(i, j), Scalar(-1), a.product(j, i));
      if (c.empty()) continue;
      if (!r.contains(to_dense(c, a.dim()))) return false;
    }
  return true;
}

/// Number of one-dimensional representations of the algebra given by
/// product: the dimension of C / Rad(C), C the largest commutative quotient.
inline std::size_t one_dimensional_representations(std::size_t d, const ProductFn& product) {
  EchelonBasis<Scalar> ideal(d);
  std::vector<Vec> frontier;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Vec c = to_dense(sparse_axpy(product(i, j), Scalar(-1), product(j, i)), d);
      if (ideal.add(c)) frontier.push_back(std::move(c));
    }
  auto mul_vec = [&](const Vec& v, std::size_t k, bool left) {
    Vec out(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i].is_zero()) continue;
      for (const auto& t : left ? product(k, i) : product(i, k)) out[t.index] += v[i] * t.value;
    }
    return out;
  };
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (std::size_t k = 0; k < d; ++k)
        for (bool left : {true, false}) {
          Vec p = mul_vec(v, k, left);
          if (ideal.add(p)) next.push_back(std::move(p));
        }
    frontier = std::move(next);
  }
  // Quotient basis: coordinates that are not pivots of the ideal.
  std::vector<bool> pivot(d, false);
  for (const auto& row : ideal.vectors()) {
    std::size_t p = 0;
    while (row[p].is_zero()) ++p;
    pivot[p] = true;
  }
  std::vector<std::size_t> keep;
  std::vector<int> pos(d, -1);
  for (std::size_t i = 0; i < d; ++i)
    if (!pivot[i]) {
      pos[i] = static_cast<int>(keep.size());
      keep.push_back(i);
    }
  const std::size_t q = keep.size();
  if (q == 0) return 0;
  std::vector<SparseVec> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      const Vec r = ideal.reduce(to_dense(product(keep[i], keep[j]), d));
      SparseVec s;
      for (std::size_t k = 0; k < d; ++k)
        if (!r[k].is_zero()) s.push_back({static_cast<std::uint32_t>(pos[k]), r[k]});
      table[i * q + j] = std::move(s);
    }
  const auto rad = trace_form_radical(q, [&](std::size_t i, std::size_t j) { return table[i * q + j]; });
  return q - rad.dim();
}

/// Number of group-like elements: one-dimensional representations of the
/// dual algebra, whose product is dual to Delta (purely even algebras).
inline std::size_t group_like_count(const HopfSuperAlgebra& a) {
  const std::size_t d = a.dim();
  std::vector<SparseVec> dual(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& t : a.coproduct(i)) dual[t.index].push_back({static_cast<std::uint32_t>(i), t.value});
  return one_dimensional_representations(d, [&](std::size_t j, std::size_t k) { return dual[j * d + k]; });
}

}  // namespace chevhopf
