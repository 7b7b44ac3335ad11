#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chevhopf/algebra.hpp"
#include "chevhopf/linalg.hpp"
#include "chevhopf/report.hpp"

namespace chevhopf {

namespace detail {

inline SparseVec left_mul(const HopfSuperAlgebra& a, const SparseVec& x, std::size_t k) {
  Accumulator acc(a.dim());
  for (const auto& t : x)
    for (const auto& p : a.product(t.index, k)) acc.add(p.index, t.value * p.value);
  return acc.finish();
}

inline SparseVec right_mul(const HopfSuperAlgebra& a, std::size_t i, const SparseVec& x) {
  Accumulator acc(a.dim());
  for (const auto& t : x)
    for (const auto& p : a.product(i, t.index)) acc.add(p.index, t.value * p.value);
  return acc.finish();
}

}  // namespace detail

/// Exact check of the Hopf superalgebra axioms on basis elements.
/// Each entry records the first failing basis index tuple.
inline AxiomReport check_hopf_axioms(const HopfSuperAlgebra& a) {
  AxiomReport rep;
  const std::size_t d = a.dim();
  using W = std::optional<std::vector<std::size_t>>;

  {
    W w;
    for (std::size_t i = 0; i < d && !w; ++i)
      for (std::size_t j = 0; j < d && !w; ++j)
        for (std::size_t k = 0; k < d && !w; ++k)
          if (detail::left_mul(a, a.product(i, j), k) != detail::right_mul(a, i, a.product(j, k))) w = {{i, j, k}};
    rep.add("associativity", !w, w);
  }
  {
    W w;
    const SparseVec one = to_sparse(a.unit());
    for (std::size_t i = 0; i < d && !w; ++i) {
      const SparseVec ei{{static_cast<std::uint32_t>(i), Scalar(1)}};
      if (a.multiply(one, ei) != ei || a.multiply(ei, one) != ei) w = {{i}};
    }
    rep.add("unitality", !w, w);
  }
  {
    W w;
    for (std::size_t i = 0; i < d && !w; ++i) {
      const TensorElement di(2, d, a.coproduct(i));
      if (coproduct_slot(a, di, 0) != coproduct_slot(a, di, 1)) w = {{i}};
    }
    rep.add("coassociativity", !w, w);
  }
  {
    W w;
    for (std::size_t i = 0; i < d && !w; ++i) {
      const TensorElement di(2, d, a.coproduct(i));
      const Vec ei = a.basis(i);
      if (counit_slot(a, di, 0) != ei || counit_slot(a, di, 1) != ei) w = {{i}};
    }
    rep.add("counit", !w, w);
  }
  {
    W w;
    for (std::size_t i = 0; i < d && !w; ++i) {
      const TensorElement di(2, d, a.coproduct(i));
      Vec expect = a.unit();
      for (auto& x : expect) x = x * a.counit()[i];
      if (antipode_multiply(a, di, 0) != expect || antipode_multiply(a, di, 1) != expect) w = {{i}};
    }
    rep.add("antipode", !w, w);
  }
  {
    W w;
    const TensorAlgebra t2(a, 2);
    if (coproduct(a, a.unit()) != t2.unit()) w = std::vector<std::size_t>{};
    std::vector<TensorElement> deltas;
    for (std::size_t i = 0; i < d; ++i) deltas.emplace_back(2, d, a.coproduct(i));
    for (std::size_t i = 0; i < d && !w; ++i)
      for (std::size_t j = 0; j < d && !w; ++j) {
        TensorElement lhs = coproduct(a, to_dense(a.product(i, j), d));
        if (lhs != t2.multiply(deltas[i], deltas[j])) w = {{i, j}};
      }
    rep.add("coproduct multiplicative", !w, w);
  }
  {
    W w;
    if (!a.apply_counit(a.unit()).is_one()) w = std::vector<std::size_t>{};
    for (std::size_t i = 0; i < d && !w; ++i)
      for (std::size_t j = 0; j < d && !w; ++j)
        if (a.apply_counit(to_dense(a.product(i, j), d)) != a.counit()[i] * a.counit()[j]) w = {{i, j}};
    rep.add("counit multiplicative", !w, w);
  }
  return rep;
}

/// Smallest unital subalgebra containing gens.
inline Subspace<Scalar> subalgebra_generated(const HopfSuperAlgebra& a, const std::vector<Vec>& gens) {
  EchelonBasis<Scalar> basis(a.dim());
  std::vector<Vec> frontier;
  if (basis.add(a.unit())) frontier.push_back(a.unit());
  for (const auto& g : gens)
    if (basis.add(g)) frontier.push_back(g);
  // Words in the generators: close the span under left multiplication by gens.
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        Vec p = a.multiply(g, v);
        if (basis.add(p)) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return basis.subspace();
}

}  // namespace chevhopf
