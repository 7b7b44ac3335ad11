#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chevhopf/algebra.hpp"
#include "chevhopf/axioms.hpp"
#include "chevhopf/chevalley.hpp"
#include "chevhopf/groups.hpp"
#include "chevhopf/report.hpp"
#include "chevhopf/supergroup.hpp"
#include "chevhopf/twists.hpp"

namespace chevhopf {

/// (Delta (x) id)R = R13 R23, (id (x) Delta)R = R13 R12, Delta^op = R Delta R^{-1}
/// with the super flip, and R21 R = 1 (x) 1.
inline AxiomReport check_triangular(const HopfSuperAlgebra& a, const TensorElement& r) {
  AxiomReport rep;
  if (r.arity() != 2 || r.dim() != a.dim()) {
    rep.add("shape", false, std::nullopt, "R must be an arity-2 tensor over the algebra");
    return rep;
  }
  const TensorAlgebra t2(a, 2), t3(a, 3);
  rep.add("invertible", t2.invertible(r));
  const auto r12 = embed3(a, r, 0, 1), r13 = embed3(a, r, 0, 2), r23 = embed3(a, r, 1, 2);
  rep.add("hexagon left", coproduct_slot(a, r, 0) == t3.multiply(r13, r23));
  rep.add("hexagon right", coproduct_slot(a, r, 1) == t3.multiply(r13, r12));
  std::optional<std::vector<std::size_t>> w;
  for (std::size_t i = 0; i < a.dim() && !w; ++i) {
    const TensorElement di(2, a.dim(), a.coproduct(i));
    if (t2.multiply(r, di) != t2.multiply(t2.flip(di), r)) w = std::vector<std::size_t>{i};
  }
  rep.add("quasi-cocommutative", !w, w);
  rep.add("unitary", t2.multiply(t2.flip(r), r) == t2.unit());
  return rep;
}

/// u_D = m(S (x) id)(R21).
inline Vec drinfeld_element(const HopfSuperAlgebra& a, const TensorElement& r) {
  return antipode_multiply(a, TensorAlgebra(a, 2).flip(r), 0);
}

/// R_u = (1(x)1 + 1(x)u + u(x)1 - u(x)u) / 2.
inline TensorElement r_u(const HopfSuperAlgebra& a, const Vec& u) {
  const TensorAlgebra t(a, 2);
  const Vec& one = a.unit();
  return Scalar(Rational(1, 2)) * (t.pure({one, one}) + t.pure({one, u}) + t.pure({u, one}) - t.pure({u, u}));
}

struct TriangularAlgebra {
  HopfSuperAlgebra algebra;
  TensorElement R;
  Vec drinfeld;

  TriangularAlgebra() = default;
  TriangularAlgebra(HopfSuperAlgebra a, TensorElement r)
      : algebra(std::move(a)), R(std::move(r)), drinfeld(drinfeld_element(algebra, R)) {}
};

/// Minimal part: subalgebra generated by 1 and the tensorands of R.
/// Throws NotSubHopf when that subalgebra is not closed under Delta and S.
inline Subspace<Scalar> minimal_part(const HopfSuperAlgebra& a, const TensorElement& r) {
  const auto m = coefficient_matrix(r);
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < a.dim(); ++j) gens.push_back(m.column(j));
  for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(m.row(i));
  // Reduce to a basis first; generation only depends on the span.
  EchelonBasis<Scalar> span(a.dim());
  for (const auto& g : gens) span.add(g);
  const auto z = subalgebra_generated(a, span.vectors());
  const auto ann = z.annihilator();
  for (std::size_t k = 0; k < z.dim(); ++k) {
    const Vec v = z.vector(k);
    if (!z.contains(a.apply_antipode(v))) throw Error(ErrorCode::NotSubHopf, "minimal part is not S-stable");
    const auto dv = coproduct(a, v);
    // Delta(v) in Z (x) Z iff both one-sided contractions with Z^perp vanish.
    for (const auto& phi : ann) {
      Vec left(a.dim()), right(a.dim());
      for (const auto& t : dv.entries()) {
        const auto ij = dv.split(t.index);
        left[ij[1]] += phi[ij[0]] * t.value;
        right[ij[0]] += phi[ij[1]] * t.value;
      }
      if (!is_zero(left) || !is_zero(right)) throw Error(ErrorCode::NotSubHopf, "minimal part is not a subcoalgebra");
    }
  }
  return z;
}

namespace detail {

/// sum a_i (x) u^{|a_i|} b_i over the homogeneous basis.
inline TensorElement insert_u(const HopfSuperAlgebra& shape, const std::vector<Parity>& parity, const TensorElement& x,
                              const Vec& u) {
  const std::size_t d = shape.dim();
  Accumulator acc(d * d);
  const SparseVec us = to_sparse(u);
  for (const auto& t : x.entries()) {
    const auto ij = x.split(t.index);
    if (!parity[ij[0]]) {
      acc.add(t.index, t.value);
      continue;
    }
    const SparseVec ub = shape.multiply(us, SparseVec{{ij[1], Scalar(1)}});
    for (const auto& p : ub) acc.add(static_cast<std::uint32_t>(ij[0] * d + p.index), t.value * p.value);
  }
  return TensorElement(2, d, acc.finish());
}

inline std::string parity_implementer_problem(const HopfSuperAlgebra& a, const std::vector<Parity>& parity,
                                              const Vec& u) {
  const TensorAlgebra t(a, 2);
  if (coproduct(a, u) != t.pure({u, u}) || !a.apply_counit(u).is_one()) return "u is not group-like";
  if (a.multiply(u, u) != a.unit()) return "u^2 != 1";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec lhs = a.multiply(u, a.basis(i));
    Vec rhs = a.multiply(a.basis(i), u);
    if (parity[i])
      for (auto& x : rhs) x = -x;
    if (lhs != rhs) return "Ad(u) is not the parity involution on e_" + std::to_string(i);
  }
  return "";
}

}  // namespace detail

/// Super -> ordinary: same product, Delta_A(a) = a1 (x) u^{|a1|} a2,
/// S_A(a) = S(a) u^{|a|}, R_A = R_u (sum a_i (x) u^{|a_i|} b_i).
inline TriangularAlgebra bosonize(const HopfSuperAlgebra& a, const TensorElement& r, const Vec& u) {
  if (const auto why = detail::parity_implementer_problem(a, a.parity(), u); !why.empty())
    throw Error(ErrorCode::BadParityImplementer, why);
  auto parts = a.parts();
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    parts.comult[i] = detail::insert_u(a, a.parity(), TensorElement(2, d, a.coproduct(i)), u).entries();
    if (a.parity(i)) parts.antipode[i] = to_sparse(a.multiply(to_dense(a.antipode(i), d), u));
  }
  parts.parity.assign(d, 0);
  HopfSuperAlgebra even(std::move(parts));
  const TensorElement rr = detail::insert_u(a, a.parity(), r, u);
  TensorElement ra = TensorAlgebra(even, 2).multiply(r_u(even, u), rr);
  return TriangularAlgebra(std::move(even), std::move(ra));
}

struct SuperTriangular {
  HopfSuperAlgebra algebra;
  TensorElement R;
};

/// Inverse of bosonize; parity is read off from Ad(u), which must act
/// diagonally by +-1 on the basis.
inline SuperTriangular unbosonize(const HopfSuperAlgebra& a, const TensorElement& r, const Vec& u) {
  const std::size_t d = a.dim();
  std::vector<Parity> parity(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    const Vec lhs = a.multiply(u, a.basis(i));
    const Vec rhs = a.multiply(a.basis(i), u);
    if (lhs == rhs) continue;
    Vec neg = rhs;
    for (auto& x : neg) x = -x;
    if (lhs != neg) throw Error(ErrorCode::BadParityImplementer, "basis is not homogeneous for Ad(u)");
    parity[i] = 1;
  }
  if (const auto why = detail::parity_implementer_problem(a, parity, u); !why.empty())
    throw Error(ErrorCode::BadParityImplementer, why);
  const TensorAlgebra t(a, 2);
  const TensorElement rr = t.multiply(r_u(a, u), r);  // R_u^2 = 1
  auto parts = a.parts();
  for (std::size_t i = 0; i < d; ++i) {
    parts.comult[i] = detail::insert_u(a, parity, TensorElement(2, d, a.coproduct(i)), u).entries();
    if (parity[i]) parts.antipode[i] = to_sparse(a.multiply(to_dense(a.antipode(i), d), u));
  }
  parts.parity = parity;
  HopfSuperAlgebra sup(std::move(parts));
  TensorElement rs = detail::insert_u(a, parity, rr, u);
  return {std::move(sup), std::move(rs)};
}

/// All stages of S -> A(S).
struct BuildResult {
  SupergroupAlgebra supergroup;
  TensorElement twist;  // J_B J_V in C[G x| W]^{(x)2}
  HopfSuperAlgebra super_algebra;
  TensorElement super_R;
  TriangularAlgebra result;
  Vec u;
};

/// J_V (or the explicit twist) carried into C[G x| W] along H -> G.
inline TensorElement v_twist_in(const SupergroupAlgebra& sg, const TriangularSeptuple& s) {
  const auto h = s.H();
  const auto incl = sg.group_inclusion(h);
  const std::size_t d = sg.algebra().dim();
  if (const auto* pol = std::get_if<PolarizationData>(&s.V))
    return map_tensor(twist_JV(s.G, h, *pol), d, incl, incl);
  const auto& t = std::get<ExplicitTwist>(s.V).twist;
  if (t.arity() != 2 || t.dim() != h.inclusion.size())
    throw Error(ErrorCode::InvalidTwist, "explicit V twist must live on C[H]");
  return map_tensor(t, d, incl, incl);
}

inline BuildResult build_A_of_S(const TriangularSeptuple& s) {
  if (const auto rep = validate_septuple(s); !rep.ok())
    throw Error(ErrorCode::InvalidInput, "septuple fails validation:\n" + rep.summary());
  SupergroupAlgebra sg(s.G, s.W);
  const auto& a = sg.algebra();
  std::vector<Vec> ys;
  for (std::size_t i = 0; i < s.dim_Y(); ++i) ys.push_back(sg.odd_element(s.y_vector(i)));
  const TensorAlgebra t(a, 2);
  const TensorElement jb = twist_JB(a, ys, s.B);
  const TensorElement jv = v_twist_in(sg, s);
  TensorElement j = t.multiply(jb, jv);
  const Twist tw = make_twist(a, j);
  if (!tw.ok()) throw Error(ErrorCode::InvalidTwist, "J_B J_V fails the twist check:\n" + tw.certificate.summary());
  auto twisted = apply_twist(a, tw, t.unit());
  const Vec u = sg.group_element(s.u);
  TriangularAlgebra result = bosonize(twisted.algebra, *twisted.R, u);
  return {std::move(sg), std::move(j), std::move(twisted.algebra), std::move(*twisted.R), std::move(result), u};
}

/// Computable invariants separating non-isomorphic outputs.
struct AlgebraInvariants {
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  std::size_t group_likes = 0;
  bool minimal = false;
  friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;
};

inline AlgebraInvariants invariants_of(const TriangularAlgebra& t) {
  AlgebraInvariants inv;
  inv.dim = t.algebra.dim();
  inv.radical_dim = jacobson_radical(t.algebra).dim();
  inv.group_likes = group_like_count(t.algebra);
  inv.minimal = minimal_part(t.algebra, t.R).dim() == t.algebra.dim();
  return inv;
}

}  // namespace chevhopf
