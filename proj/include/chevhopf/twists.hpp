#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevhopf/algebra.hpp"
#include "chevhopf/axioms.hpp"
#include "chevhopf/groups.hpp"
#include "chevhopf/report.hpp"
#include "chevhopf/supergroup.hpp"

namespace chevhopf {

/// exp(X) = sum X^k / k! for nilpotent X; throws if X is not nilpotent
/// within the dimension bound.
inline TensorElement exp_nilpotent(const TensorAlgebra& t, const TensorElement& x) {
  TensorElement result = t.unit();
  TensorElement term = t.unit();
  const std::size_t bound = x.space_dim() + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    term = Scalar(Rational(1, static_cast<std::int64_t>(k))) * t.multiply(term, x);
    if (term.is_zero()) return result;
    result = result + term;
  }
  throw Error(ErrorCode::InvalidInput, "exponential of a non-nilpotent tensor");
}

/// Twist element together with the report that certified it.
struct Twist {
  TensorElement element;
  AxiomReport certificate;
  bool ok() const { return certificate.ok(); }
};

/// Checks invertibility, counit normalization and the twist equation
/// (Delta (x) id)(J) (J (x) 1) = (id (x) Delta)(J) (1 (x) J),
/// the form matching Delta^J = J^{-1} Delta J.
inline AxiomReport check_twist(const HopfSuperAlgebra& a, const TensorElement& j) {
  AxiomReport rep;
  if (j.arity() != 2 || j.dim() != a.dim()) {
    rep.add("shape", false, std::nullopt, "twist must be an arity-2 tensor over the algebra");
    return rep;
  }
  const TensorAlgebra t2(a, 2), t3(a, 3);
  rep.add("invertible", t2.invertible(j));
  rep.add("counit left", counit_slot(a, j, 0) == a.unit());
  rep.add("counit right", counit_slot(a, j, 1) == a.unit());
  const auto lhs = t3.multiply(coproduct_slot(a, j, 0), embed3(a, j, 0, 1));
  const auto rhs = t3.multiply(coproduct_slot(a, j, 1), embed3(a, j, 1, 2));
  std::optional<std::vector<std::size_t>> w;
  if (lhs != rhs) {
    const auto diff = lhs - rhs;
    const auto idx = diff.split(diff.entries().front().index);
    w = std::vector<std::size_t>{idx[0], idx[1], idx[2]};
  }
  rep.add("twist equation", !w, w);
  return rep;
}

inline Twist make_twist(const HopfSuperAlgebra& a, TensorElement j) {
  auto rep = check_twist(a, j);
  return {std::move(j), std::move(rep)};
}

/// J_B = exp(B~/2) with B~ = sum B_ij y_i (x) y_j.
inline TensorElement twist_JB(const HopfSuperAlgebra& a, const std::vector<Vec>& ys, const Matrix<Scalar>& b) {
  if (b.rows() != ys.size() || b.cols() != ys.size())
    throw Error(ErrorCode::InvalidInput, "B must be dim Y x dim Y");
  if (!(b == b.transpose())) throw Error(ErrorCode::NotSymmetric, "B is not symmetric");
  const TensorAlgebra t(a, 2);
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const auto p = a.parity_of(ys[i]);
    if (!p || *p != 1 || is_zero(ys[i]) || coproduct(a, ys[i]) != t.pure({ys[i], a.unit()}) + t.pure({a.unit(), ys[i]}))
      throw Error(ErrorCode::NotPrimitive, "Y basis vector " + std::to_string(i) + " is not an odd primitive");
  }
  TensorElement bt = t.zero();
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t k = 0; k < ys.size(); ++k)
      if (!b(i, k).is_zero()) bt = bt + b(i, k) * t.pure({ys[i], ys[k]});
  return exp_nilpotent(t, Scalar(Rational(1, 2)) * bt);
}

/// J_V = sum_{chi in Khat} e_chi (x) chi on C[H], H-basis in ascending ambient
/// order; chi = prod c_i^{b_i} pairs with prod k_i^{a_i} to prod zeta_{n_i}^{a_i b_i}.
inline TensorElement twist_JV(const FiniteGroup& g, const SubgroupEmbedding& h, const PolarizationData& pol) {
  if (const auto why = polarization_problem(g, h, pol); !why.empty()) throw Error(ErrorCode::BadPolarization, why);
  const std::size_t r = pol.K.size();
  std::vector<int> orders(r);
  std::size_t size = 1;
  for (std::size_t i = 0; i < r; ++i) {
    orders[i] = g.element_order(pol.K[i]);
    size *= static_cast<std::size_t>(orders[i]);
  }
  auto element = [&](const std::vector<Elem>& gens, std::size_t code, std::vector<int>& digits) {
    Elem x = g.identity();
    for (std::size_t i = r; i-- > 0;) {
      digits[i] = static_cast<int>(code % orders[i]);
      code /= orders[i];
    }
    for (std::size_t i = 0; i < r; ++i) x = g.mul(x, g.power(gens[i], digits[i]));
    return x;
  };
  int n = 1;
  for (int o : orders) n = std::lcm(n, o);
  const Scalar inv_size(Rational(1, static_cast<std::int64_t>(size)));
  const std::size_t d = h.inclusion.size();
  Accumulator acc(d * d);
  std::vector<int> a(r), bdig(r);
  for (std::size_t kc = 0; kc < size; ++kc) {
    const Elem k = element(pol.K, kc, a);
    for (std::size_t cc = 0; cc < size; ++cc) {
      const Elem c = element(pol.Khat, cc, bdig);
      long long e = 0;
      for (std::size_t i = 0; i < r; ++i) e -= static_cast<long long>(a[i]) * bdig[i] * (n / orders[i]);
      acc.add(static_cast<std::uint32_t>(*h.locate(k) * d + *h.locate(c)),
              inv_size * Scalar::root_of_unity(n, static_cast<std::int64_t>(((e % n) + n) % n)));
    }
  }
  return TensorElement(2, d, acc.finish());
}

/// Group algebra C[G] as a purely even Hopf algebra.
inline HopfSuperAlgebra group_algebra(const FiniteGroup& g) {
  return build_supergroup_algebra(g, GroupAction::trivial(g, 0));
}

/// Result of twisting: A^J and, when R was supplied, R^J = J_21^{-1} R J.
struct Twisted {
  HopfSuperAlgebra algebra;
  std::optional<TensorElement> R;
};

/// Delta^J(x) = J^{-1} Delta(x) J, S^J(x) = Q^{-1} S(x) Q with Q = m(S (x) id)(J).
inline Twisted apply_twist(const HopfSuperAlgebra& a, const Twist& j, const std::optional<TensorElement>& r = std::nullopt) {
  if (!j.ok()) throw Error(ErrorCode::InvalidTwist, "twist certificate failing:\n" + j.certificate.summary());
  const TensorAlgebra t(a, 2);
  const auto jinv = t.inverse(j.element);
  auto parts = a.parts();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const TensorElement di(2, a.dim(), a.coproduct(i));
    parts.comult[i] = t.multiply(t.multiply(jinv, di), j.element).entries();
  }
  const Vec q = antipode_multiply(a, j.element, 0);
  const auto qinv = a.inverse(q);
  if (!qinv) throw Error(ErrorCode::InvalidTwist, "m(S (x) id)(J) is not invertible");
  for (std::size_t i = 0; i < a.dim(); ++i)
    parts.antipode[i] = to_sparse(a.multiply(a.multiply(*qinv, to_dense(a.antipode(i), a.dim())), q));
  Twisted out{HopfSuperAlgebra(std::move(parts)), std::nullopt};
  if (r) {
    const auto j21inv = t.inverse(t.flip(j.element));
    out.R = t.multiply(t.multiply(j21inv, *r), j.element);
  }
  return out;
}

/// Gauge element x (epsilon(x) = 1) with J = Delta(x)(x^{-1} (x) x^{-1}) for a
/// symmetric twist J of C[G], G abelian; nullopt when no such x exists.
/// Throws Unsupported when a needed root leaves the representable fields.
inline std::optional<Vec> gauge_element_for_symmetric_twist(const FiniteGroup& g, const TensorElement& j) {
  if (j.arity() != 2 || j.dim() != g.order()) throw Error(ErrorCode::NotGroupAlgebra, "twist is not over C[G]");
  if (!g.is_abelian()) throw Error(ErrorCode::NotGroupAlgebra, "gauge solving needs an abelian group");
  const auto ga = group_algebra(g);
  const TensorAlgebra t(ga, 2);
  if (t.flip(j) != j) throw Error(ErrorCode::NotSymmetric, "twist is not symmetric");

  const auto dec = abelian_decomposition(g);
  const auto& cg = dec.canonical;
  const auto chars = characters(cg);  // chars[b] pairs canonically with b
  const std::size_t n = cg.order();
  // jv[b*n+c] = (chi_b (x) chi_c)(J)
  std::vector<Scalar> jv(n * n);
  for (const auto& e : j.entries()) {
    const auto ij = j.split(e.index);
    const Elem x = dec.to_canonical[ij[0]], y = dec.to_canonical[ij[1]];
    for (Elem b = 0; b < n; ++b) {
      const Scalar cb = e.value * chars[b].value(x);
      for (Elem c = 0; c < n; ++c) jv[b * n + c] += cb * chars[c].value(y);
    }
  }
  for (const auto& v : jv)
    if (v.is_zero()) return std::nullopt;

  const auto& divs = dec.divisors;
  std::vector<Elem> unit_vec(divs.size());
  for (std::size_t i = 0; i < divs.size(); ++i) {
    std::vector<int> c(divs.size(), 0);
    c[i] = 1;
    unit_vec[i] = cg.index_of(c);
  }
  // x(chi_i)^{n_i} = 1 / prod_{k=1}^{n_i-1} j(chi_i^k, chi_i).
  std::vector<Scalar> x(n);
  x[cg.identity()] = Scalar(1);
  for (std::size_t i = 0; i < divs.size(); ++i) {
    Scalar prod(1);
    Elem pw = unit_vec[i];
    for (int k = 1; k < divs[i]; ++k) {
      prod *= jv[pw * n + unit_vec[i]];
      pw = cg.mul(pw, unit_vec[i]);
    }
    auto root = nth_root(prod.inverse(), divs[i]);
    if (!root) throw Error(ErrorCode::Unsupported, "gauge solving needs a root outside the cyclotomic range");
    x[unit_vec[i]] = *root;
  }
  // x(b + e_i) = j(b, e_i) x(b) x(e_i), filled in increasing index order.
  std::vector<bool> done(n, false);
  done[cg.identity()] = true;
  for (std::size_t i = 0; i < divs.size(); ++i) done[unit_vec[i]] = true;
  for (Elem b = 0; b < n; ++b) {
    if (done[b]) continue;
    auto c = cg.coords(b);
    std::size_t i = 0;
    while (c[i] == 0) ++i;
    c[i] -= 1;
    const Elem prev = cg.index_of(c);
    x[b] = jv[prev * n + unit_vec[i]] * x[prev] * x[unit_vec[i]];
    done[b] = true;
  }
  for (Elem b = 0; b < n; ++b)
    for (Elem c = 0; c < n; ++c)
      if (jv[b * n + c] * x[b] * x[c] != x[cg.mul(b, c)]) return std::nullopt;

  // Back to the group basis of G: x = sum_b x_b e_{chi_b}.
  Vec out(g.order());
  const Scalar inv_n(Rational(1, static_cast<std::int64_t>(n)));
  for (Elem b = 0; b < n; ++b)
    for (Elem h = 0; h < n; ++h) out[dec.from_canonical[h]] += x[b] * chars[b].value(cg.inv(h)) * inv_n;
  return out;
}

/// Delta(x)(x^{-1} (x) x^{-1}) J', the gauge transform of J'.
inline TensorElement gauge_transform(const HopfSuperAlgebra& a, const Vec& x, const TensorElement& j) {
  const auto xinv = a.inverse(x);
  if (!xinv) throw Error(ErrorCode::NotInvertible, "gauge element is not invertible");
  const TensorAlgebra t(a, 2);
  return t.multiply(t.multiply(coproduct(a, x), t.pure({*xinv, *xinv})), j);
}

}  // namespace chevhopf
