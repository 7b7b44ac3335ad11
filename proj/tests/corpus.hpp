#pragma once

#include <string>
#include <vector>

#include "chevhopf/chevhopf.hpp"

namespace chevhopf::testing {

/// Named septuple with the structural facts the tests compare against.
struct CorpusEntry {
  std::string name;
  TriangularSeptuple s;
  bool twisted = false;
};

inline Matrix<Scalar> scalar_matrix(std::size_t n, const Scalar& c) { return c * Matrix<Scalar>::identity(n); }

/// S3 as permutations of {0,1,2}, identity first.
inline FiniteGroup symmetric3() {
  const std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<Elem>> table(6, std::vector<Elem>(6));
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (Elem k = 0; k < 6; ++k)
        if (perms[k] == c) table[a][b] = k;
    }
  return FiniteGroup(table);
}

/// a x b with (x, y) at index x * |b| + y.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t nb = b.order(), n = a.order() * nb;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      table[i][j] = static_cast<Elem>(a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb));
  return FiniteGroup(table);
}

/// W = sum of characters given by their values on each element.
inline GroupAction character_sum(const FiniteGroup& g, const std::vector<std::vector<Scalar>>& chars) {
  GroupAction w{chars.size(), {}};
  for (Elem x = 0; x < g.order(); ++x) {
    Matrix<Scalar> m(chars.size(), chars.size());
    for (std::size_t i = 0; i < chars.size(); ++i) m(i, i) = chars[i][x];
    w.matrices.push_back(std::move(m));
  }
  return w;
}

inline TriangularSeptuple sign_septuple(std::size_t m, std::size_t dim_y, Matrix<Scalar> b) {
  TriangularSeptuple s;
  s.G = FiniteGroup::abelian({2});
  s.W = GroupAction::from_generators(s.G, m, {1}, {scalar_matrix(m, Scalar(-1))});
  s.Y = Matrix<Scalar>(dim_y, m);
  for (std::size_t i = 0; i < dim_y; ++i) s.Y(i, i) = Scalar(1);
  s.B = std::move(b);
  s.u = 1;
  return s;
}

inline TriangularSeptuple sweedler_septuple(const Scalar& b = Scalar(1)) {
  return sign_septuple(1, 1, scalar_matrix(1, b));
}

/// Klein four with H = G polarized as <(1,0)> x <(0,1)>, W a sum of copies
/// of the character that is -1 on u.
inline TriangularSeptuple klein_septuple(Elem u, std::size_t copies) {
  TriangularSeptuple s;
  s.G = FiniteGroup::abelian({2, 2});
  std::vector<Scalar> chi(4);
  // chi(x) = (-1)^{c.x} with c chosen so that c.u = 1.
  const auto cu = s.G.coords(u);
  const std::vector<int> c = cu[0] ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
  for (Elem x = 0; x < 4; ++x) {
    const auto cx = s.G.coords(x);
    chi[x] = ((c[0] * cx[0] + c[1] * cx[1]) % 2) ? Scalar(-1) : Scalar(1);
  }
  if (u == 0) copies = 0;
  s.W = character_sum(s.G, std::vector<std::vector<Scalar>>(copies, chi));
  s.H_generators = {2, 1};
  s.Y = Matrix<Scalar>::identity(copies);
  s.B = Matrix<Scalar>::identity(copies);
  s.V = PolarizationData{{2}, {1}};
  s.u = u;
  return s;
}

/// The corpus used by the axiom, Drinfeld, minimality and bosonization suites.
inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  {
    TriangularSeptuple s;
    s.G = FiniteGroup::abelian({});
    s.W = GroupAction::trivial(s.G, 0);
    s.u = 0;
    out.push_back({"trivial", s, false});
  }
  {
    TriangularSeptuple s;
    s.G = FiniteGroup::abelian({2});
    s.W = GroupAction::trivial(s.G, 0);
    s.u = 0;
    out.push_back({"Z2 u=1", s, false});
    s.u = 1;
    out.push_back({"Z2 u=g", s, false});
  }
  out.push_back({"sweedler", sweedler_septuple(), true});
  out.push_back({"Z2 W=2 Y=W B=I", sign_septuple(2, 2, Matrix<Scalar>::identity(2)), true});
  out.push_back({"Z2 W=2 Y=1", sign_septuple(2, 1, scalar_matrix(1, Scalar(Rational(1, 2)))), true});
  out.push_back({"Z2 W=2 Y=0", sign_septuple(2, 0, Matrix<Scalar>(0, 0)), false});
  out.push_back({"Z2 W=3 Y=W", sign_septuple(3, 3, Matrix<Scalar>::from_rows({{Scalar(1), Scalar(1), Scalar()},
                                                                             {Scalar(1), Scalar(-1), Scalar()},
                                                                             {Scalar(), Scalar(), Scalar(3)}},
                                                                            3)),
                 true});
  out.push_back({"Klein u=1", klein_septuple(0, 0), true});
  out.push_back({"Klein u=(0,1)", klein_septuple(1, 0), true});
  out.push_back({"Klein W=1", klein_septuple(1, 1), true});
  out.push_back({"Klein W=2", klein_septuple(3, 2), true});
  {
    // Z/4 with W = i (+) -i, u = 2, B pairing the two lines; <u> != G.
    TriangularSeptuple s;
    s.G = FiniteGroup::abelian({4});
    std::vector<Scalar> a(4), b(4);
    for (Elem x = 0; x < 4; ++x) {
      a[x] = Scalar::root_of_unity(4, x);
      b[x] = Scalar::root_of_unity(4, -static_cast<std::int64_t>(x));
    }
    s.W = character_sum(s.G, {a, b});
    s.Y = Matrix<Scalar>::identity(2);
    s.B = Matrix<Scalar>::from_rows({{Scalar(), Scalar(1)}, {Scalar(1), Scalar()}}, 2);
    s.u = 2;
    out.push_back({"Z4 W=2", s, true});
  }
  {
    // Z/2^3: H = <e1, e2> polarized, u = e3, W = two copies of the sign on e3.
    TriangularSeptuple s;
    s.G = FiniteGroup::abelian({2, 2, 2});
    std::vector<Scalar> chi(8);
    for (Elem x = 0; x < 8; ++x) chi[x] = s.G.coords(x)[2] ? Scalar(-1) : Scalar(1);
    s.W = character_sum(s.G, {chi, chi});
    s.H_generators = {4, 2};
    s.Y = Matrix<Scalar>::identity(2);
    s.B = Matrix<Scalar>::from_rows({{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(1)}}, 2);
    s.V = PolarizationData{{4}, {2}};
    s.u = 1;
    out.push_back({"Z2^3 W=2", s, true});
  }
  {
    TriangularSeptuple s;
    s.G = symmetric3();
    s.W = GroupAction::trivial(s.G, 0);
    s.u = 0;
    out.push_back({"S3", s, false});
  }
  {
    // S3 x Z/2, u = (e, 1), W the sign of the Z/2 factor.
    TriangularSeptuple s;
    s.G = direct_product(symmetric3(), FiniteGroup::abelian({2}));
    std::vector<Scalar> chi(12);
    for (Elem x = 0; x < 12; ++x) chi[x] = (x % 2) ? Scalar(-1) : Scalar(1);
    s.W = character_sum(s.G, {chi});
    s.Y = Matrix<Scalar>::identity(1);
    s.B = Matrix<Scalar>::identity(1);
    s.u = 1;
    out.push_back({"S3xZ2 W=1", s, true});
  }
  return out;
}

/// New structure constants after the basis change e'_i = sum_k cols[i][k] e_k.
inline HopfSuperAlgebra change_basis(const HopfSuperAlgebra& a, const std::vector<Vec>& cols,
                                     std::vector<Parity> parity = {}) {
  const std::size_t d = a.dim();
  Matrix<Scalar> m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) m(k, i) = cols[i][k];
  const auto minv = *inverse(m);
  auto to_new = [&](const Vec& v) { return to_sparse(minv * v); };
  HopfSuperAlgebra::Parts p;
  p.parity = parity.empty() ? a.parity() : parity;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p.mult.push_back(to_new(a.multiply(cols[i], cols[j])));
  p.unit = minv * a.unit();
  p.counit.resize(d);
  for (std::size_t i = 0; i < d; ++i) p.counit[i] = a.apply_counit(cols[i]);
  std::vector<SparseVec> colsp;
  for (std::size_t i = 0; i < d; ++i) colsp.push_back(to_sparse(minv.column(i)));
  for (std::size_t i = 0; i < d; ++i) {
    const auto dv = coproduct(a, cols[i]);
    p.comult.push_back(map_tensor(dv, d, colsp, colsp).entries());
    p.antipode.push_back(to_new(a.apply_antipode(cols[i])));
  }
  return HopfSuperAlgebra(std::move(p));
}

/// Sweedler's algebra on the basis 1, g, x, gx: g^2 = 1, x^2 = 0, xg = -gx,
/// Delta x = x (x) g + 1 (x) x, S(x) = -xg.
inline HopfSuperAlgebra sweedler_h4() {
  HopfSuperAlgebra::Parts p;
  p.parity.assign(4, 0);
  p.mult.resize(16);
  auto set = [&](int i, int j, int k, int s) { p.mult[i * 4 + j] = {{static_cast<std::uint32_t>(k), Scalar(s)}}; };
  // words g^a x^b at index a + 2b: 1 = 0, g = 1, x = 2, gx = 3.
  set(0, 0, 0, 1), set(0, 1, 1, 1), set(0, 2, 2, 1), set(0, 3, 3, 1);
  set(1, 0, 1, 1), set(1, 1, 0, 1), set(1, 2, 3, 1), set(1, 3, 2, 1);
  set(2, 0, 2, 1), set(2, 1, 3, -1);  // x g = -g x
  set(3, 0, 3, 1), set(3, 1, 2, -1);  // g x g = -x
  p.unit = {Scalar(1), Scalar(), Scalar(), Scalar()};
  p.counit = {Scalar(1), Scalar(1), Scalar(), Scalar()};
  p.comult.resize(4);
  p.comult[0] = {{0, Scalar(1)}};
  p.comult[1] = {{5, Scalar(1)}};
  p.comult[2] = {{2, Scalar(1)}, {9, Scalar(1)}};   // 1(x)x + x(x)g
  p.comult[3] = {{7, Scalar(1)}, {12, Scalar(1)}};  // g(x)gx + gx(x)1
  p.antipode = {{{0, Scalar(1)}}, {{1, Scalar(1)}}, {{3, Scalar(1)}}, {{2, Scalar(-1)}}};  // S(x) = gx, S(gx) = -x
  return HopfSuperAlgebra(std::move(p));
}

/// Solutions of Delta(v) = v (x) g + 1 (x) v lying in the radical, which
/// drops the trivial skew primitive 1 - g.
inline std::vector<Vec> skew_primitives(const HopfSuperAlgebra& a, const Vec& g) {
  const std::size_t d = a.dim();
  const TensorAlgebra t(a, 2);
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < d; ++i) {
    const Vec e = a.basis(i);
    cols.push_back(to_dense((coproduct(a, e) - t.pure({e, g}) - t.pure({a.unit(), e})).entries(), d * d));
  }
  Matrix<Scalar> m(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d * d; ++k) m(k, i) = cols[i][k];
  const auto all = nullspace(m);
  const auto ann = jacobson_radical(a).annihilator();
  if (ann.empty()) return all;
  Matrix<Scalar> c(ann.size(), all.size());
  for (std::size_t r = 0; r < ann.size(); ++r)
    for (std::size_t j = 0; j < all.size(); ++j)
      for (std::size_t k = 0; k < d; ++k) c(r, j) += ann[r][k] * all[j][k];
  std::vector<Vec> out;
  for (const auto& w : nullspace(c)) {
    Vec v(d);
    for (std::size_t j = 0; j < all.size(); ++j)
      for (std::size_t k = 0; k < d; ++k) v[k] += w[j] * all[j][k];
    out.push_back(std::move(v));
  }
  return out;
}

inline std::optional<Vec> nontrivial_group_like(const HopfSuperAlgebra& a) {
  const TensorAlgebra t(a, 2);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (int sign : {1, -1}) {
      Vec e = a.basis(i);
      e[i] = Scalar(sign);
      if (e != a.unit() && coproduct(a, e) == t.pure({e, e})) return e;
    }
  return std::nullopt;
}

inline TensorElement transport(const TensorElement& r, const std::vector<Vec>& cols) {
  const std::size_t d = cols.size();
  Matrix<Scalar> m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) m(k, i) = cols[i][k];
  const auto minv = *inverse(m);
  std::vector<SparseVec> f;
  for (std::size_t i = 0; i < d; ++i) f.push_back(to_sparse(minv.column(i)));
  return map_tensor(r, d, f, f);
}

}  // namespace chevhopf::testing
