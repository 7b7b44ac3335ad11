#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "support.hpp"

using namespace chevhopf;
using namespace chevhopf::testing;

namespace {

std::size_t nonzero_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

Scalar det2(const Matrix<Scalar>& b) { return b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0); }

}  // namespace

TEST(Supergroup, DimensionAndGroupLikes) {
  for (const auto& e : corpus()) {
    const SupergroupAlgebra sg(e.s.G, e.s.W);
    EXPECT_EQ(sg.algebra().dim(), e.s.G.order() << e.s.dim_W()) << e.name;
  }
  const SupergroupAlgebra sg(FiniteGroup::abelian({2, 2}), GroupAction::trivial(FiniteGroup::abelian({2, 2}), 2));
  EXPECT_EQ(group_like_count(sg.algebra()), 4u);
  EXPECT_TRUE(check_hopf_axioms(sg.algebra()).ok());
}

TEST(Supergroup, OddElementsAreOddPrimitives) {
  const auto s = sign_septuple(2, 2, Matrix<Scalar>::identity(2));
  const SupergroupAlgebra sg(s.G, s.W);
  const auto& a = sg.algebra();
  const TensorAlgebra t(a, 2);
  const Vec y = sg.odd_element({Scalar(1), Scalar(2)});
  EXPECT_EQ(a.parity_of(y), Parity{1});
  EXPECT_EQ(coproduct(a, y), t.pure({y, a.unit()}) + t.pure({a.unit(), y}));
  // g y g^-1 = -y for the sign action.
  const Vec g = sg.group_element(1);
  Vec neg = y;
  for (auto& c : neg) c = -c;
  EXPECT_EQ(a.multiply(a.multiply(g, y), g), neg);
  EXPECT_TRUE(is_zero(a.multiply(y, y)));
}

TEST(Supergroup, ValidationNegatives) {
  auto s = sweedler_septuple();
  EXPECT_TRUE(validate_septuple(s).ok());

  auto bad = s;
  bad.B = scalar_matrix(1, Scalar());
  EXPECT_FALSE(validate_septuple(bad).ok());  // singular B

  bad = sign_septuple(2, 2, Matrix<Scalar>::from_rows({{Scalar(1), Scalar(1)}, {Scalar(), Scalar(1)}}, 2));
  EXPECT_FALSE(validate_septuple(bad).ok());  // not symmetric

  bad = s;
  bad.u = 0;
  EXPECT_FALSE(validate_septuple(bad).ok());  // u must act by -1 on W

  bad = s;
  bad.H_generators = {1};
  bad.V = PolarizationData{};
  EXPECT_FALSE(validate_septuple(bad).ok());  // |H| = 2 is not a square

  auto k = klein_septuple(1, 0);
  k.V = PolarizationData{{1}, {1}};
  EXPECT_FALSE(validate_septuple(k).ok());  // K and Khat overlap

  // Y not H-stable: Z/2 x Z/2 with H = G acting on W = C^2 by swapping,
  // Y the first coordinate line.
  TriangularSeptuple sw;
  sw.G = FiniteGroup::abelian({2, 2});
  const Matrix<Scalar> swap = mat({{Scalar(), Scalar(1)}, {Scalar(1), Scalar()}});
  const Matrix<Scalar> minus = scalar_matrix(2, Scalar(-1));
  sw.W = GroupAction::from_generators(sw.G, 2, {1, 2}, {minus, swap});
  sw.H_generators = {2, 1};
  sw.V = PolarizationData{{2}, {1}};
  sw.Y = mat({{Scalar(1), Scalar()}});
  sw.B = scalar_matrix(1, Scalar(1));
  sw.u = 1;
  EXPECT_FALSE(validate_septuple(sw).ok());
}

TEST(Twists, JBOracleOneOdd) {
  // J_B = 1 (x) 1 + (b/2) y (x) y, since (y (x) y)^2 = -y^2 (x) y^2 = 0.
  const auto s = sweedler_septuple(Scalar(3));
  const SupergroupAlgebra sg(s.G, s.W);
  const auto& a = sg.algebra();
  const Vec y = sg.odd_element({Scalar(1)});
  const TensorAlgebra t(a, 2);
  const auto j = twist_JB(a, {y}, s.B);
  EXPECT_EQ(j, t.unit() + Scalar(Rational(3, 2)) * t.pure({y, y}));
  EXPECT_TRUE(check_twist(a, j).ok());
}

TEST(Twists, JBOracleTwoOdd) {
  // Coefficient of y1y2 (x) y1y2 in exp(B~/2) is -det(B)/4.
  const std::vector<Matrix<Scalar>> bs{
      mat({{Scalar(1), Scalar()}, {Scalar(), Scalar(1)}}),
      mat({{Scalar(2), Scalar(3)}, {Scalar(3), Scalar(-1)}}),
      mat({{Scalar(), Scalar(1)}, {Scalar(1), Scalar()}}),
      mat({{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}}),  // singular
  };
  const auto s = sign_septuple(2, 2, bs[0]);
  const SupergroupAlgebra sg(s.G, s.W);
  const auto& a = sg.algebra();
  const Vec y1 = sg.odd_element({Scalar(1), Scalar()}), y2 = sg.odd_element({Scalar(), Scalar(1)});
  const Vec y12 = a.multiply(y1, y2);
  const std::size_t k = nonzero_index(y12);
  ASSERT_TRUE(y12[k].is_one());
  for (const auto& b : bs) {
    const auto j = twist_JB(a, {y1, y2}, b);
    EXPECT_EQ(sparse_get(j.entries(), j.flat(k, k)), Scalar(Rational(-1, 4)) * det2(b));
    EXPECT_EQ(sparse_get(j.entries(), j.flat(nonzero_index(y1), nonzero_index(y2))), b(0, 1) / Scalar(2));
    EXPECT_TRUE(check_twist(a, j).ok());
  }
}

TEST(Twists, JBRejectsNonSymmetric) {
  const auto s = sign_septuple(2, 2, Matrix<Scalar>::identity(2));
  const SupergroupAlgebra sg(s.G, s.W);
  const Vec y1 = sg.odd_element({Scalar(1), Scalar()}), y2 = sg.odd_element({Scalar(), Scalar(1)});
  try {
    twist_JB(sg.algebra(), {y1, y2}, mat({{Scalar(1), Scalar(2)}, {Scalar(), Scalar(1)}}));
    FAIL() << "expected NotSymmetric";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
}

TEST(Twists, JVIsTwist) {
  for (const std::vector<int>& k : {std::vector<int>{2}, {3}, {2, 2}}) {
    std::vector<int> inv = k;
    inv.insert(inv.end(), k.begin(), k.end());
    const auto g = FiniteGroup::abelian(inv);
    PolarizationData pol;
    std::vector<int> c(inv.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
      std::fill(c.begin(), c.end(), 0);
      c[i] = 1;
      pol.K.push_back(g.index_of(c));
      std::fill(c.begin(), c.end(), 0);
      c[i + k.size()] = 1;
      pol.Khat.push_back(g.index_of(c));
    }
    std::vector<Elem> all(g.order());
    for (Elem x = 0; x < all.size(); ++x) all[x] = x;
    const auto h = SubgroupEmbedding::from_elements(g, all);
    const auto j = twist_JV(g, h, pol);
    const auto ga = group_algebra(g);
    EXPECT_TRUE(check_twist(ga, j).ok()) << "|K| = " << g.order();
    // Nondegenerate: the alternating form J21^-1 J is not symmetric-trivial.
    const TensorAlgebra t(ga, 2);
    EXPECT_NE(t.multiply(t.inverse(t.flip(j)), j), t.unit());
  }
}

TEST(Twists, CounitNormalizationNegative) {
  const auto ga = group_algebra(FiniteGroup::abelian({2}));
  const TensorAlgebra t(ga, 2);
  const auto rep = check_twist(ga, Scalar(2) * t.unit());
  EXPECT_FALSE(rep.passed("counit left"));
  EXPECT_THROW(apply_twist(ga, make_twist(ga, Scalar(2) * t.unit())), Error);
}

TEST(Twists, ApplyTwistKeepsAxioms) {
  for (const auto& e : corpus()) {
    if (e.s.G.order() << e.s.dim_W() > 16) continue;
    const auto b = build_A_of_S(e.s);
    EXPECT_TRUE(check_hopf_axioms(b.super_algebra).ok()) << e.name;
    EXPECT_TRUE(check_triangular(b.super_algebra, b.super_R).ok()) << e.name;
  }
}

TEST(Twists, GaugeRoundTrip) {
  // x with rational values on the idempotents, so every root stays rational.
  std::mt19937 rng(11);
  for (const std::vector<int>& inv : {std::vector<int>{2}, {2, 2}, {4}, {3}}) {
    const auto g = FiniteGroup::abelian(inv);
    const auto ga = group_algebra(g);
    const auto es = idempotents(g);
    const TensorAlgebra t(ga, 2);
    for (int trial = 0; trial < 3; ++trial) {
      std::uniform_int_distribution<int> num(1, 5);
      Vec x(g.order());
      for (std::size_t i = 0; i < es.size(); ++i) {
        // the trivial character's idempotent carries epsilon(x) = 1
        const Scalar c = characters(g)[i].is_trivial() ? Scalar(1) : Scalar(Rational(num(rng), num(rng)));
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += c * es[i][k];
      }
      const auto j = gauge_transform(ga, x, t.unit());
      ASSERT_TRUE(check_twist(ga, j).ok());
      ASSERT_EQ(t.flip(j), j);
      const auto xs = gauge_element_for_symmetric_twist(g, j);
      ASSERT_TRUE(xs.has_value());
      EXPECT_EQ(ga.apply_counit(*xs), Scalar(1));
      EXPECT_EQ(gauge_transform(ga, *xs, t.unit()), j);
    }
  }
}

TEST(Chevalley, RadicalOracles) {
  // C[G] semisimple; exterior algebra of dim 3 has radical of dim 7 and R^4 = 0.
  EXPECT_EQ(jacobson_radical(group_algebra(symmetric3())).dim(), 0u);
  const auto triv = FiniteGroup::abelian({});
  const auto ext = build_supergroup_algebra(triv, GroupAction::trivial(triv, 3));
  const auto rad = jacobson_radical(ext);
  EXPECT_EQ(rad.dim(), 7u);
  EXPECT_EQ(nilpotency_index(ext, rad), 4u);
  EXPECT_TRUE(chevalley_check(ext).chevalley);

  const auto h4 = sweedler_h4();
  const auto r = chevalley_check(h4);
  EXPECT_EQ(r.radical.dim(), 2u);
  EXPECT_FALSE(r.semisimple);
  EXPECT_TRUE(r.chevalley);
  EXPECT_EQ(nilpotency_index(h4, r.radical), 2u);
  EXPECT_TRUE(quotient_is_commutative(h4, r.radical));
  EXPECT_EQ(group_like_count(h4), 2u);
}

TEST(Chevalley, BasisChangeInvariance) {
  std::mt19937 rng(3);
  const auto h4 = sweedler_h4();
  ASSERT_TRUE(check_hopf_axioms(h4).ok());
  for (int trial = 0; trial < 8; ++trial) {
    // Keep the unit first so e'_0 = 1; the rest is a random invertible mix.
    std::vector<Vec> cols{h4.unit()};
    Matrix<Scalar> m = Matrix<Scalar>::identity(4);
    do {
      cols.resize(1);
      for (int i = 1; i < 4; ++i) {
        Vec v(4);
        for (int k = 1; k < 4; ++k) v[k] = small_scalar(rng);
        cols.push_back(v);
      }
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) m(k, i) = cols[i][k];
    } while (determinant(m).is_zero());
    const auto b = change_basis(h4, cols);
    EXPECT_TRUE(check_hopf_axioms(b).ok());
    const auto r = chevalley_check(b);
    EXPECT_EQ(r.radical.dim(), 2u);
    EXPECT_TRUE(r.chevalley);
  }
}
