#include <gtest/gtest.h>

#include "support.hpp"

using namespace chevhopf;
using namespace chevhopf::testing;

namespace {

// Independent oracle: count bijections of {0..n-1} that respect the table.
std::size_t brute_force_automorphisms(const FiniteGroup& g) {
  std::vector<Elem> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool hom = true;
    for (Elem a = 0; a < g.order() && hom; ++a)
      for (Elem b = 0; b < g.order() && hom; ++b) hom = perm[g.mul(a, b)] == g.mul(perm[a], perm[b]);
    count += hom;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

FiniteGroup s3() {
  // Permutations of 3 points, composition table computed directly.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<Elem>> t(6, std::vector<Elem>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(t);
}

}  // namespace

TEST(Groups, AbelianConstruction) {
  const auto z2 = FiniteGroup::abelian({2});
  EXPECT_EQ(z2.table(), (std::vector<std::vector<Elem>>{{0, 1}, {1, 0}}));
  const auto v4 = FiniteGroup::abelian({2, 2});
  for (Elem a = 0; a < 4; ++a) EXPECT_EQ(v4.inv(a), a);
  EXPECT_EQ(FiniteGroup::abelian({}).order(), 1u);
  EXPECT_FALSE(find_isomorphism(FiniteGroup::abelian({4}), v4).has_value());
  EXPECT_TRUE(find_isomorphism(FiniteGroup::abelian({2, 3}), FiniteGroup::abelian({6})).has_value());
  EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}), Error);
}

TEST(Groups, AutomorphismCountsMatchBruteForce) {
  EXPECT_EQ(automorphisms(FiniteGroup::abelian({2})).size(), 1u);
  EXPECT_EQ(automorphisms(FiniteGroup::abelian({4})).size(), 2u);
  EXPECT_EQ(automorphisms(FiniteGroup::abelian({2, 2})).size(), 6u);
  for (const auto& g : {FiniteGroup::abelian({2, 2}), FiniteGroup::abelian({2, 4}), FiniteGroup::abelian({3, 3}),
                        s3(), FiniteGroup::abelian({8})})
    EXPECT_EQ(automorphisms(g).size(), brute_force_automorphisms(g));
  EXPECT_THROW(automorphisms(FiniteGroup::abelian({2, 2, 2, 2, 2}), 1000), Error);
}

TEST(Groups, AutomorphismsAreDeterministicAndStartWithIdentity) {
  const auto g = FiniteGroup::abelian({2, 4});
  const auto a = automorphisms(g);
  EXPECT_EQ(a, automorphisms(g));
  std::vector<Elem> id(g.order());
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(a.front(), id);
}

TEST(Groups, CharactersAndIdempotents) {
  const auto z2 = FiniteGroup::abelian({2});
  const auto e = idempotents(z2);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0], (Vec{Scalar(Rational(1, 2)), Scalar(Rational(1, 2))}));
  EXPECT_EQ(e[1], (Vec{Scalar(Rational(1, 2)), Scalar(Rational(-1, 2))}));

  for (const auto& g : {FiniteGroup::abelian({6}), FiniteGroup::abelian({3}), FiniteGroup::abelian({2, 4}), s3()}) {
    if (!g.is_abelian()) {
      EXPECT_THROW(characters(g), Error);
      continue;
    }
    const auto s = SupergroupAlgebra(g, GroupAction::trivial(g, 0));
    const auto chars = characters(g);
    ASSERT_EQ(chars.size(), g.order());
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) EXPECT_NE(chars[i], chars[j]);
    for (const auto& chi : chars)
      for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b) EXPECT_EQ(chi.value(g.mul(a, b)), chi.value(a) * chi.value(b));
    Vec sum(g.order());
    const auto es = idempotents(g);
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (Elem a = 0; a < g.order(); ++a) sum[a] += es[i][a];
      for (std::size_t j = 0; j < es.size(); ++j) {
        const Vec p = s.algebra().multiply(es[i], es[j]);
        EXPECT_EQ(p, i == j ? es[i] : Vec(g.order()));
      }
    }
    EXPECT_EQ(sum, s.algebra().unit());
  }
}

TEST(Groups, CayleyAbelianCharactersAgreeInCount) {
  // Z/2 x Z/2 supplied as a Cayley table with a non-zero identity index.
  const std::vector<std::vector<Elem>> t{{1, 0, 3, 2}, {0, 1, 2, 3}, {3, 2, 1, 0}, {2, 3, 0, 1}};
  const FiniteGroup g(t);
  EXPECT_EQ(g.identity(), 1u);
  EXPECT_EQ(characters(g).size(), 4u);
}

TEST(Groups, Bicharacters) {
  const auto z2 = FiniteGroup::abelian({2});
  Bicharacter phi(2, 2);
  phi.exp(1, 1) = 1;
  auto r = check_bicharacter(z2, phi);
  EXPECT_TRUE(r.is_bicharacter && r.is_skew && r.is_nondegenerate);

  const auto z4 = FiniteGroup::abelian({4});
  Bicharacter psi(4, 4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) psi.exp(a, b) = static_cast<int>((a * b) % 2) * 2;
  r = check_bicharacter(z4, psi);
  EXPECT_TRUE(r.is_bicharacter && r.is_skew);
  EXPECT_FALSE(r.is_nondegenerate);
  EXPECT_EQ(r.radical, (std::vector<Elem>{0, 2}));

  const auto v4 = FiniteGroup::abelian({2, 2});
  r = check_bicharacter(v4, Bicharacter(2, 4));
  EXPECT_TRUE(r.is_skew);
  EXPECT_FALSE(r.is_nondegenerate);
  EXPECT_TRUE(check_bicharacter(FiniteGroup(), Bicharacter()).is_nondegenerate);
}

TEST(Groups, AutomorphismsPreserveBicharacterRank) {
  const auto g = FiniteGroup::abelian({2, 2});
  Bicharacter phi(2, 4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      const auto ca = g.coords(a), cb = g.coords(b);
      phi.exp(a, b) = (ca[0] * cb[1] + ca[1] * cb[0]) % 2;
    }
  const auto base = check_bicharacter(g, phi);
  for (const auto& alpha : automorphisms(g)) {
    Bicharacter t(2, 4);
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b) t.exp(a, b) = phi.exp(alpha[a], alpha[b]);
    const auto r = check_bicharacter(g, t);
    EXPECT_TRUE(r.is_bicharacter);
    EXPECT_EQ(r.radical.size(), base.radical.size());
  }
}

TEST(Groups, ActionsFromGenerators) {
  const auto g = FiniteGroup::abelian({4});
  const Scalar i = Scalar::root_of_unity(4, 1);
  const auto w = GroupAction::from_generators(g, 2, {1}, {mat({{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}})});
  EXPECT_TRUE(w.is_representation(g));
  EXPECT_EQ(w.matrices[2], Scalar(-1) * Matrix<Scalar>::identity(2));
  EXPECT_THROW(GroupAction::from_generators(g, 1, {1}, {mat({{Scalar(2)}})}), Error);
  EXPECT_TRUE(GroupAction::diagonal(g, characters(g)).is_representation(g));
  (void)i;
}
