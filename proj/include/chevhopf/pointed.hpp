#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "chevhopf/groups.hpp"
#include "chevhopf/isomorphism.hpp"
#include "chevhopf/supergroup.hpp"
#include "chevhopf/triangular.hpp"
#include "chevhopf/twists.hpp"

namespace chevhopf {

struct MinimalityFlags {
  bool minimal = false;
  bool pointed = false;
};

/// minimal iff Y = W and <H, u> = G; pointed additionally needs G abelian.
inline MinimalityFlags minimality_criterion(const TriangularSeptuple& s) {
  std::vector<Elem> gens = s.H_generators;
  gens.push_back(s.u);
  MinimalityFlags f;
  f.minimal = s.dim_Y() == s.dim_W() && s.G.generated(gens).size() == s.G.order();
  f.pointed = f.minimal && s.G.is_abelian();
  return f;
}

/// (G, phi, n): phi skew nondegenerate, n supported on I_phi = {g : phi(g,g) = -1}
/// with n_g = n_{g^-1}.
struct Type2Data {
  FiniteGroup G;
  Bicharacter phi;
  std::vector<int> n;  // indexed by group element
};

namespace detail {

inline int mod(long long x, int n) { return static_cast<int>(((x % n) + n) % n); }

/// Index of the character chi_b equal to phi(g, .), if any.
inline std::optional<std::size_t> character_index(const std::vector<Character>& chars, const Bicharacter& phi,
                                                  Elem g) {
  for (std::size_t b = 0; b < chars.size(); ++b) {
    bool same = true;
    for (Elem h = 0; h < phi.order && same; ++h) same = chars[b].value(h) == phi.value(g, h);
    if (same) return b;
  }
  return std::nullopt;
}

inline Bicharacter normalize(Bicharacter b) {
  for (auto& e : b.exps) e = mod(e, b.n);
  return b;
}

}  // namespace detail

/// R_phi = sum_g e_{phi(g,.)} (x) g; coefficient of h (x) g is phi(g,h)^{-1}/|G|.
inline TensorElement r_matrix_from_bicharacter(const FiniteGroup& g, const Bicharacter& phi) {
  if (!g.is_abelian()) throw Error(ErrorCode::NotAbelian, "R-matrix from a bicharacter needs an abelian group");
  const auto rep = check_bicharacter(g, phi);
  if (!rep.is_bicharacter) throw Error(ErrorCode::InvalidInput, "phi is not a bicharacter");
  if (!rep.is_nondegenerate) throw Error(ErrorCode::Degenerate, "phi(g, .) does not exhaust the dual group");
  const std::size_t d = g.order();
  const Scalar inv(Rational(1, static_cast<std::int64_t>(d)));
  Accumulator acc(d * d);
  for (Elem x = 0; x < d; ++x)
    for (Elem h = 0; h < d; ++h)
      acc.add(static_cast<std::uint32_t>(h * d + x), inv * Scalar::root_of_unity(phi.n, detail::mod(-phi.exp(x, h), phi.n)));
  return TensorElement(2, d, acc.finish());
}

/// Inverse of r_matrix_from_bicharacter on its image.
inline Bicharacter bicharacter_from_r(const FiniteGroup& g, const TensorElement& r) {
  if (!g.is_abelian()) throw Error(ErrorCode::NotAbelian, "bicharacter extraction needs an abelian group");
  const std::size_t d = g.order();
  if (r.arity() != 2 || r.dim() != d) throw Error(ErrorCode::InvalidInput, "R is not a tensor over C[G]");
  const int n = g.exponent();
  std::vector<std::vector<Scalar>> values(d, std::vector<Scalar>(d));
  const Scalar size(static_cast<std::int64_t>(d));
  for (Elem x = 0; x < d; ++x)
    for (Elem h = 0; h < d; ++h) {
      const Scalar c = r.coefficient(h, x) * size;
      if (c.is_zero()) throw Error(ErrorCode::NotDiagonalizable, "R is not of the form sum e_chi (x) g");
      values[x][h] = c.inverse();
    }
  Bicharacter phi;
  try {
    phi = Bicharacter::from_values(values, n);
  } catch (const Error&) {
    throw Error(ErrorCode::NotDiagonalizable, "R coefficients are not roots of unity");
  }
  if (!check_bicharacter(g, phi).is_bicharacter || r_matrix_from_bicharacter(g, phi) != r)
    throw Error(ErrorCode::NotDiagonalizable, "R is not the R-matrix of a nondegenerate bicharacter");
  return detail::normalize(phi);
}

/// The Type 1 datum is a septuple with Y = W, G abelian and G = <H, u>.
inline std::string type1_problem(const TriangularSeptuple& s) {
  if (const auto rep = validate_septuple(s); !rep.ok()) return "septuple fails validation";
  if (!s.G.is_abelian()) return "G is not abelian";
  if (!minimality_criterion(s).minimal) return "Type 1 data needs Y = W and G = <H, u>";
  return "";
}

/// R = R_u (J_V)_21^{-1} J_V on C[G].
inline TensorElement type1_r_matrix(const TriangularSeptuple& s) {
  const auto cg = group_algebra(s.G);
  const TensorAlgebra t(cg, 2);
  const auto h = s.H();
  std::vector<SparseVec> incl;
  for (Elem x : h.inclusion) incl.push_back({{x, Scalar(1)}});
  const TensorElement jv = map_tensor(detail::v_twist(s, h), s.G.order(), incl, incl);
  return t.multiply(r_u(cg, cg.basis(s.u)), t.multiply(t.inverse(t.flip(jv)), jv));
}

inline Type2Data type1_to_type2(const TriangularSeptuple& s) {
  if (const auto why = type1_problem(s); !why.empty()) throw Error(ErrorCode::InvalidInput, why);
  Type2Data out{s.G, bicharacter_from_r(s.G, type1_r_matrix(s)), std::vector<int>(s.G.order(), 0)};
  const auto chars = characters(s.G);
  // Multiplicity of chi in W: |G|^{-1} sum_g chi(g)^{-1} tr rho(g).
  const Scalar inv(Rational(1, static_cast<std::int64_t>(s.G.order())));
  std::size_t total = 0;
  for (const auto& chi : chars) {
    Scalar mult;
    for (Elem x = 0; x < s.G.order(); ++x) {
      Scalar tr;
      for (std::size_t i = 0; i < s.dim_W(); ++i) tr += s.W.matrices[x](i, i);
      mult += chi.value(s.G.inv(x)) * tr * inv;
    }
    const auto m = mult.as_rational();
    if (!m || !m->is_integer()) throw Error(ErrorCode::DecompositionMismatch, "character multiplicity is not an integer");
    const long k = m->numerator().get_si();
    if (k == 0) continue;
    std::optional<Elem> g;
    for (Elem x = 0; x < s.G.order() && !g; ++x)
      if (detail::character_index({chi}, out.phi, x)) g = x;
    if (!g) throw Error(ErrorCode::DecompositionMismatch, "W contains a character not of the form phi(g, .)");
    out.n[*g] = static_cast<int>(k);
    total += static_cast<std::size_t>(k);
  }
  if (total != s.dim_W()) throw Error(ErrorCode::DecompositionMismatch, "W is not a sum of characters");
  for (Elem x = 0; x < s.G.order(); ++x) {
    if (out.n[x] > 0 && out.phi.value(x, x) != Scalar(-1))
      throw Error(ErrorCode::DecompositionMismatch, "n_g > 0 but phi(g, g) != -1");
    if (out.n[x] != out.n[s.G.inv(x)]) throw Error(ErrorCode::DecompositionMismatch, "n_g != n_{g^-1}");
  }
  return out;
}

inline std::string type2_problem(const Type2Data& t) {
  if (!t.G.is_abelian()) return "G is not abelian";
  if (t.phi.order != t.G.order() || t.n.size() != t.G.order()) return "phi or n has the wrong size";
  const auto rep = check_bicharacter(t.G, t.phi);
  if (!rep.is_bicharacter) return "phi is not a bicharacter";
  if (!rep.is_skew) return "phi is not skew";
  if (!rep.is_nondegenerate) return "phi is degenerate";
  for (Elem g = 0; g < t.G.order(); ++g) {
    if (t.n[g] < 0) return "negative multiplicity";
    if (t.n[g] > 0 && t.phi.value(g, g) != Scalar(-1)) return "n is not supported on I_phi";
    if (t.n[g] != t.n[t.G.inv(g)]) return "n_g != n_{g^-1}";
  }
  return "";
}

/// The unique u with phi(u, g) = phi(g, g) for all g.
inline Elem solve_u(const FiniteGroup& g, const Bicharacter& phi) {
  for (Elem u = 0; u < g.order(); ++u) {
    bool ok = true;
    for (Elem x = 0; x < g.order() && ok; ++x) ok = detail::mod(phi.exp(u, x) - phi.exp(x, x), phi.n) == 0;
    if (ok) return u;
  }
  throw Error(ErrorCode::NoSuchU, "no u with phi(u, g) = phi(g, g)");
}

namespace detail {

/// Twist J on C[H] (H abelian) with J21^{-1} J = r, r of the form
/// sum omega(a,b) e_a (x) e_b: J = sum beta(a,b) e_a (x) e_b with beta the
/// upper-triangular half of omega on a generating set of the dual.
inline TensorElement twist_for_alternating(const FiniteGroup& h, const TensorElement& r) {
  const auto dec = abelian_decomposition(h);
  const auto& cg = dec.canonical;
  const auto chars = characters(cg);
  const std::size_t d = h.order();
  const int n = cg.exponent();
  // omega on generators of the dual: (chi_i (x) chi_j)(r).
  const auto& divs = dec.divisors;
  std::vector<Elem> unit(divs.size());
  for (std::size_t i = 0; i < divs.size(); ++i) {
    std::vector<int> c(divs.size(), 0);
    c[i] = 1;
    unit[i] = cg.index_of(c);
  }
  auto pair = [&](Elem a, Elem b) {
    Scalar s;
    for (const auto& t : r.entries()) {
      const auto ij = r.split(t.index);
      s += t.value * chars[a].value(dec.to_canonical[ij[0]]) * chars[b].value(dec.to_canonical[ij[1]]);
    }
    return s;
  };
  std::vector<std::vector<int>> w(divs.size(), std::vector<int>(divs.size(), 0));
  for (std::size_t i = 0; i < divs.size(); ++i)
    for (std::size_t j = i + 1; j < divs.size(); ++j) {
      const auto e = discrete_log(pair(unit[i], unit[j]), n);
      if (!e) throw Error(ErrorCode::NotDiagonalizable, "alternating form value is not a root of unity");
      w[i][j] = *e;
    }
  // beta(a, b) = prod_{i<j} omega_ij^{a_i b_j}; J = sum beta(a,b) e_a (x) e_b.
  std::vector<Vec> idem;
  for (const auto& chi : chars) {
    const Vec e = idempotent(cg, chi);
    Vec back(d);
    for (Elem x = 0; x < d; ++x) back[dec.from_canonical[x]] = e[x];
    idem.push_back(std::move(back));
  }
  Accumulator acc(d * d);
  for (Elem a = 0; a < d; ++a) {
    const auto ca = cg.coords(a);
    for (Elem b = 0; b < d; ++b) {
      const auto cb = cg.coords(b);
      long long e = 0;
      for (std::size_t i = 0; i < divs.size(); ++i)
        for (std::size_t j = i + 1; j < divs.size(); ++j) e += static_cast<long long>(w[i][j]) * ca[i] * cb[j];
      const Scalar beta = Scalar::root_of_unity(n, mod(e, n));
      for (Elem x = 0; x < d; ++x) {
        if (idem[a][x].is_zero()) continue;
        for (Elem y = 0; y < d; ++y)
          if (!idem[b][y].is_zero())
            acc.add(static_cast<std::uint32_t>(x * d + y), beta * idem[a][x] * idem[b][y]);
      }
    }
  }
  return TensorElement(2, d, acc.finish());
}

/// Polarization (K, Khat) of H whose J_V has the alternating form r, searched
/// over generator tuples when the search space is small.
inline std::optional<PolarizationData> find_polarization(const FiniteGroup& g, const SubgroupEmbedding& h,
                                                         const TensorElement& r) {
  const auto dec = abelian_decomposition(h.group);
  std::map<int, int> count;
  for (int d : dec.divisors) ++count[d];
  std::vector<int> korders;
  for (const auto& [d, c] : count) {
    if (c % 2) return std::nullopt;
    for (int i = 0; i < c / 2; ++i) korders.push_back(d);
  }
  const std::size_t k = korders.size();
  std::size_t space = 1;
  for (std::size_t i = 0; i < 2 * k; ++i) space *= h.inclusion.size();
  if (space > 4096) return std::nullopt;
  const auto cg = group_algebra(h.group);
  const TensorAlgebra t(cg, 2);
  std::vector<Elem> pick(2 * k);
  std::optional<PolarizationData> found;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == 2 * k) {
      PolarizationData p;
      for (std::size_t j = 0; j < k; ++j) {
        p.K.push_back(h.inclusion[pick[j]]);
        p.Khat.push_back(h.inclusion[pick[k + j]]);
      }
      if (!polarization_problem(g, h, p).empty()) return;
      const auto jv = twist_JV(g, h, p);
      if (t.multiply(t.inverse(t.flip(jv)), jv) == r) found = p;
      return;
    }
    for (Elem x = 0; x < h.inclusion.size(); ++x) {
      if (h.group.element_order(x) != korders[i % k]) continue;
      pick[i] = x;
      rec(i + 1);
      if (found) return;
    }
  };
  rec(0);
  return found;
}

}  // namespace detail

/// W = sum_g n_g phi(g, .) with blocks in increasing g; the invariant inner
/// product pairs copy i of g with copy i of g^{-1}, and B is its inverse.
inline TriangularSeptuple type2_to_type1(const Type2Data& t) {
  if (const auto why = type2_problem(t); !why.empty()) throw Error(ErrorCode::InvalidInput, why);
  const auto& g = t.G;
  TriangularSeptuple s;
  s.G = g;
  s.u = solve_u(g, t.phi);

  // R_phi R_u^{-1} = R_phi R_u lives on C[H], H its support subgroup.
  const auto cg = group_algebra(g);
  const TensorAlgebra tg(cg, 2);
  const TensorElement rv = tg.multiply(r_matrix_from_bicharacter(g, t.phi), r_u(cg, cg.basis(s.u)));
  const auto support = minimal_part(cg, rv);
  std::vector<Elem> helems;
  for (Elem x = 0; x < g.order(); ++x) {
    bool in = false;
    for (std::size_t i = 0; i < support.dim() && !in; ++i) in = !support.vector(i)[x].is_zero();
    if (in) helems.push_back(x);
  }
  const auto h = SubgroupEmbedding::from_elements(g, helems);
  if (h.inclusion.size() != support.dim()) throw Error(ErrorCode::NotDiagonalizable, "support of R_phi R_u is not a subgroup algebra");
  s.H_generators = h.group.greedy_generators();
  for (auto& x : s.H_generators) x = h.inclusion[x];
  std::vector<SparseVec> back(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    if (auto l = h.locate(x)) back[x] = {{*l, Scalar(1)}};
  const TensorElement rh = map_tensor(rv, h.inclusion.size(), back, back);
  if (auto pol = detail::find_polarization(g, h, rh)) {
    s.V = *pol;
  } else {
    s.V = ExplicitTwist{detail::twist_for_alternating(h.group, rh)};
  }

  std::vector<Character> chars;
  const auto all = characters(g);
  std::vector<Elem> block_of;
  for (Elem x = 0; x < g.order(); ++x)
    for (int c = 0; c < t.n[x]; ++c) {
      const auto b = detail::character_index(all, t.phi, x);
      chars.push_back(all[*b]);
      block_of.push_back(x);
    }
  s.W = GroupAction::diagonal(g, chars);
  const std::size_t m = chars.size();
  s.Y = Matrix<Scalar>::identity(m);
  s.B = Matrix<Scalar>(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    // copy index of i within its block, matched to the same copy of the inverse block.
    const Elem x = block_of[i];
    const std::size_t copy = i - static_cast<std::size_t>(std::find(block_of.begin(), block_of.end(), x) - block_of.begin());
    const auto first = static_cast<std::size_t>(std::find(block_of.begin(), block_of.end(), g.inv(x)) - block_of.begin());
    s.B(i, first + copy) = Scalar(1);
  }
  return s;
}

/// Type 2 data are isomorphic when some automorphism carries (phi, n) to (phi', n').
inline bool type2_isomorphic(const Type2Data& a, const Type2Data& b) {
  const auto pa = detail::normalize(a.phi), pb = detail::normalize(b.phi);
  if (pa.n != pb.n) return false;
  bool found = false;
  for_each_isomorphism(a.G, b.G, [&](const std::vector<Elem>& m) {
    for (Elem x = 0; x < a.G.order(); ++x) {
      if (a.n[x] != b.n[m[x]]) return true;
      for (Elem y = 0; y < a.G.order(); ++y)
        if (pa.exp(x, y) != pb.exp(m[x], m[y])) return true;
    }
    found = true;
    return false;
  });
  return found;
}

namespace detail {

using Type2Key = std::pair<std::vector<int>, std::vector<int>>;

inline Type2Key type2_key(const Bicharacter& phi, const std::vector<int>& n, const std::vector<Elem>& alpha) {
  // (alpha . phi)(g, h) = phi(alpha^-1 g, alpha^-1 h); pulling back by alpha is the same orbit.
  Type2Key k;
  const std::size_t d = n.size();
  k.first.resize(d * d);
  k.second.resize(d);
  for (Elem x = 0; x < d; ++x) {
    k.second[x] = n[alpha[x]];
    for (Elem y = 0; y < d; ++y) k.first[x * d + y] = phi.exp(alpha[x], alpha[y]);
  }
  return k;
}

}  // namespace detail

/// All minimal pointed data on G = Z/a x Z/b x ... with sum n <= max_n, one
/// lexicographically minimal representative per Aut(G)-orbit, sorted.
inline std::vector<Type2Data> enumerate_minimal_pointed(const std::vector<int>& invariants, int max_n) {
  const auto g = FiniteGroup::abelian(invariants);
  if (g.order() > 32) throw Error(ErrorCode::TooLarge, "enumeration limited to |G| <= 32");
  if (max_n < 0) throw Error(ErrorCode::InvalidInput, "max-n must be nonnegative");
  const int n = g.exponent();
  const std::size_t r = invariants.size(), d = g.order();
  const auto autos = automorphisms(g);

  // Generator-pair exponents a_ij mod n with n_i a_ij = 0, a_ji = -a_ij, 2 a_ii = 0.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) slots.emplace_back(i, j);
  std::vector<std::vector<int>> choices(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const auto [i, j] = slots[s];
    const int step = n / std::gcd(invariants[i], invariants[j]);
    for (int a = 0; a < n; a += step)
      if (i != j || (2 * a) % n == 0) choices[s].push_back(a);
  }
  std::map<detail::Type2Key, Type2Data> reps;
  std::vector<int> a(slots.size());
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (s < slots.size()) {
      for (int v : choices[s]) {
        a[s] = v;
        rec(s + 1);
      }
      return;
    }
    std::vector<std::vector<int>> m(r, std::vector<int>(r));
    for (std::size_t q = 0; q < slots.size(); ++q) {
      const auto [i, j] = slots[q];
      m[i][j] = a[q];
      m[j][i] = detail::mod(-a[q], n);
    }
    Bicharacter phi(n, d);
    for (Elem x = 0; x < d; ++x) {
      const auto cx = g.coords(x);
      for (Elem y = 0; y < d; ++y) {
        const auto cy = g.coords(y);
        long long e = 0;
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) e += static_cast<long long>(cx[i]) * cy[j] * m[i][j];
        phi.exp(x, y) = detail::mod(e, n);
      }
    }
    const auto rep = check_bicharacter(g, phi);
    if (!rep.is_bicharacter || !rep.is_skew || !rep.is_nondegenerate) return;
    // Multiplicities: choose n on representatives of {g, g^-1} inside I_phi.
    std::vector<Elem> orbit_reps;
    for (Elem x = 0; x < d; ++x)
      if (phi.value(x, x) == Scalar(-1) && x <= g.inv(x)) orbit_reps.push_back(x);
    std::vector<int> mult(d, 0);
    std::function<void(std::size_t, int)> fill = [&](std::size_t k, int budget) {
      if (k == orbit_reps.size()) {
        detail::Type2Key best;
        bool first = true;
        for (const auto& alpha : autos) {
          auto key = detail::type2_key(phi, mult, alpha);
          if (first || key < best) best = std::move(key);
          first = false;
        }
        if (reps.count(best)) return;
        Bicharacter canon(n, d);
        canon.exps = best.first;
        reps.emplace(best, Type2Data{g, canon, best.second});
        return;
      }
      const Elem x = orbit_reps[k];
      const int cost = x == g.inv(x) ? 1 : 2;
      for (int c = 0; c * cost <= budget; ++c) {
        mult[x] = mult[g.inv(x)] = c;
        fill(k + 1, budget - c * cost);
      }
      mult[x] = mult[g.inv(x)] = 0;
    };
    fill(0, max_n);
  };
  rec(0);
  std::vector<Type2Data> out;
  for (auto& [k, v] : reps) out.push_back(std::move(v));
  return out;
}

}  // namespace chevhopf
