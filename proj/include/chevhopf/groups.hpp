#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "chevhopf/cyclotomic.hpp"
#include "chevhopf/errors.hpp"
#include "chevhopf/linalg.hpp"
#include "chevhopf/sparse.hpp"

namespace chevhopf {

using Elem = std::uint32_t;

/// Finite group given by its Cayley table.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(std::vector<std::vector<Elem>>{{0}}) {}

  /// Validates the group axioms on the table.
  explicit FiniteGroup(std::vector<std::vector<Elem>> table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw Error(ErrorCode::InvalidInput, "empty Cayley table");
    for (const auto& row : table_) {
      if (row.size() != n) throw Error(ErrorCode::InvalidInput, "Cayley table is not square");
      std::vector<bool> seen(n, false);
      for (auto x : row) {
        if (x >= n) throw Error(ErrorCode::InvalidInput, "Cayley table entry out of range");
        if (seen[x]) throw Error(ErrorCode::InvalidInput, "Cayley table row is not a permutation");
        seen[x] = true;
      }
    }
    std::optional<Elem> e;
    for (Elem a = 0; a < n && !e; ++a) {
      bool ok = true;
      for (Elem b = 0; b < n && ok; ++b) ok = table_[a][b] == b && table_[b][a] == b;
      if (ok) e = a;
    }
    if (!e) throw Error(ErrorCode::InvalidInput, "Cayley table has no identity");
    identity_ = *e;
    inverse_.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
      bool found = false;
      for (Elem b = 0; b < n && !found; ++b)
        if (table_[a][b] == identity_ && table_[b][a] == identity_) {
          inverse_[a] = b;
          found = true;
        }
      if (!found) throw Error(ErrorCode::InvalidInput, "element without inverse in Cayley table");
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw Error(ErrorCode::InvalidInput, "Cayley table is not associative");
    compute_orders();
  }

  /// Direct product Z/n_1 x ... x Z/n_r, element (a_1..a_r) at mixed-radix
  /// index ((a_1 n_2 + a_2) n_3 + ...), last factor fastest.
  static FiniteGroup abelian(const std::vector<int>& invariants) {
    for (int n : invariants)
      if (n < 1) throw Error(ErrorCode::InvalidInput, "abelian invariant must be positive");
    std::size_t order = 1;
    for (int n : invariants) {
      order *= static_cast<std::size_t>(n);
      if (order > 4096) throw Error(ErrorCode::TooLarge, "abelian group order exceeds 4096");
    }
    FiniteGroup g;
    g.table_.assign(order, std::vector<Elem>(order));
    g.invariants_ = invariants;
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b) {
        auto ca = g.coords(a), cb = g.coords(b);
        for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % invariants[i];
        g.table_[a][b] = g.index_of(ca);
      }
    g.identity_ = 0;
    g.inverse_.assign(order, 0);
    for (Elem a = 0; a < order; ++a) {
      auto c = g.coords(a);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = (invariants[i] - c[i]) % invariants[i];
      g.inverse_[a] = g.index_of(c);
    }
    g.compute_orders();
    return g;
  }

  std::size_t order() const noexcept { return table_.size(); }
  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem identity() const noexcept { return identity_; }
  const std::vector<std::vector<Elem>>& table() const noexcept { return table_; }
  const std::optional<std::vector<int>>& abelian_invariants() const noexcept { return invariants_; }
  int element_order(Elem a) const { return orders_[a]; }
  int exponent() const { return exponent_; }

  Elem power(Elem a, long long k) const {
    const int o = orders_[a];
    long long e = ((k % o) + o) % o;
    Elem r = identity_;
    for (long long i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  bool is_abelian() const {
    for (Elem a = 0; a < order(); ++a)
      for (Elem b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool is_central(Elem a) const {
    for (Elem b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Mixed-radix coordinates; only for groups built by abelian().
  std::vector<int> coords(Elem a) const {
    const auto& inv = *invariants_;
    std::vector<int> c(inv.size());
    for (std::size_t i = inv.size(); i-- > 0;) {
      c[i] = static_cast<int>(a % inv[i]);
      a /= inv[i];
    }
    return c;
  }

  Elem index_of(const std::vector<int>& c) const {
    const auto& inv = *invariants_;
    Elem idx = 0;
    for (std::size_t i = 0; i < inv.size(); ++i) idx = idx * inv[i] + static_cast<Elem>(((c[i] % inv[i]) + inv[i]) % inv[i]);
    return idx;
  }

  /// Elements of the subgroup generated by gens, ascending.
  std::vector<Elem> generated(const std::vector<Elem>& gens) const {
    std::vector<bool> in(order(), false);
    std::vector<Elem> stack{identity_};
    in[identity_] = true;
    while (!stack.empty()) {
      Elem x = stack.back();
      stack.pop_back();
      for (Elem g : gens) {
        Elem y = mul(x, g);
        if (!in[y]) {
          in[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::vector<Elem> out;
    for (Elem a = 0; a < order(); ++a)
      if (in[a]) out.push_back(a);
    return out;
  }

  /// Greedy generating set: smallest indices that enlarge the generated subgroup.
  std::vector<Elem> greedy_generators() const {
    std::vector<Elem> gens;
    std::vector<Elem> sub{identity_};
    for (Elem a = 0; a < order() && sub.size() < order(); ++a) {
      if (std::binary_search(sub.begin(), sub.end(), a)) continue;
      gens.push_back(a);
      sub = generated(gens);
    }
    return gens;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  void compute_orders() {
    orders_.assign(order(), 1);
    exponent_ = 1;
    for (Elem a = 0; a < order(); ++a) {
      Elem x = a;
      int k = 1;
      while (x != identity_) {
        x = mul(x, a);
        ++k;
      }
      orders_[a] = k;
      exponent_ = std::lcm(exponent_, k);
    }
  }

  std::vector<std::vector<Elem>> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
  std::vector<int> orders_;
  int exponent_ = 1;
  std::optional<std::vector<int>> invariants_;
};

/// Subgroup with its inclusion into an ambient group; inclusion is ascending.
struct SubgroupEmbedding {
  FiniteGroup group;
  std::vector<Elem> inclusion;

  static SubgroupEmbedding generated_by(const FiniteGroup& g, const std::vector<Elem>& gens) {
    for (Elem x : gens)
      if (x >= g.order()) throw Error(ErrorCode::InvalidInput, "subgroup generator out of range");
    return from_elements(g, g.generated(gens));
  }

  static SubgroupEmbedding from_elements(const FiniteGroup& g, std::vector<Elem> elems) {
    std::sort(elems.begin(), elems.end());
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    std::vector<std::vector<Elem>> t(elems.size(), std::vector<Elem>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        const int p = pos[g.mul(elems[i], elems[j])];
        if (p < 0) throw Error(ErrorCode::InvalidInput, "element set is not closed under multiplication");
        t[i][j] = static_cast<Elem>(p);
      }
    return {FiniteGroup(std::move(t)), std::move(elems)};
  }

  /// Position of an ambient element inside the subgroup, if present.
  std::optional<Elem> locate(Elem ambient) const {
    auto it = std::lower_bound(inclusion.begin(), inclusion.end(), ambient);
    if (it == inclusion.end() || *it != ambient) return std::nullopt;
    return static_cast<Elem>(it - inclusion.begin());
  }
};

/// Extends gens[i] -> images[i] along the Cayley graph. Returns the full map
/// when it is a well-defined homomorphism from <gens> (= src) into dst.
inline std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& src, const FiniteGroup& dst,
                                                            const std::vector<Elem>& gens,
                                                            const std::vector<Elem>& images) {
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> map(src.order(), kUnset);
  map[src.identity()] = dst.identity();
  std::vector<Elem> queue{src.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Elem x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = src.mul(x, gens[i]);
      const Elem fy = dst.mul(map[x], images[i]);
      if (map[y] == kUnset) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  return map;
}

/// Enumerates all isomorphisms src -> dst in lexicographic order of the images
/// of src.greedy_generators(). The visitor returns false to stop early.
/// Throws TooLarge after max_results visits.
inline void for_each_isomorphism(const FiniteGroup& src, const FiniteGroup& dst,
                                 const std::function<bool(const std::vector<Elem>&)>& visit,
                                 std::size_t max_results = 50000) {
  if (src.order() > 64 || dst.order() > 64) throw Error(ErrorCode::TooLarge, "isomorphism search limited to order 64");
  if (src.order() != dst.order()) return;
  const auto gens = src.greedy_generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < dst.order(); ++y)
      if (dst.element_order(y) == src.element_order(gens[i])) candidates[i].push_back(y);
  std::vector<Elem> images;
  std::size_t count = 0;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    std::vector<Elem> partial(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(k));
    const auto sub = SubgroupEmbedding::generated_by(src, partial);
    std::vector<Elem> sub_gens;
    for (Elem g : partial) sub_gens.push_back(*sub.locate(g));
    auto m = extend_homomorphism(sub.group, dst, sub_gens, images);
    if (!m) return;
    std::vector<bool> hit(dst.order(), false);
    for (Elem v : *m) {
      if (hit[v]) return;
      hit[v] = true;
    }
    if (k == gens.size()) {
      std::vector<Elem> full(src.order());
      for (std::size_t i = 0; i < sub.inclusion.size(); ++i) full[sub.inclusion[i]] = (*m)[i];
      if (++count > max_results) throw Error(ErrorCode::TooLarge, "more than " + std::to_string(max_results) + " isomorphisms");
      if (!visit(full)) stop = true;
      return;
    }
    for (Elem y : candidates[k]) {
      images.push_back(y);
      rec(k + 1);
      images.pop_back();
      if (stop) return;
    }
  };
  rec(0);
}

inline std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g, std::size_t max_results = 50000) {
  std::vector<std::vector<Elem>> out;
  for_each_isomorphism(g, g, [&](const std::vector<Elem>& m) {
    out.push_back(m);
    return true;
  }, max_results);
  return out;
}

inline std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  std::optional<std::vector<Elem>> out;
  for_each_isomorphism(a, b, [&](const std::vector<Elem>& m) {
    out = m;
    return false;
  });
  return out;
}

/// Elementary divisors of an abelian group with an isomorphism
/// to_canonical: G -> FiniteGroup::abelian(divisors).
struct AbelianDecomposition {
  std::vector<int> divisors;
  FiniteGroup canonical;
  std::vector<Elem> to_canonical;
  std::vector<Elem> from_canonical;
};

inline AbelianDecomposition abelian_decomposition(const FiniteGroup& g) {
  if (!g.is_abelian()) throw Error(ErrorCode::NotAbelian, "abelian decomposition of a nonabelian group");
  AbelianDecomposition d;
  if (g.abelian_invariants()) {
    d.divisors = *g.abelian_invariants();
    d.canonical = g;
    d.to_canonical.resize(g.order());
    std::iota(d.to_canonical.begin(), d.to_canonical.end(), 0);
    d.from_canonical = d.to_canonical;
    return d;
  }
  std::size_t n = g.order();
  for (int p = 2; n > 1; ++p) {
    if (n % p != 0) continue;
    std::size_t pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
    }
    // s_k = log_p #{x : x^{p^k} = 1}; the number of parts >= k is s_k - s_{k-1}.
    std::vector<int> s{0};
    std::size_t power = 1;
    for (std::size_t c = 1; c < pk;) {
      power *= p;
      c = 0;
      for (Elem x = 0; x < g.order(); ++x)
        if (power % static_cast<std::size_t>(g.element_order(x)) == 0) ++c;
      int e = 0;
      for (std::size_t t = c; t > 1; t /= p) ++e;
      s.push_back(e);
    }
    std::vector<int> parts;
    for (std::size_t k = 1; k < s.size(); ++k) {
      const int at_least_k = s[k] - s[k - 1];
      const int at_least_next = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
      int q = 1;
      for (std::size_t i = 0; i < k; ++i) q *= p;
      for (int c = 0; c < at_least_k - at_least_next; ++c) parts.push_back(q);
    }
    std::sort(parts.begin(), parts.end());
    d.divisors.insert(d.divisors.end(), parts.begin(), parts.end());
  }
  d.canonical = FiniteGroup::abelian(d.divisors);
  auto iso = find_isomorphism(d.canonical, g);
  if (!iso) throw Error(ErrorCode::InvalidInput, "abelian decomposition failed");
  d.from_canonical = *iso;
  d.to_canonical.assign(g.order(), 0);
  for (Elem c = 0; c < g.order(); ++c) d.to_canonical[d.from_canonical[c]] = c;
  return d;
}

/// Character chi(g) = zeta_n^{exps[g]}.
struct Character {
  int n = 1;
  std::vector<int> exps;

  Scalar value(Elem g) const { return Scalar::root_of_unity(n, exps[g]); }
  bool is_trivial() const {
    for (int e : exps)
      if (e % n != 0) return false;
    return true;
  }
  friend bool operator==(const Character&, const Character&) = default;
};

/// All characters of an abelian group, values at conductor exp(G).
/// For groups from abelian() the character at index b is
/// chi_b(a) = prod_i zeta_{n_i}^{a_i b_i}; otherwise the order follows the
/// lexicographic enumeration of generator images.
inline std::vector<Character> characters(const FiniteGroup& g) {
  if (!g.is_abelian()) throw Error(ErrorCode::NotAbelian, "characters require an abelian group");
  const int n = g.exponent();
  std::vector<Character> out;
  if (const auto& inv = g.abelian_invariants()) {
    for (Elem b = 0; b < g.order(); ++b) {
      const auto cb = g.coords(b);
      Character chi{n, std::vector<int>(g.order())};
      for (Elem a = 0; a < g.order(); ++a) {
        const auto ca = g.coords(a);
        long long e = 0;
        for (std::size_t i = 0; i < inv->size(); ++i) e += static_cast<long long>(ca[i]) * cb[i] * (n / (*inv)[i]);
        chi.exps[a] = static_cast<int>(e % n);
      }
      out.push_back(std::move(chi));
    }
    return out;
  }
  // Homomorphisms into Z/n along a generating set.
  const FiniteGroup target = FiniteGroup::abelian({n});
  const auto gens = g.greedy_generators();
  std::vector<Elem> images(gens.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gens.size()) {
      if (auto m = extend_homomorphism(g, target, gens, images)) {
        Character chi{n, std::vector<int>(m->begin(), m->end())};
        out.push_back(std::move(chi));
      }
      return;
    }
    const int o = g.element_order(gens[k]);
    for (int j = 0; j < o; ++j) {
      images[k] = static_cast<Elem>(j * (n / o));
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

/// e_chi = |G|^{-1} sum_g chi(g^{-1}) g in the group basis.
inline Vec idempotent(const FiniteGroup& g, const Character& chi) {
  Vec v(g.order());
  const Scalar inv_order(Rational(1, static_cast<std::int64_t>(g.order())));
  for (Elem a = 0; a < g.order(); ++a) v[a] = chi.value(g.inv(a)) * inv_order;
  return v;
}

inline std::vector<Vec> idempotents(const FiniteGroup& g) {
  std::vector<Vec> out;
  for (const auto& chi : characters(g)) out.push_back(idempotent(g, chi));
  return out;
}

/// Bilinear map G x G -> mu_n, value zeta_n^{exps[g*|G|+h]}.
struct Bicharacter {
  int n = 1;
  std::size_t order = 1;
  std::vector<int> exps;

  Bicharacter() : exps(1, 0) {}
  Bicharacter(int n_, std::size_t order_) : n(n_), order(order_), exps(order_ * order_, 0) {}

  int exp(Elem g, Elem h) const { return exps[g * order + h]; }
  int& exp(Elem g, Elem h) { return exps[g * order + h]; }
  Scalar value(Elem g, Elem h) const { return Scalar::root_of_unity(n, exp(g, h)); }

  /// Reads a matrix of roots of unity at conductor dividing n.
  static Bicharacter from_values(const std::vector<std::vector<Scalar>>& values, int n) {
    Bicharacter b(n, values.size());
    for (std::size_t g = 0; g < values.size(); ++g) {
      if (values[g].size() != values.size()) throw Error(ErrorCode::InvalidInput, "bicharacter matrix not square");
      for (std::size_t h = 0; h < values.size(); ++h) {
        auto e = discrete_log(values[g][h], n);
        if (!e) throw Error(ErrorCode::InvalidInput, "bicharacter value is not an n-th root of unity");
        b.exps[g * values.size() + h] = *e;
      }
    }
    return b;
  }

  friend bool operator==(const Bicharacter&, const Bicharacter&) = default;
};

struct BicharacterReport {
  bool is_bicharacter = false;
  bool is_skew = false;
  bool is_nondegenerate = false;
  std::vector<Elem> radical;  // {g : phi(g, .) == 1}
};

inline BicharacterReport check_bicharacter(const FiniteGroup& g, const Bicharacter& phi) {
  if (phi.order != g.order()) throw Error(ErrorCode::InvalidInput, "bicharacter size does not match group order");
  BicharacterReport r;
  const int n = phi.n;
  auto md = [n](long long x) { return static_cast<int>(((x % n) + n) % n); };
  r.is_bicharacter = true;
  for (Elem a = 0; a < g.order() && r.is_bicharacter; ++a)
    for (Elem b = 0; b < g.order() && r.is_bicharacter; ++b)
      for (Elem c = 0; c < g.order() && r.is_bicharacter; ++c) {
        if (md(phi.exp(g.mul(a, b), c)) != md(phi.exp(a, c) + phi.exp(b, c))) r.is_bicharacter = false;
        if (md(phi.exp(a, g.mul(b, c))) != md(phi.exp(a, b) + phi.exp(a, c))) r.is_bicharacter = false;
      }
  r.is_skew = true;
  for (Elem a = 0; a < g.order() && r.is_skew; ++a)
    for (Elem b = 0; b < g.order() && r.is_skew; ++b)
      if (md(phi.exp(a, b) + phi.exp(b, a)) != 0) r.is_skew = false;
  for (Elem a = 0; a < g.order(); ++a) {
    bool trivial = true;
    for (Elem b = 0; b < g.order() && trivial; ++b) trivial = md(phi.exp(a, b)) == 0;
    if (trivial) r.radical.push_back(a);
  }
  r.is_nondegenerate = r.radical.size() == 1;
  return r;
}

/// Representation of G on a (purely odd) space of dimension dim, one matrix
/// per group element. Matrices act on column vectors of coordinates.
struct GroupAction {
  std::size_t dim = 0;
  std::vector<Matrix<Scalar>> matrices;

  static GroupAction trivial(const FiniteGroup& g, std::size_t dim) {
    return {dim, std::vector<Matrix<Scalar>>(g.order(), Matrix<Scalar>::identity(dim))};
  }

  /// Direct sum of one-dimensional representations.
  static GroupAction diagonal(const FiniteGroup& g, const std::vector<Character>& chars) {
    GroupAction a{chars.size(), {}};
    for (Elem x = 0; x < g.order(); ++x) {
      Matrix<Scalar> m(chars.size(), chars.size());
      for (std::size_t i = 0; i < chars.size(); ++i) m(i, i) = chars[i].value(x);
      a.matrices.push_back(std::move(m));
    }
    return a;
  }

  /// Builds the action of every element from generator images.
  static GroupAction from_generators(const FiniteGroup& g, std::size_t dim, const std::vector<Elem>& gens,
                                     const std::vector<Matrix<Scalar>>& mats) {
    std::vector<std::optional<Matrix<Scalar>>> all(g.order());
    all[g.identity()] = Matrix<Scalar>::identity(dim);
    std::vector<Elem> queue{g.identity()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Elem x = queue[q];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Elem y = g.mul(x, gens[i]);
        Matrix<Scalar> m = *all[x] * mats[i];
        if (!all[y]) {
          all[y] = std::move(m);
          queue.push_back(y);
        } else if (!(*all[y] == m)) {
          throw Error(ErrorCode::InvalidInput, "generator matrices do not define a representation");
        }
      }
    }
    GroupAction a{dim, {}};
    for (auto& m : all) {
      if (!m) throw Error(ErrorCode::InvalidInput, "generators do not generate the group");
      a.matrices.push_back(std::move(*m));
    }
    return a;
  }

  /// rho(gh) = rho(g) rho(h) and rho(e) = id.
  bool is_representation(const FiniteGroup& g) const {
    if (matrices.size() != g.order()) return false;
    for (const auto& m : matrices)
      if (m.rows() != dim || m.cols() != dim) return false;
    if (!(matrices[g.identity()] == Matrix<Scalar>::identity(dim))) return false;
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b)
        if (!(matrices[g.mul(a, b)] == matrices[a] * matrices[b])) return false;
    return true;
  }
};

}  // namespace chevhopf
