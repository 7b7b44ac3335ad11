#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chevhopf/algebra.hpp"
#include "chevhopf/groups.hpp"
#include "chevhopf/linalg.hpp"
#include "chevhopf/report.hpp"

namespace chevhopf {

/// Exterior monomials on m generators as bitmasks, graded-lexicographic order.
class ExteriorBasis {
 public:
  explicit ExteriorBasis(std::size_t m) : m_(m) {
    if (m > 12) throw Error(ErrorCode::TooLarge, "exterior algebra on more than 12 generators");
    const std::uint32_t n = 1u << m;
    for (std::uint32_t mask = 0; mask < n; ++mask) masks_.push_back(mask);
    std::sort(masks_.begin(), masks_.end(), [](std::uint32_t a, std::uint32_t b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      if (pa != pb) return pa < pb;
      // Lexicographic on sorted index lists.
      for (std::uint32_t bit = 1; bit != 0 && (a | b) >= bit; bit <<= 1) {
        const bool ia = a & bit, ib = b & bit;
        if (ia != ib) return ia;
      }
      return false;
    });
    rank_.assign(n, 0);
    for (std::uint32_t r = 0; r < n; ++r) rank_[masks_[r]] = r;
  }

  std::size_t generators() const noexcept { return m_; }
  std::size_t size() const noexcept { return masks_.size(); }
  std::uint32_t mask(std::uint32_t rank) const { return masks_[rank]; }
  std::uint32_t rank(std::uint32_t mask) const { return rank_[mask]; }

  /// y_U y_T = sign * y_{U|T}, or 0 if they overlap.
  static int wedge_sign(std::uint32_t u, std::uint32_t t) {
    if (u & t) return 0;
    int inversions = 0;
    for (std::uint32_t rest = t; rest; rest &= rest - 1) {
      const std::uint32_t low = rest & (~rest + 1);
      inversions += std::popcount(u & ~(low | (low - 1)));
    }
    return (inversions & 1) ? -1 : 1;
  }

 private:
  std::size_t m_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::uint32_t> rank_;
};

/// Action of a matrix on exterior monomials: Lambda(M)(y_S) = prod_{s in S} (M y_s).
/// Result is keyed by mask.
inline std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> exterior_power_action(const Matrix<Scalar>& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> out(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<std::pair<std::uint32_t, Scalar>> cur{{0u, Scalar(1)}};
    for (std::size_t i = 0; i < n; ++i) {
      if (!(s & (1u << i))) continue;
      std::vector<std::pair<std::uint32_t, Scalar>> next;
      for (const auto& [mask, c] : cur)
        for (std::size_t j = 0; j < n; ++j) {
          if (m(j, i).is_zero()) continue;
          const int sg = ExteriorBasis::wedge_sign(mask, 1u << j);
          if (sg == 0) continue;
          const std::uint32_t nm = mask | (1u << j);
          Scalar v = c * m(j, i);
          if (sg < 0) v = -v;
          auto it = std::find_if(next.begin(), next.end(), [nm](const auto& p) { return p.first == nm; });
          if (it == next.end())
            next.emplace_back(nm, std::move(v));
          else
            it->second += v;
        }
      cur.clear();
      for (auto& p : next)
        if (!p.second.is_zero()) cur.push_back(std::move(p));
    }
    out[s] = std::move(cur);
  }
  return out;
}

/// C[G x| W] with basis g y_S at index g * 2^m + rank(S).
class SupergroupAlgebra {
 public:
  SupergroupAlgebra(FiniteGroup g, GroupAction w) : g_(std::move(g)), w_(std::move(w)), ext_(w_.dim) {
    if (!w_.is_representation(g_)) throw Error(ErrorCode::InvalidInput, "W is not a representation of G");
    build();
  }

  const HopfSuperAlgebra& algebra() const noexcept { return a_; }
  const FiniteGroup& group() const noexcept { return g_; }
  const GroupAction& action() const noexcept { return w_; }
  const ExteriorBasis& exterior() const noexcept { return ext_; }

  std::uint32_t index(Elem g, std::uint32_t mask) const {
    return static_cast<std::uint32_t>(g * ext_.size() + ext_.rank(mask));
  }

  Vec group_element(Elem g) const { return a_.basis(index(g, 0)); }

  /// Element 1 * sum_i w_i y_i of W inside the algebra.
  Vec odd_element(const std::vector<Scalar>& w) const {
    Vec v(a_.dim());
    for (std::size_t i = 0; i < w.size(); ++i) v[index(g_.identity(), 1u << i)] = w[i];
    return v;
  }

  /// Basis images of C[H] -> C[G x| W] for a subgroup embedding.
  std::vector<SparseVec> group_inclusion(const SubgroupEmbedding& h) const {
    std::vector<SparseVec> out;
    for (Elem x : h.inclusion) out.push_back({{index(x, 0), Scalar(1)}});
    return out;
  }

 private:
  void build() {
    const std::size_t n = ext_.size();
    const std::size_t d = g_.order() * n;
    HopfSuperAlgebra::Parts p;
    p.parity.resize(d);
    for (Elem g = 0; g < g_.order(); ++g)
      for (std::uint32_t r = 0; r < n; ++r) p.parity[g * n + r] = std::popcount(ext_.mask(r)) & 1;

    std::vector<std::vector<std::vector<std::pair<std::uint32_t, Scalar>>>> conj(g_.order());
    for (Elem h = 0; h < g_.order(); ++h) conj[h] = exterior_power_action(w_.matrices[g_.inv(h)]);

    // (g y_S)(h y_T) = gh Lambda(rho(h^-1))(y_S) y_T.
    p.mult.resize(d * d);
    for (Elem g = 0; g < g_.order(); ++g)
      for (std::uint32_t rs = 0; rs < n; ++rs)
        for (Elem h = 0; h < g_.order(); ++h)
          for (std::uint32_t rt = 0; rt < n; ++rt) {
            const std::uint32_t t = ext_.mask(rt);
            const Elem gh = g_.mul(g, h);
            Accumulator acc(d);
            for (const auto& [mask, c] : conj[h][ext_.mask(rs)]) {
              const int sg = ExteriorBasis::wedge_sign(mask, t);
              if (sg == 0) continue;
              acc.add(index(gh, mask | t), sg < 0 ? -c : c);
            }
            p.mult[(g * n + rs) * d + h * n + rt] = acc.finish();
          }

    p.unit.assign(d, Scalar());
    p.unit[index(g_.identity(), 0)] = Scalar(1);
    p.counit.assign(d, Scalar());
    for (Elem g = 0; g < g_.order(); ++g) p.counit[index(g, 0)] = Scalar(1);

    // Delta(g y_S) = sum_{T subset S} (-1)^{#(s<t): s in S\T, t in T} g y_T (x) g y_{S\T}.
    p.comult.resize(d);
    for (Elem g = 0; g < g_.order(); ++g)
      for (std::uint32_t rs = 0; rs < n; ++rs) {
        const std::uint32_t s = ext_.mask(rs);
        Accumulator acc(d * d);
        for (std::uint32_t t = s;; t = (t - 1) & s) {
          const std::uint32_t rest = s & ~t;
          int inv = 0;
          for (std::uint32_t x = t; x; x &= x - 1) {
            const std::uint32_t low = x & (~x + 1);
            inv += std::popcount(rest & (low - 1));
          }
          acc.add(static_cast<std::uint32_t>(index(g, t) * d + index(g, rest)), Scalar((inv & 1) ? -1 : 1));
          if (t == 0) break;
        }
        p.comult[g * n + rs] = acc.finish();
      }

    // S(g y_S) = (-1)^{|S|} y_S g^{-1}.
    p.antipode.resize(d);
    for (Elem g = 0; g < g_.order(); ++g)
      for (std::uint32_t rs = 0; rs < n; ++rs) {
        const std::uint32_t s = ext_.mask(rs);
        const auto& prod = p.mult[(g_.identity() * n + rs) * d + g_.inv(g) * n];
        p.antipode[g * n + rs] = (std::popcount(s) & 1) ? sparse_scale(prod, Scalar(-1)) : prod;
      }
    a_ = HopfSuperAlgebra(std::move(p));
  }

  FiniteGroup g_;
  GroupAction w_;
  ExteriorBasis ext_;
  HopfSuperAlgebra a_;
};

inline HopfSuperAlgebra build_supergroup_algebra(const FiniteGroup& g, const GroupAction& w) {
  return SupergroupAlgebra(g, w).algebra();
}

/// H = K x Khat with the pairing <prod k_i^{a_i}, prod c_i^{b_i}> = prod zeta_{n_i}^{a_i b_i},
/// n_i the order of k_i (and of c_i). Elements are ambient indices in G.
struct PolarizationData {
  std::vector<Elem> K;
  std::vector<Elem> Khat;
  friend bool operator==(const PolarizationData&, const PolarizationData&) = default;
};

/// User-supplied twist for C[H], basis of H in ascending ambient order.
struct ExplicitTwist {
  TensorElement twist;
  friend bool operator==(const ExplicitTwist&, const ExplicitTwist&) = default;
};

using VData = std::variant<PolarizationData, ExplicitTwist>;

struct TriangularSeptuple {
  FiniteGroup G;
  GroupAction W;
  std::vector<Elem> H_generators;
  Matrix<Scalar> Y;  // rows are basis vectors of Y in W coordinates
  Matrix<Scalar> B;  // dim Y x dim Y
  VData V = PolarizationData{};
  Elem u = 0;

  SubgroupEmbedding H() const { return SubgroupEmbedding::generated_by(G, H_generators); }
  std::size_t dim_W() const { return W.dim; }
  std::size_t dim_Y() const { return Y.rows(); }
  std::vector<Scalar> y_vector(std::size_t i) const { return Y.row(i); }
};

namespace detail {

inline bool is_perfect_square(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

}  // namespace detail

/// Checks that the polarization describes H as K x Khat with K, Khat free on
/// the listed generators of matching orders. Returns a failure message or "".
inline std::string polarization_problem(const FiniteGroup& g, const SubgroupEmbedding& h, const PolarizationData& p) {
  if (p.K.size() != p.Khat.size()) return "K and Khat need the same number of generators";
  for (std::size_t i = 0; i < p.K.size(); ++i) {
    if (p.K[i] >= g.order() || p.Khat[i] >= g.order()) return "polarization generator out of range";
    if (!h.locate(p.K[i]) || !h.locate(p.Khat[i])) return "polarization generator not in H";
    if (g.element_order(p.K[i]) != g.element_order(p.Khat[i])) return "paired generators have different orders";
  }
  std::size_t expected = 1;
  for (Elem k : p.K) expected *= static_cast<std::size_t>(g.element_order(k));
  const auto k = g.generated(p.K);
  const auto kh = g.generated(p.Khat);
  if (k.size() != expected || kh.size() != expected) return "generators are not independent";
  for (Elem a : k)
    for (Elem b : kh)
      if (g.mul(a, b) != g.mul(b, a)) return "K and Khat do not commute";
  for (std::size_t i = 0; i < p.K.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (g.mul(p.K[i], p.K[j]) != g.mul(p.K[j], p.K[i]) || g.mul(p.Khat[i], p.Khat[j]) != g.mul(p.Khat[j], p.Khat[i]))
        return "K or Khat is not abelian";
  std::vector<Elem> all = p.K;
  all.insert(all.end(), p.Khat.begin(), p.Khat.end());
  if (g.generated(all).size() != expected * expected) return "K and Khat intersect nontrivially";
  if (expected * expected != h.inclusion.size()) return "K x Khat is not all of H";
  return "";
}

/// Validates every condition on a septuple; failures are recorded by name.
inline AxiomReport validate_septuple(const TriangularSeptuple& s) {
  AxiomReport rep;
  const auto& g = s.G;
  const std::size_t m = s.W.dim;
  const bool w_ok = s.W.is_representation(g);
  rep.add("W representation", w_ok);

  std::optional<SubgroupEmbedding> h;
  bool gens_ok = true;
  for (Elem x : s.H_generators) gens_ok = gens_ok && x < g.order();
  if (gens_ok) h = s.H();
  rep.add("H subgroup", gens_ok);

  const bool u_range = s.u < g.order();
  rep.add("u central", u_range && g.is_central(s.u));
  rep.add("order <= 2", u_range && g.mul(s.u, s.u) == g.identity());
  rep.add("u acts by -1", u_range && w_ok &&
                              s.W.matrices[s.u] == Scalar(-1) * Matrix<Scalar>::identity(m));

  const bool y_shape = s.Y.cols() == m || s.Y.rows() == 0;
  const bool y_indep = y_shape && rank(s.Y) == s.Y.rows();
  rep.add("Y subspace", y_shape && y_indep);

  bool stable = y_shape && y_indep && w_ok && h.has_value();
  if (stable) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < s.Y.rows(); ++i) rows.push_back(s.Y.row(i));
    const auto ysp = Subspace<Scalar>::span(m, rows);
    for (Elem x : h->inclusion)
      for (std::size_t i = 0; i < s.Y.rows() && stable; ++i) stable = ysp.contains(s.W.matrices[x] * s.Y.row(i));
  }
  rep.add("Y H-stable", stable);

  const std::size_t dy = s.Y.rows();
  const bool b_shape = s.B.rows() == dy && s.B.cols() == dy;
  rep.add("B shape", b_shape);
  rep.add("B symmetric", b_shape && s.B == s.B.transpose());
  rep.add("nondegenerate", b_shape && (dy == 0 || !determinant(s.B).is_zero()));

  // B lives in S^2 Y: as a tensor it transforms by rho_Y(h) B rho_Y(h)^T.
  bool invariant = b_shape && stable;
  if (invariant && dy > 0) {
    const auto ycols = s.Y.transpose();
    for (Elem x : h->inclusion) {
      Matrix<Scalar> r(dy, dy);
      for (std::size_t i = 0; i < dy; ++i) {
        const auto img = s.W.matrices[x] * s.Y.row(i);
        auto c = solve(ycols, img);
        for (std::size_t j = 0; j < dy; ++j) r(j, i) = (*c)[j];
      }
      if (!(r * s.B * r.transpose() == s.B)) {
        invariant = false;
        break;
      }
    }
  }
  rep.add("B H-invariant", invariant);

  rep.add("|H| perfect square", h && detail::is_perfect_square(h->inclusion.size()));

  if (const auto* pol = std::get_if<PolarizationData>(&s.V)) {
    const std::string why = h ? polarization_problem(g, *h, *pol) : "H invalid";
    rep.add("V polarization", why.empty(), std::nullopt, why);
  } else {
    const auto& t = std::get<ExplicitTwist>(s.V).twist;
    rep.add("V twist shape", h && t.arity() == 2 && t.dim() == h->inclusion.size());
  }
  return rep;
}

}  // namespace chevhopf
