#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chevhopf/cyclotomic.hpp"
#include "chevhopf/errors.hpp"

namespace chevhopf {

/// Dense coordinate vector of an algebra element.
using Vec = std::vector<Scalar>;

struct Term {
  std::uint32_t index;
  Scalar value;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sorted by index, zero coefficients omitted.
using SparseVec = std::vector<Term>;

inline Vec basis_vector(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v.at(i) = Scalar(1);
  return v;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back({static_cast<std::uint32_t>(i), v[i]});
  return out;
}

inline Vec to_dense(const SparseVec& s, std::size_t dim) {
  Vec v(dim);
  for (const auto& t : s) v.at(t.index) = t.value;
  return v;
}

inline Scalar sparse_get(const SparseVec& s, std::uint32_t index) {
  auto it = std::lower_bound(s.begin(), s.end(), index, [](const Term& t, std::uint32_t i) { return t.index < i; });
  if (it != s.end() && it->index == index) return it->value;
  return Scalar();
}

/// y + a*x, both sorted.
inline SparseVec sparse_axpy(const SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return y;
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].index < x[j].index)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].index < y[i].index) {
      out.push_back({x[j].index, a * x[j].value});
      ++j;
    } else {
      Scalar v = y[i].value + a * x[j].value;
      if (!v.is_zero()) out.push_back({y[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

inline SparseVec sparse_scale(const SparseVec& x, const Scalar& a) {
  if (a.is_zero()) return {};
  SparseVec out = x;
  for (auto& t : out) t.value = t.value * a;
  return out;
}

/// Collects index/value contributions and emits a canonical SparseVec.
/// Uses a dense buffer for small key spaces and a hash map otherwise.
class Accumulator {
 public:
  explicit Accumulator(std::size_t key_space) : dense_(key_space <= kDenseLimit) {
    if (dense_) {
      buffer_.resize(key_space);
      seen_.assign(key_space, false);
    }
  }

  void add(std::uint32_t index, const Scalar& value) {
    if (value.is_zero()) return;
    if (dense_) {
      if (!seen_[index]) {
        seen_[index] = true;
        touched_.push_back(index);
        buffer_[index] = value;
      } else {
        buffer_[index] += value;
      }
      return;
    }
    auto [it, inserted] = map_.try_emplace(index, value);
    if (!inserted) it->second += value;
  }

  SparseVec finish() {
    SparseVec out;
    if (dense_) {
      std::sort(touched_.begin(), touched_.end());
      for (auto idx : touched_)
        if (!buffer_[idx].is_zero()) out.push_back({idx, std::move(buffer_[idx])});
      return out;
    }
    out.reserve(map_.size());
    for (auto& [k, v] : map_)
      if (!v.is_zero()) out.push_back({k, std::move(v)});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    return out;
  }

 private:
  static constexpr std::size_t kDenseLimit = 1u << 13;
  bool dense_;
  std::vector<Scalar> buffer_;
  std::vector<bool> seen_;
  std::vector<std::uint32_t> touched_;
  std::unordered_map<std::uint32_t, Scalar> map_;
};

/// Inverse of x in a finite-dimensional unital algebra, found from the first
/// linear dependency among 1, x, x^2, ... (the minimal polynomial of x).
/// Returns nullopt when the constant term of that polynomial vanishes.
inline std::optional<SparseVec> krylov_inverse(const std::function<SparseVec(const SparseVec&, const SparseVec&)>& mul,
                                               const SparseVec& unit, const SparseVec& x, std::size_t space_dim) {
  struct Row {
    SparseVec v;
    std::uint32_t pivot;
    std::vector<Scalar> combo;
  };
  std::vector<Row> rows;
  std::vector<SparseVec> powers;
  SparseVec current = unit;
  for (std::size_t k = 0; k <= space_dim; ++k) {
    powers.push_back(current);
    SparseVec r = current;
    std::vector<Scalar> combo(k + 1);
    combo[k] = Scalar(1);
    for (auto& row : rows) {
      const Scalar f = sparse_get(r, row.pivot);
      if (f.is_zero()) continue;
      r = sparse_axpy(r, -f, row.v);
      for (std::size_t m = 0; m < row.combo.size(); ++m)
        if (!row.combo[m].is_zero()) combo[m] -= f * row.combo[m];
    }
    if (r.empty()) {
      if (combo[0].is_zero()) return std::nullopt;
      const Scalar inv0 = Scalar(-1) / combo[0];
      SparseVec result;
      for (std::size_t m = 1; m <= k; ++m)
        if (!combo[m].is_zero()) result = sparse_axpy(result, combo[m] * inv0, powers[m - 1]);
      return result;
    }
    const std::uint32_t pivot = r.front().index;
    const Scalar norm = Scalar(1) / r.front().value;
    r = sparse_scale(r, norm);
    for (auto& c : combo) c = c * norm;
    for (auto& row : rows) {
      const Scalar f = sparse_get(row.v, pivot);
      if (f.is_zero()) continue;
      row.v = sparse_axpy(row.v, -f, r);
      row.combo.resize(k + 1);
      for (std::size_t m = 0; m <= k; ++m)
        if (!combo[m].is_zero()) row.combo[m] -= f * combo[m];
    }
    rows.push_back({std::move(r), pivot, std::move(combo)});
    current = mul(current, x);
  }
  return std::nullopt;
}

}  // namespace chevhopf
