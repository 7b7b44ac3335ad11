#pragma once

#include <random>
#include <vector>

#include "chevhopf/chevhopf.hpp"

namespace chevhopf::testing {

inline Scalar small_scalar(std::mt19937& rng, int conductor = 1) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  const int d = cyclotomic_table(conductor).degree;
  Scalar::Coeffs c(d);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Scalar(conductor, std::move(c));
}

inline Vec random_vec(std::mt19937& rng, std::size_t dim, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  Vec v(dim);
  for (auto& x : v)
    if (keep(rng)) x = small_scalar(rng);
  return v;
}

inline TensorElement random_tensor(std::mt19937& rng, const HopfSuperAlgebra& a, double density = 0.2) {
  std::bernoulli_distribution keep(density);
  SparseVec e;
  for (std::uint32_t i = 0; i < a.dim() * a.dim(); ++i)
    if (keep(rng)) {
      Scalar s = small_scalar(rng);
      if (!s.is_zero()) e.push_back({i, s});
    }
  return TensorElement(2, a.dim(), e);
}

inline Matrix<Scalar> mat(std::vector<std::vector<Scalar>> rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  return Matrix<Scalar>::from_rows(rows, c);
}

}  // namespace chevhopf::testing
