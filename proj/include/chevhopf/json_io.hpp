#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "chevhopf/algebra.hpp"
#include "chevhopf/groups.hpp"
#include "chevhopf/pointed.hpp"
#include "chevhopf/supergroup.hpp"

namespace chevhopf::json_io {

using Json = nlohmann::json;

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, (path.empty() ? "/" : path) + ": " + what);
}

inline const Json& at(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

inline std::size_t index_of(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

inline std::size_t parse_key(const std::string& key, const std::string& path) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    fail(path, "object key \"" + key + "\" is not an index");
  }
  if (pos != key.size()) fail(path, "object key \"" + key + "\" is not an index");
  return v;
}

// Scalars: rationals as "p/q" strings, others as {"conductor": N, "coeffs": [...]}.

inline Json to_json(const Scalar& s) {
  const Scalar r = s.reduced();
  if (const auto q = r.as_rational()) return q->str();
  Json coeffs = Json::array();
  for (const auto& c : r.coeffs()) coeffs.push_back(c.str());
  return Json{{"conductor", r.conductor()}, {"coeffs", coeffs}};
}

inline Rational rational_from(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) fail(path, "expected a scalar");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

inline Scalar scalar_from(const Json& j, const std::string& path) {
  if (!j.is_object()) return Scalar(rational_from(j, path));
  const int n = static_cast<int>(index_of(at(j, "conductor", path), path + "/conductor"));
  if (n < 1 || n > kMaxConductor) fail(path + "/conductor", "conductor out of range");
  const auto& cs = at(j, "coeffs", path);
  if (!cs.is_array()) fail(path + "/coeffs", "expected an array");
  Scalar::Coeffs c;
  for (std::size_t i = 0; i < cs.size(); ++i) c.push_back(rational_from(cs[i], path + "/coeffs/" + std::to_string(i)));
  try {
    return Scalar(n, std::move(c));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

inline Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Vec vec_from(const Json& j, const std::string& path, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) fail(path, "expected an array");
  if (size && j.size() != *size) fail(path, "expected " + std::to_string(*size) + " entries");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from(j[i], path + "/" + std::to_string(i)));
  return v;
}

inline Json to_json(const Matrix<Scalar>& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline Matrix<Scalar> matrix_from(const Json& j, const std::string& path, std::optional<std::size_t> cols = std::nullopt) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(vec_from(j[i], path + "/" + std::to_string(i), cols));
    if (!cols) cols = rows.back().size();
  }
  return Matrix<Scalar>::from_rows(rows, cols.value_or(0));
}

// Tensors: {"arity", "dim", "entries": [[i, j, (k,) scalar], ...]}.

inline Json to_json(const TensorElement& t) {
  Json e = Json::array();
  for (const auto& term : t.entries()) {
    const auto idx = t.split(term.index);
    Json row = Json::array();
    for (int s = 0; s < t.arity(); ++s) row.push_back(idx[s]);
    row.push_back(to_json(term.value));
    e.push_back(row);
  }
  return Json{{"arity", t.arity()}, {"dim", t.dim()}, {"entries", e}};
}

inline TensorElement tensor_from(const Json& j, const std::string& path) {
  const int arity = static_cast<int>(index_of(at(j, "arity", path), path + "/arity"));
  if (arity != 2 && arity != 3) fail(path + "/arity", "arity must be 2 or 3");
  const std::size_t d = index_of(at(j, "dim", path), path + "/dim");
  const auto& es = at(j, "entries", path);
  if (!es.is_array()) fail(path + "/entries", "expected an array");
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  for (std::size_t n = 0; n < es.size(); ++n) {
    const std::string p = path + "/entries/" + std::to_string(n);
    if (!es[n].is_array() || es[n].size() != static_cast<std::size_t>(arity) + 1) fail(p, "malformed entry");
    std::size_t flat = 0;
    for (int s = 0; s < arity; ++s) {
      const std::size_t i = index_of(es[n][s], p + "/" + std::to_string(s));
      if (i >= d) fail(p, "index out of range");
      flat = flat * d + i;
    }
    terms.emplace_back(static_cast<std::uint32_t>(flat), scalar_from(es[n][arity], p + "/" + std::to_string(arity)));
  }
  Accumulator acc(arity == 2 ? d * d : d * d * d);
  for (auto& [i, v] : terms) acc.add(i, v);
  return TensorElement(arity, d, acc.finish());
}

// Algebra dump.

inline Json to_json(const HopfSuperAlgebra& a) {
  const std::size_t d = a.dim();
  Json mult = Json::array(), comult = Json::array(), antipode = Json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : a.product(i, j)) mult.push_back(Json::array({i, j, t.index, to_json(t.value)}));
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& t : a.coproduct(i)) comult.push_back(Json::array({i, t.index / d, t.index % d, to_json(t.value)}));
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& t : a.antipode(i)) antipode.push_back(Json::array({i, t.index, to_json(t.value)}));
  Json parity = Json::array();
  for (auto p : a.parity()) parity.push_back(static_cast<int>(p));
  return Json{{"dim", d},           {"parity", parity},           {"conductor", a.conductor()},
              {"mult", mult},       {"comult", comult},           {"antipode", antipode},
              {"unit", to_json(a.unit())}, {"counit", to_json(a.counit())}};
}

inline HopfSuperAlgebra algebra_from(const Json& j, const std::string& path = "") {
  const std::size_t d = index_of(at(j, "dim", path), path + "/dim");
  if (d == 0) fail(path + "/dim", "dimension must be positive");
  HopfSuperAlgebra::Parts p;
  const auto& par = at(j, "parity", path);
  if (!par.is_array() || par.size() != d) fail(path + "/parity", "expected dim entries");
  for (std::size_t i = 0; i < d; ++i) {
    const auto v = index_of(par[i], path + "/parity/" + std::to_string(i));
    if (v > 1) fail(path + "/parity/" + std::to_string(i), "parity must be 0 or 1");
    p.parity.push_back(static_cast<Parity>(v));
  }
  auto triples = [&](const char* key, std::size_t width, auto&& sink) {
    const auto& arr = at(j, key, path);
    if (!arr.is_array()) fail(path + "/" + key, "expected an array");
    for (std::size_t n = 0; n < arr.size(); ++n) {
      const std::string q = path + "/" + key + "/" + std::to_string(n);
      if (!arr[n].is_array() || arr[n].size() != width + 1) fail(q, "malformed entry");
      std::vector<std::size_t> idx;
      for (std::size_t s = 0; s < width; ++s) {
        idx.push_back(index_of(arr[n][s], q + "/" + std::to_string(s)));
        if (idx.back() >= d) fail(q, "index out of range");
      }
      sink(idx, scalar_from(arr[n][width], q + "/" + std::to_string(width)));
    }
  };
  std::vector<Accumulator> mult, comult, anti;
  for (std::size_t i = 0; i < d * d; ++i) mult.emplace_back(d);
  for (std::size_t i = 0; i < d; ++i) {
    comult.emplace_back(d * d);
    anti.emplace_back(d);
  }
  triples("mult", 3, [&](const auto& ix, const Scalar& s) { mult[ix[0] * d + ix[1]].add(static_cast<std::uint32_t>(ix[2]), s); });
  triples("comult", 3, [&](const auto& ix, const Scalar& s) { comult[ix[0]].add(static_cast<std::uint32_t>(ix[1] * d + ix[2]), s); });
  triples("antipode", 2, [&](const auto& ix, const Scalar& s) { anti[ix[0]].add(static_cast<std::uint32_t>(ix[1]), s); });
  for (auto& m : mult) p.mult.push_back(m.finish());
  for (auto& c : comult) p.comult.push_back(c.finish());
  for (auto& s : anti) p.antipode.push_back(s.finish());
  p.unit = vec_from(at(j, "unit", path), path + "/unit", d);
  p.counit = vec_from(at(j, "counit", path), path + "/counit", d);
  return HopfSuperAlgebra(std::move(p));
}

// Groups and actions.

inline Json to_json(const FiniteGroup& g) {
  if (const auto& inv = g.abelian_invariants()) return Json{{"abelian_invariants", *inv}};
  return Json{{"cayley", g.table()}};
}

inline FiniteGroup group_from(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a group object");
  if (j.contains("abelian_invariants")) {
    const auto& a = j["abelian_invariants"];
    if (!a.is_array()) fail(path + "/abelian_invariants", "expected an array");
    std::vector<int> inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto v = index_of(a[i], path + "/abelian_invariants/" + std::to_string(i));
      if (v < 1) fail(path + "/abelian_invariants/" + std::to_string(i), "invariant must be positive");
      inv.push_back(static_cast<int>(v));
    }
    return FiniteGroup::abelian(inv);
  }
  if (j.contains("cayley")) {
    const auto& t = j["cayley"];
    if (!t.is_array()) fail(path + "/cayley", "expected an array of rows");
    std::vector<std::vector<Elem>> table;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t[i].is_array()) fail(path + "/cayley/" + std::to_string(i), "expected a row");
      std::vector<Elem> row;
      for (std::size_t k = 0; k < t[i].size(); ++k)
        row.push_back(static_cast<Elem>(index_of(t[i][k], path + "/cayley/" + std::to_string(i) + "/" + std::to_string(k))));
      table.push_back(std::move(row));
    }
    try {
      return FiniteGroup(std::move(table));
    } catch (const Error& e) {
      fail(path + "/cayley", e.what());
    }
  }
  fail(path, "expected \"abelian_invariants\" or \"cayley\"");
}

/// Matrices may be given for every element or for generators only.
inline Json to_json(const GroupAction& w) {
  Json m = Json::object();
  for (std::size_t g = 0; g < w.matrices.size(); ++g) m[std::to_string(g)] = to_json(w.matrices[g]);
  return Json{{"dim", w.dim}, {"matrices", m}};
}

inline GroupAction action_from(const Json& j, const FiniteGroup& g, const std::string& path) {
  const std::size_t m = index_of(at(j, "dim", path), path + "/dim");
  if (m > 16) fail(path + "/dim", "dim W is limited to 16");
  const auto& mats = j.contains("matrices") ? j["matrices"] : Json::object();
  if (!mats.is_object()) fail(path + "/matrices", "expected an object keyed by element index");
  std::vector<Elem> gens;
  std::vector<Matrix<Scalar>> ms;
  for (const auto& [key, val] : mats.items()) {
    const std::string q = path + "/matrices/" + key;
    const auto e = parse_key(key, q);
    if (e >= g.order()) fail(q, "element index out of range");
    auto mat = matrix_from(val, q, m);
    if (mat.rows() != m) fail(q, "expected a dim x dim matrix");
    gens.push_back(static_cast<Elem>(e));
    ms.push_back(std::move(mat));
  }
  if (gens.empty()) return GroupAction::trivial(g, m);
  if (gens.size() == g.order()) {
    GroupAction w{m, std::vector<Matrix<Scalar>>(g.order())};
    for (std::size_t i = 0; i < gens.size(); ++i) w.matrices[gens[i]] = ms[i];
    return w;
  }
  try {
    return GroupAction::from_generators(g, m, gens, ms);
  } catch (const Error& e) {
    fail(path + "/matrices", e.what());
  }
}

// Septuples.

inline Json to_json(const TriangularSeptuple& s) {
  Json v;
  if (const auto* pol = std::get_if<PolarizationData>(&s.V))
    v = Json{{"polarization", {{"K", pol->K}, {"Khat", pol->Khat}}}};
  else
    v = Json{{"twist", to_json(std::get<ExplicitTwist>(s.V).twist)}};
  return Json{{"group", to_json(s.G)},
              {"W", to_json(s.W)},
              {"H", {{"generators", s.H_generators}}},
              {"Y", {{"basis", to_json(s.Y)}}},
              {"B", to_json(s.B)},
              {"V", v},
              {"u", s.u}};
}

inline std::vector<Elem> elems_from(const Json& j, const FiniteGroup& g, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of element indices");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto e = index_of(j[i], path + "/" + std::to_string(i));
    if (e >= g.order()) fail(path + "/" + std::to_string(i), "element index out of range");
    out.push_back(static_cast<Elem>(e));
  }
  return out;
}

inline TriangularSeptuple septuple_from(const Json& j, const std::string& path = "") {
  TriangularSeptuple s;
  s.G = group_from(at(j, "group", path), path + "/group");
  s.W = action_from(at(j, "W", path), s.G, path + "/W");
  s.H_generators = j.contains("H") ? elems_from(at(j["H"], "generators", path + "/H"), s.G, path + "/H/generators")
                                   : std::vector<Elem>{};
  if (j.contains("Y")) {
    s.Y = matrix_from(at(j["Y"], "basis", path + "/Y"), path + "/Y/basis", s.W.dim);
  } else {
    s.Y = Matrix<Scalar>::identity(s.W.dim);
  }
  s.B = j.contains("B") ? matrix_from(j["B"], path + "/B", s.Y.rows()) : Matrix<Scalar>(0, 0);
  if (j.contains("V")) {
    const auto& v = j["V"];
    if (v.contains("polarization")) {
      const auto& p = v["polarization"];
      s.V = PolarizationData{elems_from(at(p, "K", path + "/V/polarization"), s.G, path + "/V/polarization/K"),
                             elems_from(at(p, "Khat", path + "/V/polarization"), s.G, path + "/V/polarization/Khat")};
    } else if (v.contains("twist")) {
      s.V = ExplicitTwist{tensor_from(v["twist"], path + "/V/twist")};
    } else if (!v.is_object() || !v.empty()) {
      fail(path + "/V", "expected {\"polarization\": ...} or {\"twist\": ...}");
    }
  }
  s.u = static_cast<Elem>(index_of(at(j, "u", path), path + "/u"));
  if (s.u >= s.G.order()) fail(path + "/u", "element index out of range");
  return s;
}

// Type 2 data: phi as a matrix of roots of unity, n keyed by element index.

inline Json to_json(const Type2Data& t) {
  std::vector<Vec> rows(t.G.order(), Vec(t.G.order()));
  for (Elem g = 0; g < t.G.order(); ++g)
    for (Elem h = 0; h < t.G.order(); ++h) rows[g][h] = t.phi.value(g, h);
  Json phi = Json::array();
  for (const auto& r : rows) phi.push_back(to_json(r));
  Json n = Json::object();
  for (Elem g = 0; g < t.G.order(); ++g)
    if (t.n[g]) n[std::to_string(g)] = t.n[g];
  return Json{{"group", to_json(t.G)}, {"phi", phi}, {"n", n}};
}

inline Type2Data type2_from(const Json& j, const std::string& path = "") {
  Type2Data t;
  t.G = group_from(at(j, "group", path), path + "/group");
  const auto m = matrix_from(at(j, "phi", path), path + "/phi", t.G.order());
  if (m.rows() != t.G.order()) fail(path + "/phi", "expected a |G| x |G| matrix");
  std::vector<std::vector<Scalar>> values;
  for (std::size_t i = 0; i < m.rows(); ++i) values.push_back(m.row(i));
  try {
    t.phi = Bicharacter::from_values(values, t.G.exponent());
  } catch (const Error& e) {
    fail(path + "/phi", e.what());
  }
  t.n.assign(t.G.order(), 0);
  const auto& n = j.contains("n") ? j["n"] : Json::object();
  if (!n.is_object()) fail(path + "/n", "expected an object keyed by element index");
  for (const auto& [key, val] : n.items()) {
    const auto g = parse_key(key, path + "/n/" + key);
    if (g >= t.G.order()) fail(path + "/n/" + key, "element index out of range");
    t.n[g] = static_cast<int>(index_of(val, path + "/n/" + key));
  }
  return t;
}

}  // namespace chevhopf::json_io
