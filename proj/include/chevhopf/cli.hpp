#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chevhopf/axioms.hpp"
#include "chevhopf/chevalley.hpp"
#include "chevhopf/isomorphism.hpp"
#include "chevhopf/json_io.hpp"
#include "chevhopf/pointed.hpp"
#include "chevhopf/triangular.hpp"

namespace chevhopf::cli {

using json_io::Json;

enum Exit : int { kOk = 0, kFailed = 1, kInvalid = 2, kUnsupported = 3 };

/// HOPF_MAX_DIM bounds every algebra the CLI builds or reads.
inline std::size_t max_dim() {
  if (const char* v = std::getenv("HOPF_MAX_DIM")) {
    try {
      return std::stoul(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "HOPF_MAX_DIM is not a number");
    }
  }
  return 64;
}

inline void guard_dim(std::size_t d) {
  if (d > max_dim())
    throw Error(ErrorCode::TooLarge, "dimension " + std::to_string(d) + " exceeds HOPF_MAX_DIM=" + std::to_string(max_dim()));
}

inline Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

inline Json report_json(const AxiomReport& rep) {
  Json out = Json::object();
  for (const auto& r : rep.results()) {
    Json e{{"passed", r.passed}};
    if (r.witness) e["witness"] = *r.witness;
    if (!r.detail.empty()) e["detail"] = r.detail;
    out[r.name] = e;
  }
  return out;
}

inline Json chevalley_json(const RadicalReport& r) {
  return Json{{"radical_dim", r.radical.dim()}, {"semisimple", r.semisimple}, {"chevalley", r.chevalley}};
}

/// Algebra dump plus R, Drinfeld element, u and the minimality flags.
inline Json build_json(const TriangularSeptuple& s, const BuildResult& b) {
  Json out = json_io::to_json(b.result.algebra);
  out["R"] = json_io::to_json(b.result.R);
  out["drinfeld"] = json_io::to_json(b.result.drinfeld);
  out["u"] = json_io::to_json(b.u);
  out["minimal"] = minimal_part(b.result.algebra, b.result.R).dim() == b.result.algebra.dim();
  out["pointed"] = minimality_criterion(s).pointed;
  return out;
}

inline int cmd_validate(const std::string& file, std::ostream& out) {
  const auto s = json_io::septuple_from(read_json(file));
  const auto rep = validate_septuple(s);
  out << Json{{"ok", rep.ok()}, {"checks", report_json(rep)}}.dump(2) << "\n";
  return rep.ok() ? kOk : kFailed;
}

inline int cmd_build(const std::string& file, const std::string& out_file, std::ostream& out) {
  const auto s = json_io::septuple_from(read_json(file));
  if (const auto rep = validate_septuple(s); !rep.ok()) {
    out << Json{{"ok", false}, {"checks", report_json(rep)}}.dump(2) << "\n";
    return kInvalid;
  }
  guard_dim(s.G.order() << s.dim_W());
  const auto b = build_A_of_S(s);
  const std::string text = build_json(s, b).dump(2) + "\n";
  if (out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(out_file);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + out_file);
    f << text;
  }
  return kOk;
}

struct CheckSelection {
  bool axioms = false, triangular = false, chevalley = false, minimal = false, all = false;
};

inline int cmd_check(const std::string& file, CheckSelection sel, std::ostream& out) {
  const Json j = read_json(file);
  const auto a = json_io::algebra_from(j);
  guard_dim(a.dim());
  if (!(sel.axioms || sel.triangular || sel.chevalley || sel.minimal)) sel.all = true;
  if (sel.all) sel.axioms = sel.triangular = sel.chevalley = sel.minimal = true;
  std::optional<TensorElement> r;
  if (j.contains("R")) r = json_io::tensor_from(j["R"], "/R");
  if ((sel.triangular || sel.minimal) && !r && !sel.all)
    throw Error(ErrorCode::InvalidInput, "/R: triangular and minimal checks need an R-matrix");
  Json rep = Json::object();
  bool ok = true;
  if (sel.axioms) {
    const auto x = check_hopf_axioms(a);
    rep["axioms"] = report_json(x);
    ok = ok && x.ok();
  }
  if (sel.triangular && r) {
    const auto x = check_triangular(a, *r);
    rep["triangular"] = report_json(x);
    ok = ok && x.ok();
    if (x.ok()) {
      const Vec u = drinfeld_element(a, *r);
      rep["drinfeld_squared_is_unit"] = a.multiply(u, u) == a.unit();
    }
  }
  if (sel.chevalley) {
    const auto x = chevalley_check(a);
    rep["chevalley"] = chevalley_json(x);
    ok = ok && x.chevalley;
  }
  if (sel.minimal && r) {
    try {
      rep["minimal"] = minimal_part(a, *r).dim() == a.dim();
    } catch (const Error& e) {
      rep["minimal"] = false;
      rep["minimal_error"] = e.what();
      ok = false;
    }
  }
  rep["ok"] = ok;
  out << rep.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

inline int cmd_convert(const std::string& t1, const std::string& t2, std::ostream& out) {
  if (!t1.empty()) {
    const auto s = json_io::septuple_from(read_json(t1));
    out << json_io::to_json(type1_to_type2(s)).dump(2) << "\n";
  } else {
    const auto t = json_io::type2_from(read_json(t2));
    out << json_io::to_json(type2_to_type1(t)).dump(2) << "\n";
  }
  return kOk;
}

inline int cmd_enumerate(const std::string& group, int max_n, bool as_json, std::ostream& out) {
  std::vector<int> inv;
  std::stringstream ss(group);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      inv.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "--group expects comma-separated positive integers");
    }
    if (inv.back() < 1) throw Error(ErrorCode::InvalidInput, "--group expects comma-separated positive integers");
  }
  const auto list = enumerate_minimal_pointed(inv, max_n);
  if (as_json) {
    Json arr = Json::array();
    for (const auto& t : list) arr.push_back(json_io::to_json(t));
    out << arr.dump(2) << "\n";
    return kOk;
  }
  out << std::left << std::setw(4) << "#" << std::setw(6) << "u" << std::setw(10) << "|I_phi|" << std::setw(24)
      << "n (element:count)" << "dim\n";
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& t = list[i];
    std::size_t ip = 0;
    int total = 0;
    std::string ns;
    for (Elem g = 0; g < t.G.order(); ++g) {
      if (t.phi.value(g, g) == Scalar(-1)) ++ip;
      if (t.n[g]) {
        ns += (ns.empty() ? "" : " ") + std::to_string(g) + ":" + std::to_string(t.n[g]);
        total += t.n[g];
      }
    }
    out << std::setw(4) << i << std::setw(6) << solve_u(t.G, t.phi) << std::setw(10) << ip << std::setw(24)
        << (ns.empty() ? "-" : ns) << (t.G.order() << total) << "\n";
  }
  out << list.size() << " classes\n";
  return kOk;
}

inline int cmd_iso(const std::string& f1, const std::string& f2, std::ostream& out) {
  const auto s1 = json_io::septuple_from(read_json(f1));
  const auto s2 = json_io::septuple_from(read_json(f2));
  const auto w = septuple_isomorphic(s1, s2);
  Json rep{{"isomorphic", w.has_value()}};
  if (w) {
    Json wj{{"gamma", w->gamma}, {"T", json_io::to_json(w->T)}, {"B_match", w->b_match}};
    if (w->gauge) wj["gauge"] = json_io::to_json(*w->gauge);
    rep["witness"] = wj;
  }
  out << rep.dump(2) << "\n";
  return w ? kOk : kFailed;
}

/// Entry point shared by the executable and the tests; args exclude argv[0].
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact triangular Hopf algebras with the Chevalley property", "chevhopf"};
  app.require_subcommand(1);

  std::string file, out_file, file2, t1, t2, group;
  int max_n = 0;
  bool as_json = false;
  CheckSelection sel;

  auto* validate = app.add_subcommand("validate", "Validate a septuple");
  validate->add_option("file", file, "Septuple JSON")->required();

  auto* build = app.add_subcommand("build", "Build A(S) from a septuple");
  build->add_option("file", file, "Septuple JSON")->required();
  build->add_option("-o,--output", out_file, "Write the algebra dump here");

  auto* check = app.add_subcommand("check", "Run checks on an algebra dump");
  check->add_option("file", file, "Algebra dump JSON")->required();
  check->add_flag("--axioms", sel.axioms);
  check->add_flag("--triangular", sel.triangular);
  check->add_flag("--chevalley", sel.chevalley);
  check->add_flag("--minimal", sel.minimal);
  check->add_flag("--all", sel.all);

  auto* convert = app.add_subcommand("convert", "Type 1 <-> Type 2 conversion");
  auto* o1 = convert->add_option("--t1-to-t2", t1, "Type 1 septuple JSON");
  auto* o2 = convert->add_option("--t2-to-t1", t2, "Type 2 JSON");
  o1->excludes(o2);
  convert->require_option(1);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate minimal pointed data");
  enumerate->add_option("--group", group, "Abelian invariants, e.g. 2,2")->required();
  enumerate->add_option("--max-n", max_n, "Bound on sum of n")->required();
  enumerate->add_flag("--json", as_json, "Emit a JSON array instead of the table");

  auto* iso = app.add_subcommand("iso", "Septuple isomorphism");
  iso->add_option("file1", file, "First septuple")->required();
  iso->add_option("file2", file2, "Second septuple")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*build) return cmd_build(file, out_file, out);
    if (*check) return cmd_check(file, sel, out);
    if (*convert) return cmd_convert(t1, t2, out);
    if (*enumerate) return cmd_enumerate(group, max_n, as_json, out);
    if (*iso) return cmd_iso(file, file2, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::TooLarge:
      case ErrorCode::Unsupported:
      case ErrorCode::ConductorTooLarge:
        return kUnsupported;
      default:
        return kInvalid;
    }
  } catch (const Json::exception& e) {
    err << "InvalidInput: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace chevhopf::cli
