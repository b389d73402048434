#include "asreg/cli.hpp"

#include "asreg/classify.hpp"
#include "asreg/superpot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace asreg::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

Json scalar_json(const Scalar& s) { return render_scalar(s); }

Json matrix_json(const Mat2& m) {
  return Json::array({Json::array({scalar_json(m(0, 0)), scalar_json(m(0, 1))}),
                      Json::array({scalar_json(m(1, 0)), scalar_json(m(1, 1))})});
}

Json point_json(const ProjPoint& p) { return Json::array({scalar_json(p.a()), scalar_json(p.b())}); }

Json params_json(const Params& params) {
  Json out = Json::object();
  for (const auto& [name, value] : params) out[name] = scalar_json(value);
  return out;
}

Json span_json(const RelationSpace& r) {
  const auto rows = r.rref_basis();
  return Json::array({render_tensor(rows[0]), render_tensor(rows[1])});
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw UsageError("scalars must be strings in the a+b*i grammar or integers");
}

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON in ") + what + ": " + e.what());
  }
}

Mat2 matrix_from_text(const std::string& text, const char* what) {
  const Json j = parse_json(text, what);
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
      j[1].size() != 2) {
    throw UsageError(std::string(what) + " must be a 2x2 matrix [[m11,m12],[m21,m22]]");
  }
  Mat2 m(scalar_from_json(j[0][0]), scalar_from_json(j[0][1]), scalar_from_json(j[1][0]),
         scalar_from_json(j[1][1]));
  if (!m.invertible()) throw UsageError(std::string(what) + " is singular");
  return m;
}

Kind kind_from_text(const std::string& text) {
  auto k = parse_kind(text);
  if (!k) throw UsageError("unknown kind '" + text + "' (expected P1, P2, S1, S2, T1 or T2)");
  return *k;
}

AlgebraDescriptor descriptor_from_text(const std::string& text, const char* what) {
  const Json j = parse_json(text, what);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw UsageError(std::string(what) + " must look like {\"kind\":\"T1\",\"params\":{\"beta\":\"3/2\"}}");
  }
  Params params;
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw UsageError(std::string(what) + ": params must be an object");
    for (const auto& [name, value] : j["params"].items()) params[name] = scalar_from_json(value);
  }
  return AlgebraDescriptor(kind_from_text(j["kind"].get<std::string>()), std::move(params));
}

Json tensor_matrix_json(const MMatrix& m) {
  return Json::array({Json::array({render_tensor(m(0, 0)), render_tensor(m(0, 1))}),
                      Json::array({render_tensor(m(1, 0)), render_tensor(m(1, 1))})});
}

Json witness_json(const EquivalenceVerdict& v) {
  if (const auto* tau = std::get_if<Mat2>(&v.witness)) return Json{{"tau", matrix_json(*tau)}};
  if (const auto* c = std::get_if<MoritaCertificate>(&v.witness)) {
    return Json{{"mu0", matrix_json(c->mu0)},      {"mu1", matrix_json(c->mu1)},
                {"lEven", matrix_json(c->l_even)}, {"lOdd", matrix_json(c->l_odd)},
                {"rEven", matrix_json(c->r_even)}, {"rOdd", matrix_json(c->r_odd)},
                {"reversed", c->reversed}};
  }
  return nullptr;
}

int verdict_exit(Related r) {
  switch (r) {
    case Related::True: return kTrue;
    case Related::False: return kFalse;
    default: return kUndecided;
  }
}

struct PairArgs {
  std::string kind;
  std::string alpha;
  std::string beta;
  std::string via = "table";
  std::uint64_t seed = 0;

  void add_to(CLI::App* sub) {
    sub->add_option("--kind", kind, "P1, P2, S1, S2, T1 or T2")->required();
    sub->add_option("--alpha", alpha, "alpha parameter");
    sub->add_option("--beta", beta, "beta parameter");
    sub->add_option("--via", via, "table formulas or the G2 kernel")->check(CLI::IsMember({"table", "g2"}));
    sub->add_option("--seed", seed, "sampling seed for --via g2");
  }

  Params params() const {
    Params p;
    if (!alpha.empty()) p["alpha"] = parse_scalar(alpha);
    if (!beta.empty()) p["beta"] = parse_scalar(beta);
    return p;
  }

  RelationSpace relations(Kind k, const Params& p) const {
    if (via == "g2") return g2_relations(make_geometric_pair(k, p), seed);
    return table_relations(k, p);
  }
};

Json pair_header(Kind k, const Params& p, const std::string& via) {
  return Json{{"kind", to_string(k)}, {"params", params_json(p)}, {"via", via}};
}

int cmd_relations(const PairArgs& args, Json& out) {
  const Kind k = kind_from_text(args.kind);
  const Params p = args.params();
  check_params(k, p);
  out = pair_header(k, p, args.via);
  if (args.via == "g2") {
    const RelationSpace r = args.relations(k, p);
    const auto rows = r.rref_basis();
    out["f1"] = render_tensor(rows[0]);
    out["f2"] = render_tensor(rows[1]);
    out["span"] = span_json(r);
  } else {
    const auto f = table_polynomials(k, p);
    out["f1"] = render_tensor(f[0]);
    out["f2"] = render_tensor(f[1]);
    out["span"] = span_json(RelationSpace(f[0], f[1]));
  }
  return kTrue;
}

Json certificate_json(const AsRegCertificate& cert) {
  Json out;
  if (cert.standard) {
    out["standard"] = matrix_json(cert.standard->Q);
    out["basisChange"] = matrix_json(cert.standard->P);
    out["basis"] = cert.standard->basis;
  } else {
    out["standard"] = nullptr;
  }
  out["mMatrix"] = tensor_matrix_json(cert.m);
  out["commonZeroEmpty"] = cert.common_zero_empty;
  out["asRegular"] = cert.as_regular;
  return out;
}

int cmd_check_asreg(const PairArgs& args, const std::string& f1, const std::string& f2, Json& out) {
  AsRegCertificate cert;
  if (!f1.empty() || !f2.empty()) {
    if (f1.empty() || f2.empty() || !args.kind.empty()) {
      throw UsageError("give either --kind or both --f1 and --f2");
    }
    const CubicPresentation pres(parse_tensor(f1, 3), parse_tensor(f2, 3), "command line");
    out = Json{{"f1", render_tensor(pres.f1)}, {"f2", render_tensor(pres.f2)}};
    cert = check_as_regular(pres);
  } else {
    if (args.kind.empty()) throw UsageError("give either --kind or both --f1 and --f2");
    const Kind k = kind_from_text(args.kind);
    const Params p = args.params();
    check_params(k, p);
    out = pair_header(k, p, args.via);
    if (args.via == "g2") {
      cert = check_as_regular(CubicPresentation::from_space(args.relations(k, p), "g2"));
    } else {
      const auto f = table_polynomials(k, p);
      cert = check_as_regular(CubicPresentation(f[0], f[1], "table"));
    }
  }
  const Json cert_json = certificate_json(cert);
  for (const auto& [key, value] : cert_json.items()) out[key] = value;
  return cert.as_regular ? kTrue : kFalse;
}

int cmd_equivalence(bool iso, const std::string& a_text, const std::string& b_text,
                    const std::string& method, Json& out) {
  const AlgebraDescriptor a = descriptor_from_text(a_text, "--a");
  const AlgebraDescriptor b = descriptor_from_text(b_text, "--b");
  EquivalenceVerdict v;
  if (method == "table") {
    v = iso ? iso_table_verdict(a, b) : morita_table_verdict(a, b);
  } else {
    v = iso ? iso_geometric(a, b) : morita_geometric(a, b);
  }
  out = Json::object();
  if (v.related == Related::True || v.related == Related::False) {
    out["related"] = v.related == Related::True;
  } else {
    out["related"] = "unknown";
  }
  out["method"] = to_string(v.method);
  out["reason"] = v.reason;
  if (v.related == Related::NotOverField) out["notOverField"] = true;
  out["witness"] = witness_json(v);
  return verdict_exit(v.related);
}

int cmd_intersect(const std::string& t1, const std::string& t2, Json& out) {
  const PairedMaps pm{matrix_from_text(t1, "--tau1"), matrix_from_text(t2, "--tau2")};
  const Intersection type = intersection_type(pm);
  out = Json{{"type", to_string(type)}};
  if (type == Intersection::Infinite) return kTrue;
  const IntersectionPoints pts = intersection_points(pm);
  if (std::holds_alternative<NotOverField>(pts)) {
    out["points"] = nullptr;
    out["notOverField"] = true;
    return kUndecided;
  }
  Json arr = Json::array();
  for (const auto& [p, q] : std::get<std::vector<PointPair>>(pts)) {
    arr.push_back(Json::array({point_json(p), point_json(q)}));
  }
  out["points"] = arr;
  return kTrue;
}

int cmd_verify_tables(std::size_t samples, std::uint64_t seed, Json& out) {
  std::mt19937_64 rng(seed);
  Json rows = Json::array();
  bool all_pass = true;
  for (Kind k : kAllKinds) {
    std::size_t g2_pass = 0;
    std::size_t reg_pass = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const Params p = random_params(k, rng);
      const std::uint64_t sample_seed = rng();
      const RelationSpace table = table_relations(k, p);
      try {
        if (span_equal(g2_relations(make_geometric_pair(k, p), sample_seed), table)) ++g2_pass;
      } catch (const KernelDimensionError&) {
      }
      if (check_as_regular(CubicPresentation::from_space(table, "table")).as_regular) ++reg_pass;
    }
    const bool pass = g2_pass == samples && reg_pass == samples;
    all_pass = all_pass && pass;
    rows.push_back(Json{{"kind", to_string(k)},
                        {"samples", samples},
                        {"g2MatchesTable", g2_pass},
                        {"asRegular", reg_pass},
                        {"pass", pass}});
  }
  out = Json{{"samples", samples}, {"seed", seed}, {"rows", rows}, {"allPass", all_pass}};
  return all_pass ? kTrue : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cubic AS-regular algebras of Types P, S, T on P1xP1", "asreg"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  PairArgs rel_args;
  auto* relations = app.add_subcommand("relations", "defining relations of a pair");
  rel_args.add_to(relations);

  PairArgs reg_args;
  std::string f1;
  std::string f2;
  auto* check = app.add_subcommand("check-asreg", "regularity certificate");
  check->add_option("--kind", reg_args.kind, "P1, P2, S1, S2, T1 or T2");
  check->add_option("--alpha", reg_args.alpha, "alpha parameter");
  check->add_option("--beta", reg_args.beta, "beta parameter");
  check->add_option("--via", reg_args.via, "table formulas or the G2 kernel")
      ->check(CLI::IsMember({"table", "g2"}));
  check->add_option("--seed", reg_args.seed, "sampling seed for --via g2");
  check->add_option("--f1", f1, "first relation, e.g. x^2y-yx^2");
  check->add_option("--f2", f2, "second relation");

  std::string a_text;
  std::string b_text;
  std::string method = "table";
  auto add_equiv = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--a", a_text, R"(descriptor, e.g. {"kind":"P1","params":{"alpha":"2"}})")->required();
    sub->add_option("--b", b_text, "second descriptor")->required();
    sub->add_option("--method", method, "table or geometric")->check(CLI::IsMember({"table", "geometric"}));
    return sub;
  };
  auto* iso = add_equiv("iso", "graded algebra isomorphism");
  auto* morita = add_equiv("morita", "graded Morita equivalence");

  std::string tau1;
  std::string tau2;
  auto* intersect = app.add_subcommand("intersect", "intersection of two graph divisors");
  intersect->add_option("--tau1", tau1, "matrix [[m11,m12],[m21,m22]]")->required();
  intersect->add_option("--tau2", tau2, "matrix")->required();

  std::size_t samples = 20;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify-tables", "check every table row on random parameters");
  verify->add_option("--samples", samples, "specializations per row")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kUsage;
  }

  Json result;
  int code = kTrue;
  try {
    if (relations->parsed()) {
      code = cmd_relations(rel_args, result);
    } else if (check->parsed()) {
      code = cmd_check_asreg(reg_args, f1, f2, result);
    } else if (iso->parsed()) {
      code = cmd_equivalence(true, a_text, b_text, method, result);
    } else if (morita->parsed()) {
      code = cmd_equivalence(false, a_text, b_text, method, result);
    } else if (intersect->parsed()) {
      code = cmd_intersect(tau1, tau2, result);
    } else if (verify->parsed()) {
      code = cmd_verify_tables(samples, seed, result);
    }
  } catch (const UsageError& e) {
    err << Json{{"error", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << Json{{"error", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const SideConditionError& e) {
    err << Json{{"error", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << Json{{"error", e.what()}}.dump() << "\n";
    return kFalse;
  }
  out << (pretty ? result.dump(2) : result.dump()) << "\n";
  return code;
}

}  // namespace asreg::cli
