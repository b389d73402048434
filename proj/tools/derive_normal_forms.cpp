// Tries candidate matrix representatives for each kind, keeps the first one
// whose G2 kernel equals the printed relations at every test specialization,
// and writes the accepted representatives to a JSON fixtures file.
//
// usage: derive_normal_forms [output.json]

#include "asreg/geopair.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using namespace asreg;
using Json = nlohmann::ordered_json;

namespace {

struct Candidate {
  std::string description;
  std::function<GeometricPair(const Params&)> build;
};

GeometricPair type_p(Kind k, const Params& p, Mat2 tau) { return {k, p, std::move(tau), std::nullopt}; }

GeometricPair reducible(Kind k, const Params& p, Mat2 t1, Mat2 t2) {
  return {k, p, Mat2::identity(), PairedMaps{std::move(t1), std::move(t2)}};
}

Scalar a_of(const Params& p) { return param(p, "alpha"); }
Scalar b_of(const Params& p) { return param(p, "beta"); }

std::vector<Candidate> candidates(Kind k) {
  switch (k) {
    case Kind::P1:
      return {{"tau = diag(alpha, 1)", [](const Params& p) { return type_p(Kind::P1, p, Mat2::diag(a_of(p), 1)); }},
              {"tau = diag(1, alpha)", [](const Params& p) { return type_p(Kind::P1, p, Mat2::diag(1, a_of(p))); }}};
    case Kind::P2:
      return {{"tau = [[1,0],[1,1]]", [](const Params& p) { return type_p(Kind::P2, p, Mat2(1, 0, 1, 1)); }},
              {"tau = [[1,1],[0,1]]", [](const Params& p) { return type_p(Kind::P2, p, Mat2(1, 1, 0, 1)); }}};
    case Kind::S1:
      return {{"tau_k = diag(a_k, 1)",
               [](const Params& p) {
                 return reducible(Kind::S1, p, Mat2::diag(a_of(p), 1), Mat2::diag(b_of(p), 1));
               }},
              {"tau_k = diag(-a_k, 1)", [](const Params& p) {
                 return reducible(Kind::S1, p, Mat2::diag(-a_of(p), 1), Mat2::diag(-b_of(p), 1));
               }}};
    case Kind::S2:
      return {{"tau_k = [[0,1],[a_k,0]]",
               [](const Params& p) {
                 return reducible(Kind::S2, p, Mat2(0, 1, a_of(p), 0), Mat2(0, 1, b_of(p), 0));
               }},
              {"tau_k = [[0,1],[-a_k,0]]", [](const Params& p) {
                 return reducible(Kind::S2, p, Mat2(0, 1, -a_of(p), 0), Mat2(0, 1, -b_of(p), 0));
               }}};
    case Kind::T1:
      return {{"tau1 = [[1,beta],[0,1]], tau2 = [[1,beta-1],[0,1]]", [](const Params& p) {
                 return reducible(Kind::T1, p, Mat2(1, b_of(p), 0, 1), Mat2(1, b_of(p) - Scalar(1), 0, 1));
               }}};
    case Kind::T2:
      return {{"tau1 = [[1,1/2],[0,-1]], tau2 = [[1,-1/2],[0,-1]]",
               [](const Params& p) {
                 const Scalar h = Scalar::rational(1, 2);
                 return reducible(Kind::T2, p, Mat2(1, h, 0, -1), Mat2(1, -h, 0, -1));
               }},
              {"tau1 = [[1,1],[0,-1]], tau2 = [[1,-1],[0,-1]]", [](const Params& p) {
                 return reducible(Kind::T2, p, Mat2(1, 1, 0, -1), Mat2(1, -1, 0, -1));
               }}};
  }
  return {};
}

Json matrix_json(const Mat2& m) {
  return Json::array({Json::array({m(0, 0).str(), m(0, 1).str()}), Json::array({m(1, 0).str(), m(1, 1).str()})});
}

}  // namespace

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : "normal_forms.json";
  std::mt19937_64 rng(2024);
  Json doc = Json::object();
  bool ok = true;
  for (Kind k : kAllKinds) {
    std::vector<Params> specs;
    for (int s = 0; s < 8; ++s) specs.push_back(random_params(k, rng));
    Json entry{{"accepted", nullptr}, {"rejected", Json::array()}, {"checks", Json::array()}};
    for (const auto& cand : candidates(k)) {
      bool matches = true;
      for (const auto& p : specs) {
        try {
          matches = span_equal(g2_relations(cand.build(p)), table_relations(k, p));
        } catch (const Error&) {
          matches = false;
        }
        if (!matches) break;
      }
      if (!matches) {
        entry["rejected"].push_back(cand.description);
        continue;
      }
      entry["accepted"] = cand.description;
      for (const auto& p : specs) {
        const GeometricPair gp = cand.build(p);
        Json params = Json::object();
        for (const auto& [name, value] : p) params[name] = value.str();
        Json check{{"params", params}};
        if (gp.is_type_p()) {
          check["tau"] = matrix_json(gp.tau);
        } else {
          check["tau1"] = matrix_json(gp.components->tau1);
          check["tau2"] = matrix_json(gp.components->tau2);
        }
        entry["checks"].push_back(check);
      }
      break;
    }
    if (entry["accepted"].is_null()) ok = false;
    std::cout << to_string(k) << ": " << (entry["accepted"].is_null() ? "no candidate matched" : entry["accepted"].get<std::string>())
              << "\n";
    doc[to_string(k)] = entry;
  }
  std::ofstream(path) << doc.dump(2) << "\n";
  return ok ? 0 : 1;
}
