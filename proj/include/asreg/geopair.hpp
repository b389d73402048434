#pragma once

// Geometric pairs (E, sigma) of Types P, S, T and their relation spaces.

#include "asreg/nctensor.hpp"
#include "asreg/projgeom.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace asreg {

enum class Kind { P1, P2, S1, S2, T1, T2 };

inline constexpr Kind kAllKinds[] = {Kind::P1, Kind::P2, Kind::S1, Kind::S2, Kind::T1, Kind::T2};

const char* to_string(Kind k);
std::optional<Kind> parse_kind(std::string_view text);
/// 'P', 'S' or 'T'.
char letter_of(Kind k);
/// Subscript 1: sigma fixes each component. Subscript 2: sigma switches them.
bool fixes_components(Kind k);

/// Parameter values by name ("alpha", "beta").
using Params = std::map<std::string, Scalar>;

class SideConditionError : public Error {
 public:
  using Error::Error;
};

struct GeometricPair {
  Kind kind;
  Params params;
  /// Type P: sigma(p, q) = (q, tau p). Unused for S and T.
  Mat2 tau;
  /// Types S and T: E = C_tau1 ∪ C_tau2.
  std::optional<PairedMaps> components;

  bool is_type_p() const { return !components.has_value(); }
};

/// Validates the parameter names and the side conditions of the kind.
void check_params(Kind kind, const Params& params);

/// Normal forms:
///   P1 tau = diag(1, alpha), P2 tau = [[1,1],[0,1]];
///   S1 tau_k = diag(-a_k, 1) and S2 tau_k = [[0,1],[-a_k,0]] with (a_1, a_2) = (alpha, beta);
///   T1 tau1 = [[1,beta],[0,1]], tau2 = [[1,beta-1],[0,1]];
///   T2 tau1 = [[1,1],[0,-1]], tau2 = [[1,-1],[0,-1]], or with a beta parameter
///   tau1 = [[1,beta],[0,-1]], tau2 = [[1,beta-1],[0,-1]].
GeometricPair make_geometric_pair(Kind kind, const Params& params = {});

/// True when (p, q) lies on E.
bool on_E(const GeometricPair& gp, const ProjPoint& p, const ProjPoint& q);

/// sigma(p, q) for (p, q) in E. Throws Error when the point is off E.
PointPair sigma_apply(const GeometricPair& gp, const ProjPoint& p, const ProjPoint& q);

/// Deterministic pseudorandom points of E paired with (pi2 ∘ sigma)(p, q).
/// For S and T, n is split evenly between the components and each component
/// contributes (1:0).
std::vector<PointTriple> sample_triples(const GeometricPair& gp, std::size_t n, std::uint64_t seed);

/// The relation space cut out by vanishing on the sampled graph of sigma.
RelationSpace g2_relations(const GeometricPair& gp, std::uint64_t seed = 0);

/// The two printed defining relations of the kind at the given parameters.
std::array<Tensor, 2> table_polynomials(Kind kind, const Params& params = {});
RelationSpace table_relations(Kind kind, const Params& params = {});

/// R' = (id ⊗ theta^{-1} ⊗ theta^{-2})(R), so that (id ⊗ theta ⊗ theta^2)(R') = R.
RelationSpace twist_relations(const RelationSpace& r, const Mat2& theta);

/// Random small rational parameters satisfying the side conditions of the kind.
/// T2 gets no parameters.
Params random_params(Kind kind, std::mt19937_64& rng);

/// Reads a parameter, throwing when it is missing.
const Scalar& param(const Params& params, const std::string& name);

}  // namespace asreg
