#pragma once

// Isomorphism and graded Morita equivalence: parameter rules and geometric
// searches over automorphisms of P^1.

#include "asreg/geopair.hpp"

#include <string>
#include <variant>

namespace asreg {

struct AlgebraDescriptor {
  Kind kind;
  Params params;

  /// Validates the side conditions.
  AlgebraDescriptor(Kind k, Params p);
  GeometricPair pair() const { return make_geometric_pair(kind, params); }
  /// The printed relations, or the G2 kernel for the parametrized T2 family.
  RelationSpace relations() const;
};

bool iso_table(const AlgebraDescriptor& a, const AlgebraDescriptor& b);
bool morita_table(const AlgebraDescriptor& a, const AlgebraDescriptor& b);

enum class Related { True, False, Unknown, NotOverField };
const char* to_string(Related r);

enum class Method { Table, Geometric };
const char* to_string(Method m);

/// A sequence mu_n of automorphisms of P^1 given by mu_0, mu_1 and
/// mu_{n+2} = L_{n mod 2} mu_n R_{n mod 2}. The sequence realizes
/// (mu_n x mu_{n+1})(E) = E' and sigma' ∘ (mu_n x mu_{n+1}) = (mu_{n+1} x mu_{n+2}) ∘ sigma.
struct MoritaCertificate {
  Mat2 mu0;
  Mat2 mu1;
  Mat2 l_even;
  Mat2 l_odd;
  Mat2 r_even;
  Mat2 r_odd;
  /// The sequence maps the second algebra's pair to the first one's.
  bool reversed = false;

  Mat2 term(long n) const;
};

struct EquivalenceVerdict {
  Related related = Related::Unknown;
  Method method = Method::Table;
  std::variant<std::monostate, Mat2, MoritaCertificate> witness;
  std::string reason;
};

EquivalenceVerdict iso_table_verdict(const AlgebraDescriptor& a, const AlgebraDescriptor& b);
EquivalenceVerdict morita_table_verdict(const AlgebraDescriptor& a, const AlgebraDescriptor& b);

/// Searches tau with (tau x tau)(E) = E' and sigma' ∘ (tau x tau) = (tau x tau) ∘ sigma.
EquivalenceVerdict iso_geometric(const GeometricPair& a, const GeometricPair& b);
EquivalenceVerdict iso_geometric(const AlgebraDescriptor& a, const AlgebraDescriptor& b);

/// Searches a certified sequence tau_n. A search failure is Unknown, never False.
EquivalenceVerdict morita_geometric(const GeometricPair& a, const GeometricPair& b);
EquivalenceVerdict morita_geometric(const AlgebraDescriptor& a, const AlgebraDescriptor& b);

/// Checks the iso diagram exactly on sampled points of E.
bool verify_iso_witness(const GeometricPair& a, const GeometricPair& b, const Mat2& tau,
                        std::size_t samples = 12);
/// Checks the Morita diagrams for n in [-span, span] exactly on sampled points of E.
bool verify_morita_certificate(const GeometricPair& a, const GeometricPair& b,
                               const MoritaCertificate& cert, long span = 3, std::size_t samples = 12);

struct TypeReport {
  std::string e_a;
  std::string e_b;
  /// Different types: E differs in shape, which rules out any equivalence.
  bool obstruction = false;
  /// For two reducible E: whether the divisors are equivalent (tau1 x tau2).
  Decision e_equivalent = Decision::Unknown;
  std::string reason;
};

TypeReport distinguish_types(const GeometricPair& a, const GeometricPair& b);

}  // namespace asreg
