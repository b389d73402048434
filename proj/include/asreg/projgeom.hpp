#pragma once

// Points and automorphisms of P^1, graph divisors in P^1 x P^1.
//
// A matrix acts on a point representative (a:b) by column multiplication.
// This is the same convention nctensor uses for slot substitution.

#include "asreg/linalg.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace asreg {

/// A point (a:b) of P^1, stored with its first nonzero coordinate equal to 1.
class ProjPoint {
 public:
  ProjPoint(Scalar a, Scalar b);
  static ProjPoint infinity() { return {1, 0}; }  // (1:0)
  static ProjPoint affine(Scalar a) { return {std::move(a), 1}; }  // (a:1)

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  /// Coordinate by letter index: 0 gives a, 1 gives b.
  const Scalar& coord(int letter) const { return letter == 0 ? a_ : b_; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  Scalar a_;
  Scalar b_;
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);

using PointPair = std::pair<ProjPoint, ProjPoint>;

/// Invertible matrix scaled so its first nonzero entry is 1.
Mat2 canonical_map(const Mat2& m);
/// Equality in PGL2.
inline bool proj_equal(const Mat2& a, const Mat2& b) { return a.proportional_to(b); }

ProjPoint act(const Mat2& m, const ProjPoint& p);
PointPair swap_nu(const ProjPoint& p, const ProjPoint& q);

/// The reducible divisor C_tau1 + C_tau2, C_tau = {(p, tau p)}.
struct PairedMaps {
  Mat2 tau1;
  Mat2 tau2;
  PairedMaps swapped() const { return {tau2, tau1}; }
};

enum class Intersection { Two, One, Infinite };
const char* to_string(Intersection t);

/// tr(m)^2 / det(m); a complete conjugacy invariant of nonscalar classes.
Scalar j_invariant(const Mat2& m);

Intersection intersection_type(const PairedMaps& pm);

struct NotOverField {};

using IntersectionPoints = std::variant<std::vector<PointPair>, NotOverField>;
/// Points of C_tau1 ∩ C_tau2. Throws Error when the graphs coincide.
IntersectionPoints intersection_points(const PairedMaps& pm);

/// Conjugacy in PGL2 over the algebraic closure.
bool proj_similar(const Mat2& m, const Mat2& n);

struct PairSimilarity {
  enum class Status { Found, None, NotOverField };
  Status status = Status::None;
  std::optional<Mat2> witness;  // set when Found
};

/// Looks for mu with mu^{-1} p_i mu = q_i in PGL2 for i = 1, 2.
PairSimilarity pair_similar(const PairedMaps& p, const PairedMaps& q);

/// Same search for a single map: mu^{-1} p mu = q in PGL2.
PairSimilarity map_similar(const Mat2& p, const Mat2& q);

enum class Decision { Yes, No, NotOverField, Unknown };
const char* to_string(Decision d);

enum class EquivMode { TwoEquiv, Equiv };

/// Equivalence (tau1 x tau2) or 2-equivalence (tau x tau) of the divisors.
Decision equiv_E(const PairedMaps& p, const PairedMaps& q, EquivMode mode);

}  // namespace asreg
