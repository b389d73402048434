#pragma once

// Superpotentials, derivation-quotient presentations, and the regularity
// certificate: standardness plus an empty common zero set of the M-matrix.

#include "asreg/nctensor.hpp"

#include <array>
#include <optional>
#include <string>

namespace asreg {

bool is_superpotential(const Tensor& w);

/// Some invertible theta with (theta ⊗ id ⊗ id ⊗ id)(phi(w)) = w, if one exists.
std::optional<Mat2> solve_twist_witness(const Tensor& w);

/// lambda with theta^{⊗4}(w) = lambda w, if w is an eigenvector.
std::optional<Scalar> in_aut_w(const Tensor& w, const Mat2& theta);

/// (theta^3 ⊗ theta^2 ⊗ theta ⊗ id)(w).
Tensor ms_twist(const Tensor& w, const Mat2& theta);

struct CubicPresentation {
  Tensor f1;
  Tensor f2;
  RelationSpace space;
  std::string origin;

  CubicPresentation(Tensor a, Tensor b, std::string origin_note = {});
  static CubicPresentation from_space(const RelationSpace& r, std::string origin_note = {});
};

/// f1 = d_x(w), f2 = d_y(w).
CubicPresentation derivation_quotient(const Tensor& w);

/// f_i = m_i1 ⊗ x + m_i2 ⊗ y. Entries have degree 2.
struct MMatrix {
  std::array<std::array<Tensor, 2>, 2> m;

  const Tensor& operator()(int i, int j) const { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  /// Rebuilds (f1, f2).
  std::array<Tensor, 2> reconstruct() const;
  friend bool operator==(const MMatrix&, const MMatrix&) = default;
};

MMatrix m_matrix(const CubicPresentation& pres);
MMatrix m_matrix(const Tensor& f1, const Tensor& f2);

struct StandardWitness {
  /// g^t = Q f' in the basis f' = P f.
  Mat2 Q;
  Mat2 P;
  std::string basis;  // "given", "rref" or "search"
};

/// Looks for a basis f' = P f of R with g'^t = Q f' for invertible Q, where
/// g'_j = x m'_1j + y m'_2j. Tries the given basis, the canonical basis, then
/// all bases.
std::optional<StandardWitness> is_standard(const CubicPresentation& pres);

/// True when the four entries of M have no common zero on P^1 x P^1.
bool common_zero_empty(const MMatrix& m);

struct AsRegCertificate {
  std::optional<StandardWitness> standard;
  MMatrix m;
  bool common_zero_empty = false;
  bool as_regular = false;
};

AsRegCertificate check_as_regular(const CubicPresentation& pres);

/// x^2y^2 - 2xyxy + xy^2x + yx^2y - 2yxyx + y^2x^2 + 2(2b-1)(yxy^2 - y^2xy) + 2b(b-1)y^4.
Tensor w_t1(const Scalar& beta);
/// The superpotential of the T2 normal form tau1 = [[1,1/2],[0,-1]].
Tensor w_double_prime();
/// w_t1(1/2), the twist of w_double_prime by diag(i, -i).
Tensor w_prime();

}  // namespace asreg
