#pragma once

// Binary forms over Q(i) and detection of common projective roots.

#include "asreg/exactfield.hpp"

#include <vector>

namespace asreg {

/// F(s, t) = sum_k c[k] s^(d-k) t^k, homogeneous of degree d = c.size() - 1.
struct BinaryForm {
  std::vector<Scalar> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const;
  Scalar operator()(const Scalar& s, const Scalar& t) const;
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
};

/// Dense univariate polynomial, coefficient k multiplies u^k; trailing zeros trimmed.
using Poly = std::vector<Scalar>;

void trim(Poly& p);
/// Monic greatest common divisor; gcd(0, 0) = 0 (empty).
Poly poly_gcd(Poly a, Poly b);

/// True when all forms vanish at one point (s:t) of P^1 over the algebraic closure.
/// Equal degrees are not required.
bool have_common_root(const std::vector<BinaryForm>& forms);

}  // namespace asreg
