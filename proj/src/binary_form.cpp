#include "asreg/binary_form.hpp"

#include <algorithm>

namespace asreg {

bool BinaryForm::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Scalar& v) { return v.is_zero(); });
}

Scalar BinaryForm::operator()(const Scalar& s, const Scalar& t) const {
  Scalar total;
  const int d = degree();
  for (int k = 0; k <= d; ++k) {
    Scalar term = c[static_cast<std::size_t>(k)];
    for (int e = 0; e < d - k; ++e) term *= s;
    for (int e = 0; e < k; ++e) term *= t;
    total += term;
  }
  return total;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out{std::vector<Scalar>(a.c.size() + b.c.size() - 1)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  }
  return out;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  if (a.c.size() != b.c.size()) throw Error("binary forms of different degree");
  BinaryForm out = a;
  for (std::size_t k = 0; k < b.c.size(); ++k) out.c[k] -= b.c[k];
  return out;
}

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

namespace {

// Remainder of a by b, b nonzero and trimmed.
Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  const Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const Scalar q = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    trim(a);
  }
  return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Scalar inv = a.back().inverse();
    for (auto& v : a) v *= inv;
  }
  return a;
}

bool have_common_root(const std::vector<BinaryForm>& forms) {
  // (1:0) is a root of F iff its s^d coefficient vanishes.
  bool all_vanish_at_infinity = true;
  for (const auto& f : forms) {
    if (!f.c.empty() && !f.c[0].is_zero()) all_vanish_at_infinity = false;
  }
  if (all_vanish_at_infinity) return true;
  // Remaining roots are (u:1): F(u, 1) = sum_k c[k] u^(d-k).
  Poly g;
  for (const auto& f : forms) {
    Poly p(f.c.rbegin(), f.c.rend());
    g = poly_gcd(std::move(g), std::move(p));
  }
  // Empty gcd means every form is zero.
  return g.size() != 1;
}

}  // namespace asreg
