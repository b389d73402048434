#pragma once

// Independent reference computations and random generators for the tests.
// Everything here works on explicit words and naive loops and shares no code
// with the library beyond the Scalar type.

#include "asreg/classify.hpp"
#include "asreg/superpot.hpp"

#include <map>
#include <random>
#include <string>

namespace oracle {

using asreg::Mat2;
using asreg::ProjPoint;
using asreg::Scalar;

/// A tensor as a map word -> coefficient, zero entries dropped.
using WordMap = std::map<std::string, Scalar>;

inline WordMap to_words(const asreg::Tensor& t) {
  WordMap out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    std::string w;
    for (int pos = 0; pos < t.degree(); ++pos) w += ((k >> (t.degree() - 1 - pos)) & 1U) ? 'y' : 'x';
    if (!t[k].is_zero()) out[w] = t[k];
  }
  return out;
}

inline void add_to(WordMap& m, const std::string& w, const Scalar& c) {
  Scalar& slot = m[w];
  slot += c;
  if (slot.is_zero()) m.erase(w);
}

/// Expands each slot by the substitution letter a -> sum_b m(a, b) letter b.
inline WordMap substitute(const std::vector<Mat2>& maps, const WordMap& t) {
  WordMap cur = t;
  for (std::size_t slot = 0; slot < maps.size(); ++slot) {
    WordMap next;
    for (const auto& [w, c] : cur) {
      const int a = w[slot] == 'x' ? 0 : 1;
      for (int b = 0; b < 2; ++b) {
        std::string nw = w;
        nw[slot] = b == 0 ? 'x' : 'y';
        add_to(next, nw, c * maps[slot](a, b));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

inline Scalar evaluate(const WordMap& t, const std::vector<ProjPoint>& pts) {
  Scalar total;
  for (const auto& [w, c] : t) {
    Scalar term = c;
    for (std::size_t k = 0; k < w.size(); ++k) term *= w[k] == 'x' ? pts[k].a() : pts[k].b();
    total += term;
  }
  return total;
}

/// v1 v2 v3 v4 -> v4 v1 v2 v3 on every word.
inline WordMap rotate(const WordMap& t) {
  WordMap out;
  for (const auto& [w, c] : t) out[w.substr(w.size() - 1) + w.substr(0, w.size() - 1)] = c;
  return out;
}

/// (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2), computed on the rational parts.
inline Scalar divide_by_conjugate(const Scalar& u, const Scalar& v) {
  const mpq_class n = v.re() * v.re() + v.im() * v.im();
  const mpq_class re = (u.re() * v.re() + u.im() * v.im()) / n;
  const mpq_class im = (u.im() * v.re() - u.re() * v.im()) / n;
  return Scalar(re, im);
}

/// Reference 2x2 product.
inline Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 out(0, 0, 0, 0);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k) out(r, c) += a(r, k) * b(k, c);
  return out;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Scalar rational(long span = 9, long max_den = 7) {
    return Scalar::rational(integer(-span, span), integer(1, max_den));
  }
  Scalar nonzero_rational(long span = 9, long max_den = 7) {
    Scalar s;
    while (s.is_zero()) s = rational(span, max_den);
    return s;
  }
  Scalar gaussian(long span = 9, long max_den = 7) {
    return Scalar(rational(span, max_den).re(), rational(span, max_den).re());
  }
  Scalar nonzero_gaussian() {
    Scalar s;
    while (s.is_zero()) s = gaussian();
    return s;
  }
  ProjPoint point() {
    if (integer(0, 9) == 0) return ProjPoint::infinity();
    return ProjPoint(gaussian(), nonzero_gaussian());
  }
  Mat2 matrix() { return Mat2(gaussian(), gaussian(), gaussian(), gaussian()); }
  Mat2 invertible() {
    Mat2 m = matrix();
    while (!m.invertible()) m = matrix();
    return m;
  }
  Mat2 rational_invertible() {
    Mat2 m(rational(), rational(), rational(), rational());
    while (!m.invertible()) m = Mat2(rational(), rational(), rational(), rational());
    return m;
  }
  asreg::Tensor tensor(int degree) {
    asreg::Tensor t(degree);
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = gaussian();
    return t;
  }
  asreg::Params params(asreg::Kind k) { return asreg::random_params(k, rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
