#include "asreg/superpot.hpp"

#include "asreg/binary_form.hpp"

#include <random>

namespace asreg {

bool is_superpotential(const Tensor& w) { return cyclic_phi(w) == w; }

namespace {

Mat2 unit_matrix(int a, int b) {
  Mat2 e(0, 0, 0, 0);
  e(a, b) = 1;
  return e;
}

Vec add_scaled(Vec v, const std::vector<Vec>& dirs, const std::vector<long>& t) {
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    if (t[k] == 0) continue;
    for (std::size_t e = 0; e < v.size(); ++e) v[e] += Scalar(t[k]) * dirs[k][e];
  }
  return v;
}

// Points t at which to try a polynomial of the given degree in dirs.size() variables.
// A grid with more than `degree` values per coordinate cannot lie in the zero set of a
// nonzero polynomial; for many variables we fall back to random points.
std::vector<std::vector<long>> trial_points(std::size_t dim, long degree) {
  if (dim <= 4) return integer_grid(dim, degree + 1);
  std::mt19937_64 rng(dim);
  std::vector<std::vector<long>> out(400, std::vector<long>(dim));
  for (auto& pt : out) {
    for (auto& v : pt) v = static_cast<long>(rng() % 97);
  }
  return out;
}

}  // namespace

std::optional<Mat2> solve_twist_witness(const Tensor& w) {
  if (w.degree() != 4) throw Error("solve_twist_witness: degree must be 4");
  if (w.is_zero()) throw Error("solve_twist_witness: zero tensor");
  if (is_superpotential(w)) return Mat2::identity();
  const Tensor p = cyclic_phi(w);
  const Mat2 id = Mat2::identity();
  Mat a(16, 4);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const Tensor col = apply_slotwise({unit_matrix(r, c), id, id, id}, p);
      for (std::size_t k = 0; k < 16; ++k) a(k, static_cast<std::size_t>(2 * r + c)) = col[k];
    }
  }
  const auto particular = solve(a, w.coeffs());
  if (!particular) return std::nullopt;
  const auto dirs = nullspace(a);
  for (const auto& t : trial_points(dirs.size(), 2)) {
    const Vec v = add_scaled(*particular, dirs, t);
    Mat2 theta(v[0], v[1], v[2], v[3]);
    if (theta.invertible()) return theta;
  }
  return std::nullopt;
}

std::optional<Scalar> in_aut_w(const Tensor& w, const Mat2& theta) {
  if (!theta.invertible()) throw Error("in_aut_w: theta must be invertible");
  const Tensor t = apply_slotwise(std::vector<Mat2>(static_cast<std::size_t>(w.degree()), theta), w);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].is_zero()) continue;
    const Scalar lambda = t[k] / w[k];
    if (lambda * w == t) return lambda;
    return std::nullopt;
  }
  return std::nullopt;
}

Tensor ms_twist(const Tensor& w, const Mat2& theta) {
  const Mat2 t2 = theta * theta;
  return apply_slotwise({t2 * theta, t2, theta, Mat2::identity()}, w);
}

CubicPresentation::CubicPresentation(Tensor a, Tensor b, std::string origin_note)
    : f1(a), f2(b), space(std::move(a), std::move(b)), origin(std::move(origin_note)) {}

CubicPresentation CubicPresentation::from_space(const RelationSpace& r, std::string origin_note) {
  return {r.basis()[0], r.basis()[1], std::move(origin_note)};
}

CubicPresentation derivation_quotient(const Tensor& w) {
  if (w.degree() != 4) throw Error("derivation_quotient: degree must be 4");
  Tensor fx = partial(w, Letter::X);
  Tensor fy = partial(w, Letter::Y);
  try {
    return {std::move(fx), std::move(fy), "derivation quotient"};
  } catch (const Error&) {
    throw Error("derivation_quotient: partial derivatives are linearly dependent");
  }
}

std::array<Tensor, 2> MMatrix::reconstruct() const {
  const Tensor x = Tensor::letter(Letter::X);
  const Tensor y = Tensor::letter(Letter::Y);
  return {tensor_product(m[0][0], x) + tensor_product(m[0][1], y),
          tensor_product(m[1][0], x) + tensor_product(m[1][1], y)};
}

MMatrix m_matrix(const Tensor& f1, const Tensor& f2) {
  MMatrix out{{{{Tensor(2), Tensor(2)}, {Tensor(2), Tensor(2)}}}};
  const Tensor* fs[2] = {&f1, &f2};
  for (std::size_t i = 0; i < 2; ++i) {
    if (fs[i]->degree() != 3) throw Error("m_matrix: relations must have degree 3");
    for (std::size_t u = 0; u < 4; ++u) {
      for (std::size_t j = 0; j < 2; ++j) out.m[i][j][u] = (*fs[i])[(u << 1) | j];
    }
  }
  return out;
}

MMatrix m_matrix(const CubicPresentation& pres) { return m_matrix(pres.f1, pres.f2); }

namespace {

const Tensor& letter_tensor(std::size_t i) {
  static const Tensor x = Tensor::letter(Letter::X);
  static const Tensor y = Tensor::letter(Letter::Y);
  return i == 0 ? x : y;
}

// g_j = x m_1j + y m_2j.
std::array<Tensor, 2> column_relations(const MMatrix& m) {
  return {tensor_product(letter_tensor(0), m(0, 0)) + tensor_product(letter_tensor(1), m(1, 0)),
          tensor_product(letter_tensor(0), m(0, 1)) + tensor_product(letter_tensor(1), m(1, 1))};
}

// Q with g_j = sum_k Q_jk f_k, invertible, if it exists.
std::optional<Mat2> standard_q(const Tensor& f1, const Tensor& f2) {
  const auto g = column_relations(m_matrix(f1, f2));
  const Tensor* fs[2] = {&f1, &f2};
  Mat a(16, 4);
  Vec rhs(16);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t w = 0; w < 8; ++w) {
      for (std::size_t k = 0; k < 2; ++k) a(8 * j + w, 2 * j + k) = (*fs[k])[w];
      rhs[8 * j + w] = g[j][w];
    }
  }
  // f1, f2 are independent, so a solution is unique.
  const auto q = solve(a, rhs);
  if (!q) return std::nullopt;
  Mat2 out((*q)[0], (*q)[1], (*q)[2], (*q)[3]);
  if (!out.invertible()) return std::nullopt;
  return out;
}

// P with rows expressing target_i in the basis (f1, f2).
Mat2 change_of_basis(const Tensor& f1, const Tensor& f2, const std::array<Tensor, 2>& target) {
  Mat a(8, 2);
  for (std::size_t w = 0; w < 8; ++w) {
    a(w, 0) = f1[w];
    a(w, 1) = f2[w];
  }
  const auto r0 = solve(a, target[0].coeffs());
  const auto r1 = solve(a, target[1].coeffs());
  if (!r0 || !r1) throw Error("target basis is not in the span");
  return {(*r0)[0], (*r0)[1], (*r1)[0], (*r1)[1]};
}

std::optional<StandardWitness> search_bases(const CubicPresentation& pres) {
  const MMatrix m = m_matrix(pres);
  const Tensor* fs[2] = {&pres.f1, &pres.f2};
  // Unknowns (P00, P01, P10, P11, C00, C01, C10, C11); equations
  // sum_{i,k} P_ik x_i m_kj - sum_l C_jl f_l = 0 for j = 0, 1.
  Mat a(16, 8);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t k = 0; k < 2; ++k) {
        const Tensor t = tensor_product(letter_tensor(i), m(static_cast<int>(k), static_cast<int>(j)));
        for (std::size_t w = 0; w < 8; ++w) a(8 * j + w, 2 * i + k) += t[w];
      }
      for (std::size_t l = 0; l < 2; ++l) {
        for (std::size_t w = 0; w < 8; ++w) a(8 * j + w, 4 + 2 * j + l) -= (*fs[l])[w];
      }
    }
  }
  const auto dirs = nullspace(a);
  if (dirs.empty()) return std::nullopt;
  for (const auto& t : trial_points(dirs.size(), 4)) {
    const Vec v = add_scaled(Vec(8), dirs, t);
    const Mat2 p(v[0], v[1], v[2], v[3]);
    const Mat2 c(v[4], v[5], v[6], v[7]);
    if (p.invertible() && c.invertible()) return StandardWitness{c * p.inverse(), p, "search"};
  }
  return std::nullopt;
}

std::vector<BinaryForm> minors(const std::array<std::array<BinaryForm, 2>, 4>& rows) {
  std::vector<BinaryForm> out;
  for (std::size_t e = 0; e < 4; ++e) {
    for (std::size_t f = e + 1; f < 4; ++f) {
      out.push_back(rows[e][0] * rows[f][1] - rows[e][1] * rows[f][0]);
    }
  }
  return out;
}

}  // namespace

std::optional<StandardWitness> is_standard(const CubicPresentation& pres) {
  if (auto q = standard_q(pres.f1, pres.f2)) return StandardWitness{*q, Mat2::identity(), "given"};
  const auto canon = pres.space.rref_basis();
  if (auto q = standard_q(canon[0], canon[1])) {
    return StandardWitness{*q, change_of_basis(pres.f1, pres.f2, canon), "rref"};
  }
  return search_bases(pres);
}

bool common_zero_empty(const MMatrix& m) {
  const Tensor* entries[4] = {&m.m[0][0], &m.m[0][1], &m.m[1][0], &m.m[1][1]};
  // Entry e is sum_{a,b} c_e[ab] p(a) q(b). Fixing p = (s:t) leaves a linear form in q
  // whose q(b)-coefficient is c_e[0b] s + c_e[1b] t; the entries share a zero over p
  // exactly when the 4x2 coefficient matrix drops rank.
  std::array<std::array<BinaryForm, 2>, 4> by_first;
  std::array<std::array<BinaryForm, 2>, 4> by_second;
  for (std::size_t e = 0; e < 4; ++e) {
    const Tensor& c = *entries[e];
    for (std::size_t b = 0; b < 2; ++b) {
      by_first[e][b] = BinaryForm{{c[b], c[2 | b]}};
      by_second[e][b] = BinaryForm{{c[b << 1], c[(b << 1) | 1]}};
    }
  }
  return !have_common_root(minors(by_first)) && !have_common_root(minors(by_second));
}

AsRegCertificate check_as_regular(const CubicPresentation& pres) {
  AsRegCertificate cert;
  cert.m = m_matrix(pres);
  cert.standard = is_standard(pres);
  cert.common_zero_empty = common_zero_empty(cert.m);
  cert.as_regular = cert.standard.has_value() && cert.common_zero_empty;
  return cert;
}

Tensor w_t1(const Scalar& beta) {
  const Scalar c = Scalar(2) * (Scalar(2) * beta - Scalar(1));
  return Tensor::monomial("xxyy") - Tensor::monomial("xyxy", 2) + Tensor::monomial("xyyx") +
         Tensor::monomial("yxxy") - Tensor::monomial("yxyx", 2) + Tensor::monomial("yyxx") +
         Tensor::monomial("yxyy", c) - Tensor::monomial("yyxy", c) +
         Tensor::monomial("yyyy", Scalar(2) * beta * (beta - Scalar(1)));
}

Tensor w_double_prime() {
  return Tensor::monomial("xxyy") + Tensor::monomial("xyxy", 2) + Tensor::monomial("xyyx") +
         Tensor::monomial("yxxy") + Tensor::monomial("yxyx", 2) + Tensor::monomial("yyxx") +
         Tensor::monomial("yyyy", Scalar::rational(1, 2));
}

Tensor w_prime() { return w_t1(Scalar::rational(1, 2)); }

}  // namespace asreg
