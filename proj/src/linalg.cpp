#include "asreg/linalg.hpp"

#include <cassert>

namespace asreg {

void Mat::append_row(std::span<const Scalar> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error("append_row: column count mismatch");
  a_.insert(a_.end(), values.begin(), values.end());
  ++rows_;
}

Rref rref(Mat m) {
  Rref out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    }
    const Scalar inv = m(lead_row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  Mat form(0, m.cols());
  for (std::size_t r = 0; r < lead_row; ++r) form.append_row(m.row(r));
  out.form = std::move(form);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Mat& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.form(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error("solve: right-hand side size mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Rref red = rref(std::move(aug));
  Vec x(m.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] == m.cols()) return std::nullopt;
    x[red.pivots[i]] = red.form(i, m.cols());
  }
  return x;
}

Mat2 Mat2::inverse() const {
  const Scalar d = det();
  if (d.is_zero()) throw Error("singular 2x2 matrix");
  const Scalar inv = d.inverse();
  return inv * adjugate();
}

Mat2 Mat2::pow(int n) const {
  Mat2 base = n < 0 ? inverse() : *this;
  int e = n < 0 ? -n : n;
  Mat2 acc = identity();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Mat2 operator*(const Scalar& s, const Mat2& a) {
  return {s * a(0, 0), s * a(0, 1), s * a(1, 0), s * a(1, 1)};
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1)};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0), a(1, 1) - b(1, 1)};
}

bool Mat2::proportional_to(const Mat2& other) const {
  // All 2x2 minors of the 4x2 matrix [this | other] vanish, and neither is zero.
  const auto& a = a_;
  const auto& b = other.a_;
  bool a_zero = true;
  bool b_zero = true;
  for (std::size_t k = 0; k < 4; ++k) {
    a_zero = a_zero && a[k].is_zero();
    b_zero = b_zero && b[k].is_zero();
  }
  if (a_zero || b_zero) return false;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = j + 1; k < 4; ++k) {
      if (a[j] * b[k] != a[k] * b[j]) return false;
    }
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m(0, 0) << "," << m(0, 1) << "],[" << m(1, 0) << "," << m(1, 1) << "]]";
}

std::vector<std::vector<long>> integer_grid(std::size_t dim, long span) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(dim, 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = dim;
    while (k > 0) {
      --k;
      if (++cur[k] < span) break;
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (dim == 0) return out;
  }
}

}  // namespace asreg
