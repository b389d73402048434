#pragma once

// Dense exact linear algebra over Q(i): small matrices, RREF, kernels.

#include "asreg/exactfield.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace asreg {

using Vec = std::vector<Scalar>;

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  void append_row(std::span<const Scalar> values);

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

struct Rref {
  Mat form;  // zero rows dropped
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination with the first nonzero entry as pivot. The
/// result is the unique reduced row-echelon form of the row space.
Rref rref(Mat m);
std::size_t rank(const Mat& m);
/// Basis of {v : m v = 0}, one vector per free column, in column order.
std::vector<Vec> nullspace(const Mat& m);
/// Some solution of m v = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// A 2x2 matrix, row-major: {m11, m12, m21, m22}.
class Mat2 {
 public:
  Mat2() = default;
  Mat2(Scalar m11, Scalar m12, Scalar m21, Scalar m22)
      : a_{std::move(m11), std::move(m12), std::move(m21), std::move(m22)} {}

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 diag(Scalar a, Scalar d) { return {std::move(a), 0, 0, std::move(d)}; }

  const Scalar& operator()(int r, int c) const { return a_[static_cast<std::size_t>(2 * r + c)]; }
  Scalar& operator()(int r, int c) { return a_[static_cast<std::size_t>(2 * r + c)]; }
  const std::array<Scalar, 4>& entries() const { return a_; }

  Scalar det() const { return a_[0] * a_[3] - a_[1] * a_[2]; }
  Scalar trace() const { return a_[0] + a_[3]; }
  bool invertible() const { return !det().is_zero(); }
  bool is_scalar() const { return a_[1].is_zero() && a_[2].is_zero() && a_[0] == a_[3]; }
  Mat2 inverse() const;
  Mat2 adjugate() const { return {a_[3], -a_[1], -a_[2], a_[0]}; }
  Mat2 transpose() const { return {a_[0], a_[2], a_[1], a_[3]}; }
  Mat2 pow(int n) const;

  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(const Scalar& s, const Mat2& a);
  friend Mat2 operator+(const Mat2& a, const Mat2& b);
  friend Mat2 operator-(const Mat2& a, const Mat2& b);
  friend bool operator==(const Mat2&, const Mat2&) = default;

  /// True when the two matrices differ by a nonzero scalar factor.
  bool proportional_to(const Mat2& other) const;

 private:
  std::array<Scalar, 4> a_{};
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// Points of a product grid {0..span-1}^dim, in lexicographic order. Used to
/// find a point where a nonzero low-degree polynomial does not vanish.
std::vector<std::vector<long>> integer_grid(std::size_t dim, long span);

}  // namespace asreg
