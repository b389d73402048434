#pragma once

// Tensors in V^{⊗d} for V = span{x, y}, stored densely.
//
// Word index: x = 0, y = 1, first letter most significant, so numeric index
// order is lexicographic word order.

#include "asreg/linalg.hpp"
#include "asreg/projgeom.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace asreg {

enum class Letter { X = 0, Y = 1 };

class Tensor {
 public:
  static constexpr int kMaxDegree = 4;

  Tensor() = default;
  explicit Tensor(int degree);
  /// Monomial `coeff * word`, e.g. monomial("xxy", 2).
  static Tensor monomial(std::string_view word, Scalar coeff = 1);
  static Tensor letter(Letter l) { return monomial(l == Letter::X ? "x" : "y"); }

  int degree() const { return degree_; }
  std::size_t size() const { return c_.size(); }
  const Scalar& operator[](std::size_t idx) const { return c_[idx]; }
  Scalar& operator[](std::size_t idx) { return c_[idx]; }
  const Scalar& coeff(std::string_view word) const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const;

  static std::string word_of(std::size_t idx, int degree);
  static std::size_t index_of(std::string_view word);

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& s, Tensor t);
  Tensor operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  int degree_ = 0;
  std::vector<Scalar> c_{Scalar()};
};

/// a ⊗ b.
Tensor tensor_product(const Tensor& a, const Tensor& b);

/// phi(v1 v2 v3 v4) = v4 v1 v2 v3.
Tensor cyclic_phi(const Tensor& w);
/// w_g in w = x ⊗ w_x + y ⊗ w_y.
Tensor partial(const Tensor& w, Letter g);

/// Slot k substitutes x -> m(0,0) x + m(0,1) y and y -> m(1,0) x + m(1,1) y.
/// With this choice evaluate(apply_slotwise(A, f), p) = evaluate(f, A p).
Tensor apply_slotwise(const std::vector<Mat2>& maps, const Tensor& t);

/// Sum over words of c_w * p_1(w_1) ... p_d(w_d), with (a:b)(x) = a, (a:b)(y) = b.
Scalar evaluate(const Tensor& f, const std::vector<ProjPoint>& points);

using PointTriple = std::array<ProjPoint, 3>;
Scalar evaluate(const Tensor& f, const PointTriple& p);

class KernelDimensionError : public Error {
 public:
  KernelDimensionError(std::size_t rank, std::size_t kernel_dim);
  std::size_t rank() const { return rank_; }
  std::size_t kernel_dim() const { return kernel_dim_; }

 private:
  std::size_t rank_;
  std::size_t kernel_dim_;
};

/// A 2-dimensional subspace of V^{⊗3}.
class RelationSpace {
 public:
  /// Throws Error when f1, f2 are not independent cubic tensors.
  RelationSpace(Tensor f1, Tensor f2);

  const std::array<Tensor, 2>& basis() const { return basis_; }
  /// Canonical reduced row-echelon form, 2 x 8.
  const Mat& rref_form() const { return rref_; }
  /// The rows of the canonical form as tensors.
  std::array<Tensor, 2> rref_basis() const;
  bool contains(const Tensor& f) const;

 private:
  std::array<Tensor, 2> basis_;
  Mat rref_;
};

bool span_equal(const RelationSpace& a, const RelationSpace& b);

/// The 8-column evaluation matrix of the rows.
Mat evaluation_matrix(const std::vector<PointTriple>& rows);
std::size_t evaluation_rank(const std::vector<PointTriple>& rows);
/// Kernel of the evaluation matrix; throws KernelDimensionError unless it is 2-dimensional.
RelationSpace kernel_of_evaluations(const std::vector<PointTriple>& rows);

/// Text form: `coeff*word` terms joined by + and -, words may use powers (x^2y).
/// Coefficients are rationals or parenthesized Q(i) scalars; unit coefficients are omitted.
Tensor parse_tensor(std::string_view text, int expected_degree = -1);
std::string render_tensor(const Tensor& t);

}  // namespace asreg
