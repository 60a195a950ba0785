#pragma once

// Exact linear algebra over the rationals.
//
// Everything downstream (ranks, kernels, homology dimensions) is computed
// here without rounding. Matrices are dense and row-major; the sizes met in
// practice are at most a few hundred rows/columns and mostly zero, so the
// elimination loops skip zero entries aggressively.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leibhom/errors.hpp"

namespace leibhom {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after construction through parse_scalar or arithmetic.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Accepts "p" or "p/q" with an optional sign; throws ParseError otherwise.
Scalar parse_scalar(std::string_view text);
/// "p" when the denominator is 1, else "p/q".
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }
bool is_zero(std::span<const Scalar> v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;
  const std::vector<Scalar>& entries() const { return entries_; }

  bool is_zero() const;
  Matrix transpose() const;
  Vector apply(std::span<const Scalar> v) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix& operator*=(const Scalar& s);

  bool operator==(const Matrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Bilinear map k^a x k^b -> k^c by its coefficients: t(i, j, k) is the
/// k-th coordinate of the image of (e_i, e_j).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t a, std::size_t b, std::size_t c) : a_(a), b_(b), c_(c), entries_(a * b * c) {}

  std::size_t dim0() const { return a_; }
  std::size_t dim1() const { return b_; }
  std::size_t dim2() const { return c_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return entries_[(i * b_ + j) * c_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * b_ + j) * c_ + k];
  }

  /// Image of a pair of basis vectors.
  Vector at(std::size_t i, std::size_t j) const;
  /// Image of an arbitrary pair of vectors.
  Vector apply(std::span<const Scalar> u, std::span<const Scalar> v) const;
  /// Swap the two input slots.
  Tensor3 transposed() const;
  bool is_zero() const;

  bool operator==(const Tensor3&) const = default;

 private:
  std::size_t a_ = 0, b_ = 0, c_ = 0;
  std::vector<Scalar> entries_;
};

/// A linear subspace of k^n stored through its reduced column echelon basis:
/// column k has a 1 in row pivots()[k] and zeros in the other pivot rows.
/// That basis is unique for the span, so two Subspaces are equal iff their
/// bases are equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the columns of `generators` (ambient dimension = generators.rows()).
  static Subspace span(const Matrix& generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t k) const { return basis_.column(k); }

  /// Coordinates of v in basis(), or nullopt when v is not in the span.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }
  bool contains(const Subspace& other) const;

  /// Coordinates not used as pivots; the standard basis vectors on them
  /// complete basis() to a basis of the ambient space.
  std::vector<std::size_t> complement_indices() const;
  /// Matrix of the quotient map k^n -> k^n / span, in the basis given by the
  /// classes of the complement standard vectors.
  Matrix quotient_projection() const;

  Subspace operator+(const Subspace& other) const;
  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form over the rationals; returns the pivot columns.
std::vector<std::size_t> reduce_rows(Matrix& m);

std::size_t rank(const Matrix& m);
Subspace kernel_basis(const Matrix& m);
Subspace image(const Matrix& m);

/// dim ker(d_out) - rank(d_in), after checking that d_out * d_in = 0.
std::size_t homology_dimension(const Matrix& d_out, const Matrix& d_in);

/// Matrix of f : span(source) -> span(target) in the two stored bases.
/// Throws NotInvariant when an image leaves the target span.
Matrix restrict_map(const Matrix& f, const Subspace& source, const Subspace& target);

/// Some x with a * x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);

}  // namespace leibhom
