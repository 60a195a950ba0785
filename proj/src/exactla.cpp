#include "leibhom/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <utility>

namespace leibhom {

Scalar parse_scalar(std::string_view text) {
  static const std::regex kRational(R"(^\s*[+-]?[0-9]+(/[0-9]+)?\s*$)");
  std::string s(text);
  if (!std::regex_match(s, kRational)) {
    throw ParseError("not a rational literal: '" + s + "'");
  }
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0) {
    throw ParseError("zero denominator in '" + s + "'");
  }
  Scalar value(s, 10);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return is_zero(x); });
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ShapeMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const { return leibhom::is_zero(std::span<const Scalar>(entries_)); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw ShapeMismatch("vector length does not match matrix columns");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (leibhom::is_zero(v[c])) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!leibhom::is_zero(a)) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw ShapeMismatch("product of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                        " and " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (leibhom::is_zero(a)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (!leibhom::is_zero(b)) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("sum of differently shaped matrices");
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// Tensor3

Vector Tensor3::at(std::size_t i, std::size_t j) const {
  Vector out(c_);
  for (std::size_t k = 0; k < c_; ++k) out[k] = (*this)(i, j, k);
  return out;
}

Vector Tensor3::apply(std::span<const Scalar> u, std::span<const Scalar> v) const {
  if (u.size() != a_ || v.size() != b_) throw ShapeMismatch("Tensor3::apply: argument lengths");
  Vector out(c_);
  for (std::size_t i = 0; i < a_; ++i) {
    if (leibhom::is_zero(u[i])) continue;
    for (std::size_t j = 0; j < b_; ++j) {
      if (leibhom::is_zero(v[j])) continue;
      const Scalar w = u[i] * v[j];
      for (std::size_t k = 0; k < c_; ++k) {
        const Scalar& t = (*this)(i, j, k);
        if (!leibhom::is_zero(t)) out[k] += w * t;
      }
    }
  }
  return out;
}

Tensor3 Tensor3::transposed() const {
  Tensor3 out(b_, a_, c_);
  for (std::size_t i = 0; i < a_; ++i)
    for (std::size_t j = 0; j < b_; ++j)
      for (std::size_t k = 0; k < c_; ++k) out(j, i, k) = (*this)(i, j, k);
  return out;
}

bool Tensor3::is_zero() const { return leibhom::is_zero(std::span<const Scalar>(entries_)); }

// ---------------------------------------------------------------------------
// Elimination

std::vector<std::size_t> reduce_rows(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
    std::size_t p = next;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != next)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(next, j));
    const Scalar inv = 1 / m(next, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(next, j))) m(next, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next || is_zero(m(r, c))) continue;
      const Scalar factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(next, j))) m(r, j) -= factor * m(next, j);
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

namespace {

// Row r scaled to a primitive integer vector (denominators cleared, content removed).
std::vector<mpz_class> integer_row(std::span<const Scalar> row) {
  mpz_class lcm = 1;
  for (const auto& x : row)
    if (!is_zero(x)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!is_zero(row[j])) out[j] = row[j].get_num() * (lcm / row[j].get_den());
  return out;
}

void remove_content(std::vector<mpz_class>& row, std::size_t from) {
  mpz_class g = 0;
  for (std::size_t j = from; j < row.size(); ++j)
    if (row[j] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
  if (g > 1)
    for (std::size_t j = from; j < row.size(); ++j)
      if (row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t rank(const Matrix& m) {
  // Fraction-free elimination on integer rows: no rational arithmetic at all.
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (is_zero(m.row(r))) continue;
    rows.push_back(integer_row(m.row(r)));
  }
  std::size_t rk = 0;
  std::size_t live = rows.size();
  for (std::size_t c = 0; c < m.cols() && rk < live; ++c) {
    // Smallest nonzero pivot keeps coefficient growth down.
    std::size_t best = live;
    for (std::size_t r = rk; r < live; ++r) {
      if (rows[r][c] == 0) continue;
      if (best == live || mpz_cmpabs(rows[r][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0) best = r;
    }
    if (best == live) continue;
    std::swap(rows[rk], rows[best]);
    const auto& pivot = rows[rk];
    for (std::size_t r = rk + 1; r < live; ++r) {
      auto& row = rows[r];
      if (row[c] == 0) continue;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), pivot[c].get_mpz_t(), row[c].get_mpz_t());
      const mpz_class a = pivot[c] / g;
      const mpz_class b = row[c] / g;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (pivot[j] == 0) {
          if (row[j] != 0) row[j] *= a;
        } else {
          row[j] = a * row[j] - b * pivot[j];
        }
      }
      remove_content(row, c);
    }
    ++rk;
  }
  return rk;
}

Subspace kernel_basis(const Matrix& m) {
  Matrix r = m;
  const auto pivots = reduce_rows(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace image(const Matrix& m) { return Subspace::span(m); }

std::size_t homology_dimension(const Matrix& d_out, const Matrix& d_in) {
  if (d_out.cols() != d_in.rows()) {
    throw ShapeMismatch("homology_dimension: d_out has " + std::to_string(d_out.cols()) +
                        " columns but d_in has " + std::to_string(d_in.rows()) + " rows");
  }
  if (!(d_out * d_in).is_zero()) throw CompositionNotZero("homology_dimension: d_out * d_in != 0");
  const std::size_t kernel = d_out.cols() - rank(d_out);
  return kernel - rank(d_in);
}

Matrix restrict_map(const Matrix& f, const Subspace& source, const Subspace& target) {
  if (f.cols() != source.ambient_dim() || f.rows() != target.ambient_dim()) {
    throw ShapeMismatch("restrict_map: map shape does not match subspace ambients");
  }
  Matrix out(target.dim(), source.dim());
  for (std::size_t k = 0; k < source.dim(); ++k) {
    const Vector img = f.apply(source.basis_vector(k));
    auto coords = target.coordinates(img);
    if (!coords) {
      throw NotInvariant("restrict_map: image of source basis vector " + std::to_string(k) +
                         " is outside the target subspace");
    }
    for (std::size_t t = 0; t < target.dim(); ++t) out(t, k) = (*coords)[t];
  }
  return out;
}

std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw ShapeMismatch("solve: right-hand side length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = reduce_rows(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = Matrix(ambient_dim, 0);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

Subspace Subspace::span(const Matrix& generators) {
  Matrix rows = generators.transpose();
  const auto pivots = reduce_rows(rows);
  Subspace s;
  s.ambient_dim_ = generators.rows();
  s.pivots_ = pivots;
  s.basis_ = Matrix(s.ambient_dim_, pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < s.ambient_dim_; ++i) s.basis_(i, k) = rows(k, i);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  return span(Matrix::from_columns(ambient_dim, generators));
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim_) throw ShapeMismatch("Subspace::coordinates: vector length");
  Vector coords(dim());
  Vector residual(v.begin(), v.end());
  for (std::size_t k = 0; k < dim(); ++k) {
    coords[k] = v[pivots_[k]];
    if (is_zero(coords[k])) continue;
    for (std::size_t i = 0; i < ambient_dim_; ++i)
      if (!is_zero(basis_(i, k))) residual[i] -= coords[k] * basis_(i, k);
  }
  if (!is_zero(std::span<const Scalar>(residual))) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.basis_vector(k))) return false;
  return true;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    if (p < pivots_.size() && pivots_[p] == i) {
      ++p;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

Matrix Subspace::quotient_projection() const {
  const auto comp = complement_indices();
  Matrix proj(comp.size(), ambient_dim_);
  for (std::size_t t = 0; t < comp.size(); ++t) {
    proj(t, comp[t]) = 1;
    for (std::size_t k = 0; k < dim(); ++k) proj(t, pivots_[k]) = -basis_(comp[t], k);
  }
  return proj;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw ShapeMismatch("sum of subspaces of different spaces");
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < dim(); ++k) gens.push_back(basis_vector(k));
  for (std::size_t k = 0; k < other.dim(); ++k) gens.push_back(other.basis_vector(k));
  return span(ambient_dim_, gens);
}

}  // namespace leibhom
