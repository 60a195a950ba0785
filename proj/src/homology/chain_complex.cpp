#include "leibhom/homology/chain_complex.hpp"

namespace leibhom {

std::size_t ChainComplex::dim(int n) const {
  if (n < offset || n > top_degree()) return 0;
  return dims[static_cast<std::size_t>(n - offset)];
}

Matrix ChainComplex::outgoing(int n) const {
  const int k = n - offset;
  if (direction == Direction::chain) {
    if (k >= 1 && k <= static_cast<int>(diffs.size())) return diffs[k - 1];
    return Matrix(dim(n - 1), dim(n));
  }
  if (k >= 0 && k < static_cast<int>(diffs.size())) return diffs[k];
  return Matrix(dim(n + 1), dim(n));
}

Matrix ChainComplex::incoming(int n) const {
  const int k = n - offset;
  if (direction == Direction::chain) {
    if (k >= 0 && k < static_cast<int>(diffs.size())) return diffs[k];
    return Matrix(dim(n), dim(n + 1));
  }
  if (k >= 1 && k <= static_cast<int>(diffs.size())) return diffs[k - 1];
  return Matrix(dim(n), dim(n - 1));
}

void verify(const ChainComplex& c) {
  if (c.diffs.size() + 1 != c.dims.size() && !(c.dims.empty() && c.diffs.empty()))
    throw ShapeMismatch("chain complex: need one differential between each pair of degrees");
  for (std::size_t k = 0; k < c.diffs.size(); ++k) {
    const Matrix& d = c.diffs[k];
    const bool ok = c.direction == Direction::chain ? (d.rows() == c.dims[k] && d.cols() == c.dims[k + 1])
                                                    : (d.rows() == c.dims[k + 1] && d.cols() == c.dims[k]);
    if (!ok) throw ShapeMismatch("chain complex: differential " + std::to_string(c.offset + static_cast<int>(k)) +
                                 " has the wrong shape");
  }
  for (std::size_t k = 0; k + 1 < c.diffs.size(); ++k) {
    const Matrix composite =
        c.direction == Direction::chain ? c.diffs[k] * c.diffs[k + 1] : c.diffs[k + 1] * c.diffs[k];
    if (!composite.is_zero()) {
      const int degree = c.offset + static_cast<int>(c.direction == Direction::chain ? k + 2 : k);
      throw DifferentialSquareNonzero("d o d != 0 starting in degree " + std::to_string(degree));
    }
  }
}

std::vector<std::size_t> betti(const ChainComplex& c) {
  std::vector<std::size_t> out;
  for (int n = c.offset; n <= c.top_exact; ++n) out.push_back(homology_dimension(c.outgoing(n), c.incoming(n)));
  return out;
}

namespace {

// Cycle representatives completing a basis of the boundaries to one of the cycles.
std::vector<Vector> homology_reps(const Subspace& cycles, const Subspace& boundaries) {
  std::vector<Vector> reps;
  Subspace acc = boundaries;
  for (std::size_t k = 0; k < cycles.dim(); ++k) {
    Vector z = cycles.basis_vector(k);
    if (acc.contains(z)) continue;
    acc = acc + Subspace::span(cycles.ambient_dim(), {z});
    reps.push_back(std::move(z));
  }
  return reps;
}

}  // namespace

Matrix induced_map(const ChainComplex& source, const ChainComplex& target, const Matrix& f, int n) {
  const auto src_reps = homology_reps(kernel_basis(source.outgoing(n)), image(source.incoming(n)));
  const auto tgt_reps = homology_reps(kernel_basis(target.outgoing(n)), image(target.incoming(n)));
  const Subspace tgt_b = image(target.incoming(n));
  // Solve f(z) = sum c_t rep_t + b with unknowns (c, coordinates of b).
  std::vector<Vector> cols = tgt_reps;
  for (std::size_t k = 0; k < tgt_b.dim(); ++k) cols.push_back(tgt_b.basis_vector(k));
  const Matrix system = Matrix::from_columns(target.dim(n), cols);
  Matrix out(tgt_reps.size(), src_reps.size());
  for (std::size_t s = 0; s < src_reps.size(); ++s) {
    const Vector img = f.apply(src_reps[s]);
    const auto sol = solve(system, img);
    if (!sol) throw NotAChainMap("induced_map: image of a cycle is not a cycle");
    for (std::size_t t = 0; t < tgt_reps.size(); ++t) out(t, s) = (*sol)[t];
  }
  return out;
}

}  // namespace leibhom
