#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibhom/exactla.hpp"

namespace leibhom {

enum class Direction { chain, cochain };

/// Finite stretch of a chain or cochain complex in degrees
/// offset .. offset + dims.size() - 1.
///
/// diffs[k] connects degrees offset+k and offset+k+1: for chains it is
/// C_{k+1} -> C_k (dims[k] x dims[k+1]), for cochains C^k -> C^{k+1}.
/// Builders construct one degree beyond what they promise, and top_exact
/// is the highest degree whose homology is fully determined.
struct ChainComplex {
  int offset = 0;
  Direction direction = Direction::chain;
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  std::vector<std::vector<std::string>> labels;
  int top_exact = 0;

  int top_degree() const { return offset + static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int n) const;
  /// Map leaving degree n (zero matrix at the ends).
  Matrix outgoing(int n) const;
  /// Map arriving in degree n (zero matrix at the ends).
  Matrix incoming(int n) const;
};

/// Checks shapes (ShapeMismatch) and every consecutive composite
/// (DifferentialSquareNonzero naming the degree).
void verify(const ChainComplex& c);

/// Homology dimensions in degrees offset .. top_exact.
std::vector<std::size_t> betti(const ChainComplex& c);

/// Matrix of the map induced on homology by f : C -> D in degree n, in
/// bases of H_n(C) and H_n(D) formed by cycle representatives chosen
/// greedily from the cycle bases. Rows index H_n(D).
Matrix induced_map(const ChainComplex& source, const ChainComplex& target, const Matrix& f, int n);

}  // namespace leibhom
