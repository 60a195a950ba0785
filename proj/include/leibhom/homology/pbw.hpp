#pragma once

// Normal forms in the universal enveloping algebra of a finite,
// non-negatively graded DG Lie algebra.
//
// Letters are the homogeneous basis vectors, ordered by degree and then by
// input order. A monomial is normal when it is weakly increasing and no odd
// letter repeats. Rewriting:
//   b_i b_j -> (-1)^{|b_i||b_j|} b_j b_i + [[b_i, b_j]]   for b_i > b_j
//   b b     -> 1/2 [[b, b]]                              for odd b

#include <cstddef>
#include <map>
#include <vector>

#include "leibhom/dgla.hpp"

namespace leibhom {

using Monomial = std::vector<std::size_t>;
using UElement = std::map<Monomial, Scalar>;

enum class RewriteStrategy { leftmost, rightmost };

class PBWAlgebra {
 public:
  explicit PBWAlgebra(const DGLieAlgebra& L);

  std::size_t letter_count() const { return degree_.size(); }
  int degree(std::size_t letter) const { return degree_[letter]; }
  /// Global letter index of basis vector i in degree p.
  std::size_t letter(int p, std::size_t i) const;
  std::size_t local_index(std::size_t letter) const { return local_[letter]; }
  const DGLieAlgebra& underlying() const { return L_; }

  bool is_normal(const Monomial& w) const;
  /// Not thread-safe: results are memoized per strategy.
  UElement normal_form(const Monomial& w, RewriteStrategy s = RewriteStrategy::leftmost) const;
  UElement normal_form(const UElement& x, RewriteStrategy s = RewriteStrategy::leftmost) const;

  /// [[a, b]] as a combination of single letters.
  UElement bracket(std::size_t a, std::size_t b) const;
  /// The derivation extending d, applied to a monomial and normalized.
  UElement differential(const Monomial& w) const;

 private:
  UElement rewrite(const Monomial& w, RewriteStrategy s) const;

  DGLieAlgebra L_;
  std::vector<int> degree_;
  std::vector<std::size_t> local_;
  std::map<int, std::size_t> first_;
  mutable std::map<Monomial, UElement> memo_[2];
};

void add_scaled(UElement& acc, const UElement& x, const Scalar& c);

}  // namespace leibhom
