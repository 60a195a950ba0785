#pragma once

// Weight-truncated free Leibniz algebras and the tensor algebra T(V).
//
// A TensorWord is a monomial v_{i1} ... v_{in} of T(V); every letter has
// degree 1, so the degree of a monomial is its length. Tensor elements are
// sparse maps from words to coefficients.

#include <cstddef>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "leibhom/exactla.hpp"
#include "leibhom/leibcore.hpp"

namespace leibhom {

struct TensorWord {
  std::vector<std::size_t> letters;

  std::size_t weight() const { return letters.size(); }
  auto operator<=>(const TensorWord&) const = default;
};

using TensorElement = std::map<TensorWord, Scalar>;

TensorElement letter(std::size_t i);
void add_scaled(TensorElement& acc, const TensorElement& x, const Scalar& c);
/// Product in T(V): concatenation of monomials.
TensorElement multiply(const TensorElement& u, const TensorElement& w);
/// [[u, w]] = u w - (-1)^{pq} w u for homogeneous u, w of degrees p, q.
/// Throws ShapeMismatch on inhomogeneous input.
TensorElement graded_commutator(const TensorElement& u, const TensorElement& w);
/// [[...[[v_{i1}, v_{i2}]], ...]], v_{in}]].
TensorElement left_normed_commutator(const std::vector<std::size_t>& letters);

/// All words of length w over d letters in lexicographic order.
std::vector<TensorWord> all_words(std::size_t d, std::size_t w);
/// Position of a word in all_words(d, word.weight()).
std::size_t word_rank(const TensorWord& word, std::size_t d);

/// The free right Leibniz algebra on d generators, words of weight <= W_max,
/// where the word a1 a2 ... an stands for [[...[a1, a2], ...], an]. The
/// full bracket table is built on construction and is read-only afterwards.
class FreeLeibnizTruncation {
 public:
  FreeLeibnizTruncation(std::size_t generators, std::size_t max_weight);

  std::size_t generators() const { return d_; }
  std::size_t max_weight() const { return max_weight_; }
  /// dims()[w-1] = d^w.
  std::vector<std::size_t> dims() const;
  const std::vector<TensorWord>& words(std::size_t weight) const { return words_.at(weight); }

  /// Right-convention bracket; WeightOverflow beyond max_weight.
  const TensorElement& bracket_right(const TensorWord& u, const TensorWord& w) const;
  /// Left-convention bracket of the opposite algebra: [u, w] = [w, u]_right.
  const TensorElement& bracket(const TensorWord& u, const TensorWord& w) const { return bracket_right(w, u); }
  TensorElement bracket(const TensorElement& u, const TensorElement& w) const;

  std::string word_name(const TensorWord& w) const;

  /// Left-convention finite Leibniz algebra obtained by setting every
  /// bracket of total weight > max_weight to zero. Basis ordered by weight,
  /// then lexicographically.
  LeibnizAlgebra nilpotent_quotient() const;

 private:
  const TensorElement& compute(const TensorWord& u, const TensorWord& w);

  std::size_t d_;
  std::size_t max_weight_;
  std::map<std::size_t, std::vector<TensorWord>> words_;
  std::map<std::pair<TensorWord, TensorWord>, TensorElement> table_;
};

/// Right-convention bracket computed in a fresh truncation of weight W_max.
TensorElement free_leibniz_bracket(const TensorWord& u, const TensorWord& w, std::size_t d, std::size_t max_weight);
FreeLeibnizTruncation free_leibniz(std::size_t d, std::size_t max_weight);

struct GradedLieComponent {
  std::size_t n = 0;
  /// Inside V^{(x)n}, coordinates indexed by word_rank.
  Subspace subspace;
};

GradedLieComponent free_graded_lie_component(std::size_t d, std::size_t n);

/// (1/w) sum_{e | w} mu(e) d^{w/e}.
std::size_t witt_dim(std::size_t d, std::size_t w);

}  // namespace leibhom
