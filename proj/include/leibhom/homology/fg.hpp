#pragma once

// The subcomplex F(g) of the Loday complex T(g) spanned by graded
// commutators of elements of g, and the vanishing check for free g.

#include <cstddef>
#include <string>
#include <vector>

#include "leibhom/freealg.hpp"
#include "leibhom/homology/chain_complex.hpp"

namespace leibhom {

/// F_n(g) for n = 1 .. n_max + 1 with the restricted Loday differential.
/// Coordinates inside F_n are those of its echelon basis in g^{(x)n}.
ChainComplex fg_subcomplex(const LeibnizAlgebra& g, std::size_t n_max);

/// Weight-w block of F(g) for the free left Leibniz algebra (the opposite
/// of F). Requires n_max <= weight <= F.max_weight(); degrees 1 .. n_max,
/// plus n_max + 1 when it exists inside the block.
ChainComplex fg_subcomplex(const FreeLeibnizTruncation& F, std::size_t n_max, std::size_t weight);

struct WeightRow {
  std::size_t weight = 0;
  /// H_n for n = 1 .. weight.
  std::vector<std::size_t> homology;
  std::size_t witt = 0;
  std::size_t largest_block = 0;
  bool vanishing = false;     ///< H_n = 0 for every n >= 2
  bool h1_matches = false;    ///< H_1 = witt_dim
};

struct ConjectureReport {
  std::size_t generators = 0;
  std::size_t max_weight = 0;
  std::vector<WeightRow> rows;
  /// "PASS", "FALSIFICATION" (some H_n != 0, n >= 2) or "H1_MISMATCH".
  std::string verdict;
};

/// Largest admissible block (columns of g^{(x)n} at fixed weight).
inline constexpr std::size_t kConjectureBlockBudget = 4096;

/// Weights are evaluated on up to `threads` worker threads; the report
/// does not depend on the thread count.
ConjectureReport conjecture_check(std::size_t d, std::size_t max_weight, unsigned threads = 1);

/// Number of sequences of n words over d letters with total weight w.
std::size_t block_size(std::size_t d, std::size_t n, std::size_t w);

}  // namespace leibhom
