#pragma once

// Independent reference computations used only by tests.

#include <cstddef>
#include <vector>

#include "leibhom/leibcore.hpp"

namespace leibhom::oracle {

/// Number of Lyndon words of length w over d letters, by enumeration.
std::size_t lyndon_count(std::size_t d, std::size_t w);

/// f_1..f_N with 1/(1-dt) = prod_{k odd} (1+t^k)^{f_k} prod_{k even} (1-t^k)^{-f_k}.
std::vector<long> graded_pbw_exponents(long d, std::size_t n_max);

/// Leibniz homology with trivial coefficients, degrees 0..n_max, from a
/// dense differential written out directly from the defining formula and
/// ranked with plain rational Gaussian elimination.
std::vector<std::size_t> loday_trivial_betti(const LeibnizAlgebra& g, std::size_t n_max);

/// Chevalley-Eilenberg homology of a Lie algebra with trivial coefficients
/// from the textbook alternating-sum formula on sorted index subsets.
std::vector<std::size_t> ce_trivial_betti(const LieAlgebra& h, std::size_t n_max);

/// Rank by elementary Gaussian elimination on a dense rational matrix.
std::size_t dense_rank(std::vector<std::vector<mpq_class>> rows);

}  // namespace leibhom::oracle
