#pragma once

// Chevalley-Eilenberg complexes of a Leibniz algebra built from
// U(M(g)), the classical complex of a Lie algebra, and the comparison map
// from the Loday complex.

#include <cstddef>
#include <vector>

#include "leibhom/homology/chain_complex.hpp"
#include "leibhom/homology/loday.hpp"
#include "leibhom/homology/pbw.hpp"

namespace leibhom {

/// Basis of the CE chain spaces: normal monomials of U(M(g)) without
/// degree-0 letters, i.e. a strictly increasing set S of g letters followed
/// by a weakly increasing multiset T of g^ann letters, |S| + 2|T| = n.
/// Ordered by |T|, then S, then T.
struct CEBasis {
  std::vector<std::vector<Monomial>> monomials;
  std::vector<std::map<Monomial, std::size_t>> index;
};

CEBasis ce_basis(const PBWAlgebra& U, std::size_t n_max);

/// Coefficients must be trivial or a lie_quotient(g)-module.
ChainComplex ce_chain(const LeibnizAlgebra& g, const Coefficients& m, std::size_t n_max);
ChainComplex ce_cochain(const LeibnizAlgebra& g, const Coefficients& m, std::size_t n_max);

/// Lambda^n h with the alternating-sum differential; coefficients trivial or
/// an h-module given as Coefficients::lie.
ChainComplex classical_ce(const LieAlgebra& h, const Coefficients& m, std::size_t n_max, Direction variant);

struct ComparisonReport {
  std::vector<std::size_t> loday_homology, ce_homology;
  std::vector<std::size_t> loday_cohomology, ce_cohomology;
  /// H_n(Loday) -> H_n(CE) and H^n(CE) -> H^n(Loday), n = 0 .. n_max.
  std::vector<Matrix> homology_maps, cohomology_maps;
  std::vector<std::size_t> homology_ranks, cohomology_ranks;
  bool iso_degree0 = false;
  bool iso_degree1 = false;
  bool surjective_h2 = false;
  bool injective_h2 = false;
};

struct CEProjection {
  /// Loday C_n -> CE C_n, n = 0 .. n_max + 1.
  std::vector<Matrix> chain_map;
  /// CE C^n -> Loday C^n, n = 0 .. n_max + 1.
  std::vector<Matrix> cochain_map;
  ComparisonReport report;
};

/// Throws NotAChainMap if either map fails to commute with the differentials.
CEProjection ce_projection(const LeibnizAlgebra& g, const Coefficients& m, std::size_t n_max);

}  // namespace leibhom
