#pragma once

// Leibniz (Loday) chain and cochain complexes with coefficients.

#include <cstddef>

#include "leibhom/homology/chain_complex.hpp"
#include "leibhom/leibcore.hpp"

namespace leibhom {

struct Coefficients {
  enum class Kind { trivial, lie_module, representation };
  Kind kind = Kind::trivial;
  /// A module over lie_quotient(g); used when kind == lie_module.
  LieModule module;
  /// Used when kind == representation.
  Representation rep;

  static Coefficients trivial() { return {}; }
  static Coefficients lie(LieModule m) { return {Kind::lie_module, std::move(m), {}}; }
  static Coefficients representation(Representation r) { return {Kind::representation, {}, std::move(r)}; }

  std::size_t dim() const;
};

/// How [m, x_j] is realized in the chain differential for representation
/// coefficients.
enum class RepChainRule {
  left_only,       ///< [m, x_j] := -[x_j, m] for every j (canonical)
  right_action,    ///< the representation's right action for every j
  symmetrized_j1,  ///< right action, with the j = 1 term [m,x1] + [x1,m]
};

/// Action term [x_1, f(...)] at j = 1 of the cochain differential for
/// representation coefficients.
enum class RepCochainRule {
  corrected,    ///< [x1, f] - ([x1, f] + [f, x1]) = -[f, x1] (canonical)
  added,        ///< [x1, f] + [f, x1]
  uncorrected,  ///< [x1, f]
};

struct LodayOptions {
  RepChainRule chain_rule = RepChainRule::left_only;
  RepCochainRule cochain_rule = RepCochainRule::corrected;
  bool labels = true;
};

/// C_n = m (x) g^{(x)n}, n = 0 .. n_max + 1, basis index a * dim(g)^n + word.
ChainComplex loday_chain(const LeibnizAlgebra& g, const Coefficients& m, std::size_t n_max,
                         const LodayOptions& opts = {});
/// C^n = Hom(g^{(x)n}, m), basis functional (b, word) -> index b * dim(g)^n + word.
ChainComplex loday_cochain(const LeibnizAlgebra& g, const Coefficients& m, std::size_t n_max,
                           const LodayOptions& opts = {});

}  // namespace leibhom
