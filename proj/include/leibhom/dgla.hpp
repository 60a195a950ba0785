#pragma once

// Differential graded Lie algebras stored degree by degree.
//
// Brackets are kept per ordered degree pair (p, q) as a Tensor3
// L_p x L_q -> L_{p+q}; the differential per degree p as a matrix
// L_p -> L_{p-1}. A missing tensor or matrix means the zero map, and a
// missing degree means the zero space.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leibhom/exactla.hpp"
#include "leibhom/leibcore.hpp"

namespace leibhom {

/// (-1)^n for any integer n.
constexpr int koszul_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

struct DGLieAlgebra {
  std::map<int, std::size_t> dims;
  std::map<std::pair<int, int>, Tensor3> brackets;
  std::map<int, Matrix> differential;
  std::map<int, std::vector<std::string>> basis_names;

  std::size_t dim(int p) const;
  /// Bracket of homogeneous vectors u in L_p, v in L_q; a vector of length dim(p+q).
  Vector bracket(int p, std::span<const Scalar> u, int q, std::span<const Scalar> v) const;
  Vector bracket_basis(int p, std::size_t i, int q, std::size_t j) const;
  /// d(u) for u in L_p; a vector of length dim(p-1).
  Vector d(int p, std::span<const Scalar> u) const;
  /// Stores the (p, q) tensor and, when p != q, the (q, p) tensor forced by
  /// graded antisymmetry.
  void set_bracket(int p, int q, Tensor3 t);
};

struct DGModule {
  std::map<int, std::size_t> dims;
  /// (p, q) -> L_p x M_q -> M_{p+q}.
  std::map<std::pair<int, int>, Tensor3> action;
  std::map<int, Matrix> differential;

  std::size_t dim(int q) const;
  Vector act(int p, std::span<const Scalar> x, int q, std::span<const Scalar> m) const;
  Vector d(int q, std::span<const Scalar> m) const;
};

/// Per-degree matrices target_p x source_p; missing degrees are zero maps.
struct DGLAMorphism {
  std::map<int, Matrix> components;
};

enum class Axiom { antisymmetry, jacobi, leibniz_rule, d_squared, module_bracket, module_leibniz_rule,
                   morphism_differential, morphism_bracket, shape };

std::string to_string(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::vector<int> degrees;
  std::vector<std::size_t> indices;
};

using AxiomReport = std::vector<AxiomViolation>;

AxiomReport check_dgla(const DGLieAlgebra& L);
AxiomReport check_dg_module(const DGLieAlgebra& L, const DGModule& M);
AxiomReport check_morphism(const DGLieAlgebra& source, const DGLieAlgebra& target, const DGLAMorphism& f);

/// Two copies of h in degrees 0 and 1 with d = identity.
DGLieAlgebra cone(const LieAlgebra& h);

struct CategoryReport {
  bool d1_surjective = false;
  bool kernel_is_d_of_brackets = false;
  bool member() const { return d1_surjective && kernel_is_d_of_brackets; }
};

struct LeibResult {
  LeibnizAlgebra algebra;
  CategoryReport category;
};

/// Degree-one part with the derived bracket [x, y] := [[dx, y]].
LeibResult leib(const DGLieAlgebra& L);

/// The 3-term DG Lie algebra g^ann -> g -> g_Lie in degrees 2, 1, 0.
DGLieAlgebra minimal_envelope(const LeibnizAlgebra& g);

/// L -> minimal_envelope(leib(L)); throws NotInCategory when leib(L) reports
/// a non-member or L has negative degrees.
DGLAMorphism minimal_counit(const DGLieAlgebra& L);

/// The DG module m^anti -> m -> m_symm (degrees 1, 0, -1) over minimal_envelope(g).
DGModule minimal_module(const LeibnizAlgebra& g, const Representation& m);

/// L acting on itself by its bracket.
DGModule adjoint_dg_module(const DGLieAlgebra& L);

/// Homology dimension of the underlying complex in every stored degree.
std::map<int, std::size_t> homology(const DGLieAlgebra& L);

}  // namespace leibhom
