#pragma once

// Finite-dimensional Leibniz algebras, Lie algebras and representations.
//
// Internally every algorithm works with the left convention
//   [[x,y],z] = [x,[y,z]] - [y,[x,z]];
// right-convention input is turned into a left algebra with opposite().

#include <cstddef>
#include <string>
#include <vector>

#include "leibhom/exactla.hpp"

namespace leibhom {

enum class Convention { left, right };

std::string to_string(Convention c);

/// Bracket given by structure constants: [e_i, e_j] = sum_k structure(i,j,k) e_k.
struct LeibnizAlgebra {
  std::vector<std::string> basis_names;
  Tensor3 structure;
  Convention convention = Convention::left;

  std::size_t dim() const { return basis_names.size(); }
  Vector bracket(std::span<const Scalar> u, std::span<const Scalar> v) const {
    return structure.apply(u, v);
  }
  Vector bracket_basis(std::size_t i, std::size_t j) const { return structure.at(i, j); }

  bool operator==(const LeibnizAlgebra&) const = default;
};

struct LieAlgebra {
  std::vector<std::string> basis_names;
  Tensor3 structure;

  std::size_t dim() const { return basis_names.size(); }
  bool operator==(const LieAlgebra&) const = default;
};

/// Left module over a Lie algebra: action(i, a, b) = coefficient of f_b in e_i . f_a.
struct LieModule {
  std::vector<std::string> basis_names;
  Tensor3 action;

  std::size_t dim() const { return basis_names.size(); }
  bool operator==(const LieModule&) const = default;
};

/// Representation of a Leibniz algebra: left_action(i, a, b) is the f_b
/// coefficient of [e_i, f_a], right_action(a, i, b) that of [f_a, e_i].
struct Representation {
  std::vector<std::string> basis_names;
  Tensor3 left_action;
  Tensor3 right_action;

  std::size_t dim() const { return basis_names.size(); }
  bool operator==(const Representation&) const = default;
};

struct QuotientData {
  LieAlgebra quotient;
  /// dim g_Lie x dim g.
  Matrix projection;
  /// dim g x dim g_Lie; basis vector of g used as representative of each quotient basis vector.
  Matrix section;
  /// action_on_g(k, j, l): coefficient of e_l in (class k) . e_j.
  Tensor3 action_on_g;
  Subspace kernel;
};

/// One basis triple on which an identity fails. `identity` is 0 for the
/// Leibniz identity and 1..3 for the three representation identities.
struct Violation {
  int identity = 0;
  std::size_t i = 0, j = 0, k = 0;
  bool operator==(const Violation&) const = default;
};

using ViolationReport = std::vector<Violation>;

// -- constructors -----------------------------------------------------------

LeibnizAlgebra make_algebra(std::vector<std::string> names, Convention convention = Convention::left);
LeibnizAlgebra abelian_algebra(std::size_t dim);
LeibnizAlgebra as_leibniz(const LieAlgebra& h);
/// Fails with AxiomError if h is not antisymmetric or violates Jacobi.
LieAlgebra as_lie(const LeibnizAlgebra& g);

Representation trivial_representation(const LeibnizAlgebra& g, std::size_t dim);
Representation adjoint_representation(const LeibnizAlgebra& g);
/// [x, m] := xbar . m, [m, x] := -xbar . m for a module over lie_quotient(g).
Representation lift_lie_module(const QuotientData& q, const LieModule& m);
LieModule trivial_module(const LieAlgebra& h, std::size_t dim);
LieModule adjoint_module(const LieAlgebra& h);

// -- checks -----------------------------------------------------------------

ViolationReport check_leibniz(const LeibnizAlgebra& g);
/// Antisymmetry violations reported with identity = 1, Jacobi with identity = 2.
ViolationReport check_lie(const LieAlgebra& h);
ViolationReport check_representation(const LeibnizAlgebra& g, const Representation& m);
/// Module identity [[x,y],m] = x.(y.m) - y.(x.m) on basis triples.
ViolationReport check_lie_module(const LieAlgebra& h, const LieModule& m);

// -- constructions ----------------------------------------------------------

LeibnizAlgebra opposite(const LeibnizAlgebra& g);
Subspace kernel_ideal(const LeibnizAlgebra& g);
QuotientData lie_quotient(const LeibnizAlgebra& g);

struct Symmetrization {
  Subspace anti;
  std::size_t symm_dim = 0;
  /// dim m_symm x dim m.
  Matrix projection;
};

Symmetrization symmetrization(const Representation& m);
Representation opposite_representation(const Representation& m);

/// The g_Lie-module obtained from the left action of a representation
/// (the left action kills g^ann, so it descends to the quotient).
LieModule left_action_module(const QuotientData& q, const Representation& m);

}  // namespace leibhom
