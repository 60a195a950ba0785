#pragma once

// Hand-built and randomized algebras shared by the test binaries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "leibhom/leibcore.hpp"

namespace leibhom::testing {

LeibnizAlgebra a2();            // [x,x] = y
LeibnizAlgebra cyclic3();       // [e1,e1] = e2, [e1,e2] = e3
LieAlgebra r2();                // [a,b] = b
LieAlgebra heisenberg();        // [x,y] = z
LieAlgebra sl2();               // [h,e] = 2e, [h,f] = -2f, [e,f] = h
LieAlgebra abelian_lie(std::size_t dim);

/// h (+) V with [(a,u),(b,w)] = ([a,b], a.w).
LeibnizAlgebra hemisemidirect(const LieAlgebra& h, const LieModule& v);

/// Integer matrix with determinant +-1, built from random elementary operations.
Matrix random_unimodular(std::size_t n, std::mt19937_64& rng);
/// The same algebra written in the basis given by the columns of p.
LeibnizAlgebra change_basis(const LeibnizAlgebra& g, const Matrix& p);
Representation change_basis(const Representation& m, const Matrix& pg, const Matrix& pm);
Matrix inverse(const Matrix& p);

struct NamedAlgebra {
  std::string name;
  LeibnizAlgebra algebra;
};

/// Small left Leibniz algebras: the hand-built list plus `random_copies`
/// random changes of basis of each.
std::vector<NamedAlgebra> algebra_corpus(std::uint64_t seed, int random_copies = 1);

struct NamedRepresentation {
  std::string name;
  Representation rep;
};

/// Adjoint, trivial, lifted Lie modules and the zero-right representation.
std::vector<NamedRepresentation> representation_corpus(const LeibnizAlgebra& g);

struct NamedModule {
  std::string name;
  LieModule module;
};

/// Trivial, adjoint of g_Lie and g itself as a g_Lie-module.
std::vector<NamedModule> lie_module_corpus(const LeibnizAlgebra& g);

/// Random valid left Leibniz algebra: sparse integer structure constants
/// kept only when the identity holds, then a random change of basis.
LeibnizAlgebra random_leibniz(std::size_t dim, std::mt19937_64& rng);

/// Random rational vector with small numerators/denominators.
Vector random_vector(std::size_t n, std::mt19937_64& rng);

}  // namespace leibhom::testing
