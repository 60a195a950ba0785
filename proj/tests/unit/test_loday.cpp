#include <doctest.h>

#include "leibhom/homology.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace leibhom;
using namespace leibhom::testing;

namespace {

std::size_t derived_dim(const LeibnizAlgebra& g) {
  std::vector<Vector> br;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) br.push_back(g.bracket_basis(i, j));
  return Subspace::span(g.dim(), br).dim();
}

}  // namespace

TEST_CASE("abelian algebras have d^n Leibniz homology") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto c = loday_chain(abelian_algebra(d), Coefficients::trivial(), d == 3 ? 3 : 4);
    std::size_t p = 1;
    for (std::size_t b : betti(c)) {
      CHECK(b == p);
      p *= d;
    }
    for (const auto& m : c.diffs) CHECK(m.is_zero());
  }
}

TEST_CASE("A2 trivial Leibniz homology is 1, 1, 1") {
  const auto oracle_betti = oracle::loday_trivial_betti(a2(), 2);
  CHECK(oracle_betti == std::vector<std::size_t>{1, 1, 1});
  const auto c = loday_chain(a2(), Coefficients::trivial(), 2);
  CHECK(betti(c) == std::vector<std::size_t>{1, 1, 1});
  CHECK(rank(c.diffs[1]) == 1);
  CHECK(rank(c.diffs[2]) == 2);
  CHECK(c.labels[2].size() == 4);
}

TEST_CASE("trivial Leibniz homology agrees with the dense oracle") {
  for (const auto& [name, g] : algebra_corpus(31)) {
    CAPTURE(name);
    const std::size_t n = g.dim() <= 2 ? 4 : 3;
    const auto c = loday_chain(g, Coefficients::trivial(), n);
    CHECK(betti(c) == oracle::loday_trivial_betti(g, n));
    CHECK(betti(c)[1] == g.dim() - derived_dim(g));
  }
}

TEST_CASE("field duality between Leibniz homology and cohomology") {
  for (const auto& [name, g] : algebra_corpus(32)) {
    CAPTURE(name);
    CHECK(betti(loday_chain(g, Coefficients::trivial(), 3)) == betti(loday_cochain(g, Coefficients::trivial(), 3)));
  }
}

TEST_CASE("builders pass the d o d gate with every coefficient kind") {
  for (const auto& [name, g] : algebra_corpus(33)) {
    CAPTURE(name);
    for (const auto& [mname, m] : representation_corpus(g)) {
      CAPTURE(mname);
      CHECK_NOTHROW(loday_chain(g, Coefficients::representation(m), 3));
      CHECK_NOTHROW(loday_cochain(g, Coefficients::representation(m), 3));
    }
    for (const auto& [mname, m] : lie_module_corpus(g)) {
      CAPTURE(mname);
      CHECK_NOTHROW(loday_chain(g, Coefficients::lie(m), 3));
      CHECK_NOTHROW(loday_cochain(g, Coefficients::lie(m), 3));
    }
  }
}

TEST_CASE("Lie-module lifts: representation branch equals the Lie-module branch") {
  for (const auto& [name, g] : algebra_corpus(34)) {
    CAPTURE(name);
    const QuotientData q = lie_quotient(g);
    for (const auto& [mname, m] : lie_module_corpus(g)) {
      CAPTURE(mname);
      const auto rep = Coefficients::representation(lift_lie_module(q, m));
      const auto lie = Coefficients::lie(m);
      CHECK(loday_cochain(g, rep, 3).diffs == loday_cochain(g, lie, 3).diffs);
      CHECK(loday_chain(g, rep, 3).diffs == loday_chain(g, lie, 3).diffs);
    }
  }
}

TEST_CASE("non-canonical representation rules fail the gate on the cyclic algebra") {
  const LeibnizAlgebra g = cyclic3();
  const auto adj = Coefficients::representation(adjoint_representation(g));
  LodayOptions opts;
  opts.chain_rule = RepChainRule::right_action;
  CHECK_THROWS_AS(loday_chain(g, adj, 3, opts), DifferentialSquareNonzero);
  opts.chain_rule = RepChainRule::symmetrized_j1;
  CHECK_THROWS_AS(loday_chain(g, adj, 3, opts), DifferentialSquareNonzero);
  opts = {};
  opts.cochain_rule = RepCochainRule::added;
  CHECK_THROWS_AS(loday_cochain(g, adj, 3, opts), DifferentialSquareNonzero);
}

TEST_CASE("dropping the cochain correction yields the left-action module complex") {
  for (const auto& [name, g] : algebra_corpus(35)) {
    CAPTURE(name);
    const QuotientData q = lie_quotient(g);
    for (const auto& [mname, m] : representation_corpus(g)) {
      CAPTURE(mname);
      LodayOptions opts;
      opts.cochain_rule = RepCochainRule::uncorrected;
      const auto plain = loday_cochain(g, Coefficients::representation(m), 3, opts);
      CHECK(plain.diffs == loday_cochain(g, Coefficients::lie(left_action_module(q, m)), 3).diffs);
    }
  }
}

TEST_CASE("the Leibniz homology of a Lie algebra in low degrees matches CE") {
  for (const LieAlgebra& h : {r2(), heisenberg(), sl2()}) {
    const auto hl = betti(loday_chain(as_leibniz(h), Coefficients::trivial(), 1));
    const auto ce = oracle::ce_trivial_betti(h, 1);
    CHECK(hl == ce);
  }
}

TEST_CASE("corrupted complexes are rejected") {
  ChainComplex c = loday_chain(a2(), Coefficients::trivial(), 2);
  c.diffs[2](0, 0) += 1;
  CHECK_THROWS_AS(verify(c), DifferentialSquareNonzero);
  ChainComplex s = loday_chain(a2(), Coefficients::trivial(), 2);
  s.diffs[0] = Matrix(2, 2);
  CHECK_THROWS_AS(verify(s), ShapeMismatch);
}
