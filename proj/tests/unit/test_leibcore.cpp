#include <doctest.h>

#include "leibhom/leibcore.hpp"
#include "support/corpus.hpp"

using namespace leibhom;
using namespace leibhom::testing;

TEST_CASE("corpus algebras satisfy the left Leibniz identity") {
  for (const auto& [name, g] : algebra_corpus(1, 2)) {
    CAPTURE(name);
    CHECK(check_leibniz(g).empty());
  }
}

TEST_CASE("a symmetric-square defect is reported") {
  // [x,x] = y and [x,y] = x is not Leibniz.
  LeibnizAlgebra g = a2();
  g.structure(0, 1, 0) = 1;
  const auto report = check_leibniz(g);
  CHECK_FALSE(report.empty());
}

TEST_CASE("opposite is an involution and swaps conventions") {
  for (const auto& [name, g] : algebra_corpus(2)) {
    CAPTURE(name);
    const LeibnizAlgebra op = opposite(g);
    CHECK(op.convention == Convention::right);
    CHECK(opposite(op) == g);
  }
}

TEST_CASE("A2 quotient") {
  const LeibnizAlgebra g = a2();
  const Subspace ann = kernel_ideal(g);
  CHECK(ann.dim() == 1);
  CHECK(ann.contains(Vector{0, 1}));
  const QuotientData q = lie_quotient(g);
  CHECK(q.quotient.dim() == 1);
  CHECK(q.quotient.structure.is_zero());
  CHECK(rank(q.projection) == 1);
  CHECK((q.projection * q.section) == Matrix::identity(1));
}

TEST_CASE("lie algebras have zero kernel ideal") {
  for (const LieAlgebra& h : {r2(), heisenberg(), sl2()}) {
    CHECK(check_lie(h).empty());
    const LeibnizAlgebra g = as_leibniz(h);
    CHECK(kernel_ideal(g).dim() == 0);
    CHECK(lie_quotient(g).quotient.dim() == h.dim());
    CHECK(as_lie(g) == h);
  }
  CHECK_THROWS_AS(as_lie(a2()), AxiomError);
}

TEST_CASE("quotient invariants on the corpus") {
  for (const auto& [name, g] : algebra_corpus(3, 2)) {
    CAPTURE(name);
    const QuotientData q = lie_quotient(g);
    CHECK(check_lie(q.quotient).empty());
    CHECK(q.quotient.dim() + q.kernel.dim() == g.dim());
    CHECK((q.projection * q.section) == Matrix::identity(q.quotient.dim()));
    // pi is a bracket morphism
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) {
        const Vector lhs = q.projection.apply(g.bracket_basis(i, j));
        const Vector rhs = q.quotient.structure.apply(q.projection.column(i), q.projection.column(j));
        CHECK(lhs == rhs);
      }
    // the kernel ideal is a two-sided ideal annihilating from the left
    for (std::size_t k = 0; k < q.kernel.dim(); ++k)
      for (std::size_t j = 0; j < g.dim(); ++j) {
        Vector e(g.dim());
        e[j] = 1;
        CHECK(is_zero(g.bracket(q.kernel.basis_vector(k), e)));
        CHECK(q.kernel.contains(g.bracket(e, q.kernel.basis_vector(k))));
      }
    CHECK(check_lie_module(q.quotient, LieModule{g.basis_names, q.action_on_g}).empty());
  }
}

TEST_CASE("kernel ideal is basis independent") {
  std::mt19937_64 rng(17);
  for (const auto& [name, g] : algebra_corpus(4, 0)) {
    CAPTURE(name);
    const Matrix p = random_unimodular(g.dim(), rng);
    const LeibnizAlgebra h = change_basis(g, p);
    CHECK(check_leibniz(h).empty());
    CHECK(kernel_ideal(h).dim() == kernel_ideal(g).dim());
    // p maps kernel_ideal(h) onto kernel_ideal(g)
    std::vector<Vector> imgs;
    const Subspace kh = kernel_ideal(h);
    for (std::size_t k = 0; k < kh.dim(); ++k) imgs.push_back(p.apply(kh.basis_vector(k)));
    CHECK(Subspace::span(g.dim(), imgs) == kernel_ideal(g));
  }
}

TEST_CASE("representation corpus satisfies the three identities") {
  for (const auto& [gname, g] : algebra_corpus(5)) {
    for (const auto& [mname, m] : representation_corpus(g)) {
      CAPTURE(gname);
      CAPTURE(mname);
      CHECK(check_representation(g, m).empty());
    }
    for (const auto& [mname, m] : lie_module_corpus(g)) {
      CAPTURE(mname);
      CHECK(check_lie_module(lie_quotient(g).quotient, m).empty());
    }
  }
}

TEST_CASE("broken representations report the failing identity") {
  const LeibnizAlgebra g = as_leibniz(sl2());
  Representation m = adjoint_representation(g);
  m.right_action(0, 1, 1) += 1;
  const auto report = check_representation(g, m);
  REQUIRE_FALSE(report.empty());
  for (const auto& v : report) CHECK((v.identity >= 1 && v.identity <= 3));
}

TEST_CASE("symmetrization of the adjoint") {
  const LeibnizAlgebra g = a2();
  const Symmetrization s = symmetrization(adjoint_representation(g));
  // [x,m]+[m,x] spans the y line.
  CHECK(s.anti.dim() == 1);
  CHECK(s.symm_dim == 1);
  CHECK((s.projection * s.anti.basis()).is_zero());
  for (const auto& [name, h] : algebra_corpus(6)) {
    CAPTURE(name);
    for (const auto& [mname, m] : representation_corpus(h)) {
      const Symmetrization t = symmetrization(m);
      CHECK(t.anti.dim() + t.symm_dim == m.dim());
      CHECK(opposite_representation(opposite_representation(m)) == m);
    }
  }
}

TEST_CASE("left_action_module descends to g_Lie") {
  for (const auto& [name, g] : algebra_corpus(7)) {
    CAPTURE(name);
    const QuotientData q = lie_quotient(g);
    for (const auto& [mname, m] : representation_corpus(g))
      CHECK(check_lie_module(q.quotient, left_action_module(q, m)).empty());
  }
}

TEST_CASE("lifting a Lie module gives a representation") {
  for (const auto& [name, g] : algebra_corpus(8)) {
    CAPTURE(name);
    const QuotientData q = lie_quotient(g);
    for (const auto& [mname, m] : lie_module_corpus(g)) {
      const Representation r = lift_lie_module(q, m);
      CHECK(check_representation(g, r).empty());
      CHECK(symmetrization(r).anti.dim() == 0);
    }
  }
}
