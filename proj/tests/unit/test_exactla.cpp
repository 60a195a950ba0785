#include <doctest.h>

#include <random>

#include "leibhom/exactla.hpp"
#include "support/corpus.hpp"

using namespace leibhom;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int sparsity = 2) {
  std::uniform_int_distribution<int> coin(0, sparsity);
  std::uniform_int_distribution<int> val(-4, 4);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) == 0) m(i, j) = Scalar(val(rng), 1 + coin(rng));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j).canonicalize();
  return m;
}

// Rank of a product of an r x k and k x c matrix with generic integer entries
// is at most k; used to build matrices of prescribed low rank.
Matrix low_rank(std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng) {
  return random_matrix(r, k, rng, 0) * random_matrix(k, c, rng, 0);
}

}  // namespace

TEST_CASE("parse_scalar accepts integers and fractions") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-3/6") == Scalar(-1, 2));
  CHECK(parse_scalar(" +4/2 ") == 2);
  CHECK(to_string(parse_scalar("6/4")) == "3/2");
  CHECK(to_string(parse_scalar("-0")) == "0");
}

TEST_CASE("parse_scalar rejects malformed input") {
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_scalar("x"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/-2"), ParseError);
}

TEST_CASE("rank of small fixed matrices") {
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(Matrix{{1, 2}, {3, 4}}) == 2);
  CHECK(rank(Matrix(0, 5)) == 0);
  CHECK(rank(Matrix(4, 0)) == 0);
  CHECK(rank(Matrix::identity(7)) == 7);
  CHECK(rank(Matrix{{Scalar(1, 3), Scalar(1, 2)}, {Scalar(2, 3), 1}}) == 1);
}

TEST_CASE("rank-nullity across the fraction-free and RREF routes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 7, c = 1 + (trial * 3) % 8;
    const Matrix m = random_matrix(r, c, rng);
    const Subspace ker = kernel_basis(m);
    CHECK(rank(m) + ker.dim() == c);
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(image(m).dim() == rank(m));
    for (std::size_t k = 0; k < ker.dim(); ++k) CHECK(is_zero(m.apply(ker.basis_vector(k))));
  }
}

TEST_CASE("prescribed low rank is recovered") {
  std::mt19937_64 rng(5);
  for (std::size_t k = 0; k <= 4; ++k) {
    const Matrix m = low_rank(6, 7, k, rng);
    CHECK(rank(m) <= k);
    CHECK(rank(m) + kernel_basis(m).dim() == 7);
  }
}

TEST_CASE("Subspace basis is canonical") {
  const Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace b = Subspace::span(3, {{1, 2, 1}, {1, 0, -1}, {2, 2, 0}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(Vector{3, 5, 2}));
  CHECK_FALSE(a.contains(Vector{1, 0, 0}));
  CHECK(a.complement_indices().size() == 1);
}

TEST_CASE("Subspace coordinates and quotient projection") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::vector<Vector> gens;
    for (int g = 0; g < trial % 4; ++g) gens.push_back(testing::random_vector(n, rng));
    const Subspace s = Subspace::span(n, gens);
    for (const auto& v : gens) {
      auto c = s.coordinates(v);
      REQUIRE(c.has_value());
      CHECK(s.basis().apply(*c) == v);
    }
    const Matrix p = s.quotient_projection();
    CHECK(p.rows() == n - s.dim());
    CHECK(rank(p) == n - s.dim());
    CHECK((p * s.basis()).is_zero());
    CHECK(kernel_basis(p) == s);
    CHECK(s.contains(Subspace::zero(n)));
    CHECK(Subspace::full(n).contains(s));
    CHECK(s + Subspace::zero(n) == s);
  }
}

TEST_CASE("homology_dimension") {
  const Matrix d1{{0, 0}};       // k^2 -> k
  const Matrix d2{{1}, {0}};     // k -> k^2
  CHECK(homology_dimension(d1, d2) == 1);
  CHECK(homology_dimension(Matrix(0, 3), Matrix(3, 0)) == 3);
  CHECK_THROWS_AS(homology_dimension(Matrix{{1, 0}}, Matrix{{1}, {0}}), CompositionNotZero);
  CHECK_THROWS_AS(homology_dimension(Matrix(1, 2), Matrix(3, 1)), ShapeMismatch);
}

TEST_CASE("solve and restrict_map") {
  const Matrix a{{1, 1}, {0, 1}, {1, 2}};
  auto x = solve(a, Vector{2, 1, 3});
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == Vector{2, 1, 3});
  CHECK_FALSE(solve(a, Vector{1, 0, 0}).has_value());

  const Subspace plane = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  const Matrix rot{{0, -1, 0}, {1, 0, 0}, {0, 0, 5}};
  CHECK(restrict_map(rot, plane, plane).rows() == 2);
  const Subspace line = Subspace::span(3, {{1, 0, 0}});
  CHECK_THROWS_AS(restrict_map(rot, line, line), NotInvariant);
}

TEST_CASE("matrix arithmetic") {
  std::mt19937_64 rng(8);
  const Matrix a = random_matrix(3, 4, rng), b = random_matrix(4, 2, rng), c = random_matrix(2, 5, rng);
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  CHECK((a - a).is_zero());
  CHECK(a + (-a) == Matrix(3, 4));
  CHECK(Matrix::identity(3) * a == a);
}
