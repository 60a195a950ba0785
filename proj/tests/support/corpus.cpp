#include "support/corpus.hpp"

#include <algorithm>

namespace leibhom::testing {

namespace {

LieAlgebra lie(std::vector<std::string> names) {
  const std::size_t n = names.size();
  return LieAlgebra{std::move(names), Tensor3(n, n, n)};
}

void set_lie(LieAlgebra& h, std::size_t i, std::size_t j, std::size_t k, int c) {
  h.structure(i, j, k) = c;
  h.structure(j, i, k) = -c;
}

}  // namespace

LeibnizAlgebra a2() {
  LeibnizAlgebra g = make_algebra({"x", "y"});
  g.structure(0, 0, 1) = 1;
  return g;
}

LeibnizAlgebra cyclic3() {
  LeibnizAlgebra g = make_algebra({"e1", "e2", "e3"});
  g.structure(0, 0, 1) = 1;
  g.structure(0, 1, 2) = 1;
  return g;
}

LieAlgebra r2() {
  LieAlgebra h = lie({"a", "b"});
  set_lie(h, 0, 1, 1, 1);
  return h;
}

LieAlgebra heisenberg() {
  LieAlgebra h = lie({"x", "y", "z"});
  set_lie(h, 0, 1, 2, 1);
  return h;
}

LieAlgebra sl2() {
  LieAlgebra h = lie({"h", "e", "f"});
  set_lie(h, 0, 1, 1, 2);
  set_lie(h, 0, 2, 2, -2);
  set_lie(h, 1, 2, 0, 1);
  return h;
}

LieAlgebra abelian_lie(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("t" + std::to_string(i + 1));
  return lie(std::move(names));
}

LeibnizAlgebra hemisemidirect(const LieAlgebra& h, const LieModule& v) {
  std::vector<std::string> names = h.basis_names;
  for (const auto& n : v.basis_names) {
    std::string m = n;
    while (std::find(names.begin(), names.end(), m) != names.end()) m += "'";
    names.push_back(m);
  }
  LeibnizAlgebra g = make_algebra(std::move(names));
  const std::size_t a = h.dim(), b = v.dim();
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t k = 0; k < a; ++k) g.structure(i, j, k) = h.structure(i, j, k);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < b; ++k) g.structure(i, a + j, a + k) = v.action(i, j, k);
  return g;
}

Matrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  Matrix p = Matrix::identity(n);
  if (n < 2) return p;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t r = pick(rng), s = pick(rng);
    if (r == s) continue;
    const int c = coeff(rng);
    for (std::size_t k = 0; k < n; ++k) p(r, k) += c * p(s, k);
  }
  return p;
}

Matrix inverse(const Matrix& p) {
  const std::size_t n = p.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = p(i, j);
    aug(i, n + i) = 1;
  }
  reduce_rows(aug);
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& g, const Matrix& p) {
  const std::size_t n = g.dim();
  const Matrix pinv = inverse(p);
  LeibnizAlgebra out = g;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = pinv.apply(g.bracket(p.column(i), p.column(j)));
      for (std::size_t k = 0; k < n; ++k) out.structure(i, j, k) = v[k];
    }
  return out;
}

Representation change_basis(const Representation& m, const Matrix& pg, const Matrix& pm) {
  const std::size_t n = pg.rows(), d = pm.rows();
  const Matrix pminv = inverse(pm);
  Representation out = m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < d; ++a) {
      const Vector x = pg.column(i), f = pm.column(a);
      Vector l(d), r(d);
      for (std::size_t ii = 0; ii < n; ++ii)
        for (std::size_t aa = 0; aa < d; ++aa) {
          const Scalar c = x[ii] * f[aa];
          if (is_zero(c)) continue;
          for (std::size_t b = 0; b < d; ++b) {
            l[b] += c * m.left_action(ii, aa, b);
            r[b] += c * m.right_action(aa, ii, b);
          }
        }
      const Vector lc = pminv.apply(l), rc = pminv.apply(r);
      for (std::size_t b = 0; b < d; ++b) {
        out.left_action(i, a, b) = lc[b];
        out.right_action(a, i, b) = rc[b];
      }
    }
  return out;
}

std::vector<NamedAlgebra> algebra_corpus(std::uint64_t seed, int random_copies) {
  std::vector<NamedAlgebra> base = {
      {"abelian2", abelian_algebra(2)},
      {"A2", a2()},
      {"r2", as_leibniz(r2())},
      {"heisenberg", as_leibniz(heisenberg())},
      {"sl2", as_leibniz(sl2())},
      {"cyclic3", cyclic3()},
      {"hemi(r2,adj)", hemisemidirect(r2(), adjoint_module(r2()))},
      {"hemi(t1,adj r2-like)", [] {
         LieAlgebra t = abelian_lie(1);
         LieModule v{{"u", "w"}, Tensor3(1, 2, 2)};
         v.action(0, 0, 1) = 1;  // t.u = w
         return hemisemidirect(t, v);
       }()},
  };
  std::mt19937_64 rng(seed);
  std::vector<NamedAlgebra> out = base;
  for (int c = 0; c < random_copies; ++c)
    for (const auto& [name, g] : base)
      out.push_back({name + "/basis" + std::to_string(c), change_basis(g, random_unimodular(g.dim(), rng))});
  return out;
}

std::vector<NamedRepresentation> representation_corpus(const LeibnizAlgebra& g) {
  const QuotientData q = lie_quotient(g);
  std::vector<NamedRepresentation> out = {
      {"adjoint", adjoint_representation(g)},
      {"trivial1", trivial_representation(g, 1)},
      {"lift(adjoint g_Lie)", lift_lie_module(q, adjoint_module(q.quotient))},
  };
  Representation zr = adjoint_representation(g);
  zr.left_action = Tensor3(g.dim(), g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t b = 0; b < g.dim(); ++b) zr.left_action(i, a, b) = g.structure(i, a, b);
  zr.right_action = Tensor3(g.dim(), g.dim(), g.dim());
  out.push_back({"zero-right(g)", zr});
  return out;
}

std::vector<NamedModule> lie_module_corpus(const LeibnizAlgebra& g) {
  const QuotientData q = lie_quotient(g);
  return {
      {"trivial1", trivial_module(q.quotient, 1)},
      {"adjoint g_Lie", adjoint_module(q.quotient)},
      {"g", LieModule{g.basis_names, q.action_on_g}},
  };
}

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  Vector v(n);
  for (auto& e : v) {
    e = Scalar(num(rng), den(rng));
    e.canonicalize();
  }
  return v;
}

LeibnizAlgebra random_leibniz(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1), count(1, 4);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  while (true) {
    LeibnizAlgebra g = make_algebra(names);
    for (std::size_t t = count(rng); t > 0; --t) g.structure(pick(rng), pick(rng), pick(rng)) = coeff(rng);
    if (check_leibniz(g).empty()) return change_basis(g, random_unimodular(dim, rng));
  }
}

}  // namespace leibhom::testing
