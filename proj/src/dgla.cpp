#include "leibhom/dgla.hpp"

#include <set>

namespace leibhom {

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool zero(const Vector& v) { return is_zero(std::span<const Scalar>(v)); }

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!is_zero(x[i])) y[i] += a * x[i];
}

std::set<int> degrees_of(const std::map<int, std::size_t>& dims) {
  std::set<int> out;
  for (auto [p, n] : dims)
    if (n > 0) out.insert(p);
  return out;
}

}  // namespace

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::antisymmetry: return "graded antisymmetry";
    case Axiom::jacobi: return "graded Jacobi";
    case Axiom::leibniz_rule: return "graded Leibniz rule";
    case Axiom::d_squared: return "d^2 = 0";
    case Axiom::module_bracket: return "module bracket identity";
    case Axiom::module_leibniz_rule: return "module Leibniz rule";
    case Axiom::morphism_differential: return "morphism commutes with d";
    case Axiom::morphism_bracket: return "morphism preserves brackets";
    case Axiom::shape: return "shape";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// DGLieAlgebra / DGModule accessors

std::size_t DGLieAlgebra::dim(int p) const {
  auto it = dims.find(p);
  return it == dims.end() ? 0 : it->second;
}

Vector DGLieAlgebra::bracket(int p, std::span<const Scalar> u, int q, std::span<const Scalar> v) const {
  auto it = brackets.find({p, q});
  if (it == brackets.end()) return Vector(dim(p + q));
  return it->second.apply(u, v);
}

Vector DGLieAlgebra::bracket_basis(int p, std::size_t i, int q, std::size_t j) const {
  auto it = brackets.find({p, q});
  if (it == brackets.end()) return Vector(dim(p + q));
  return it->second.at(i, j);
}

Vector DGLieAlgebra::d(int p, std::span<const Scalar> u) const {
  auto it = differential.find(p);
  if (it == differential.end()) return Vector(dim(p - 1));
  return it->second.apply(u);
}

void DGLieAlgebra::set_bracket(int p, int q, Tensor3 t) {
  if (p != q) {
    Tensor3 mirrored = t.transposed();
    const int s = koszul_sign(p * q + 1);
    if (s < 0)
      for (std::size_t i = 0; i < mirrored.dim0(); ++i)
        for (std::size_t j = 0; j < mirrored.dim1(); ++j)
          for (std::size_t k = 0; k < mirrored.dim2(); ++k) mirrored(i, j, k) = -mirrored(i, j, k);
    brackets[{q, p}] = std::move(mirrored);
  }
  brackets[{p, q}] = std::move(t);
}

std::size_t DGModule::dim(int q) const {
  auto it = dims.find(q);
  return it == dims.end() ? 0 : it->second;
}

Vector DGModule::act(int p, std::span<const Scalar> x, int q, std::span<const Scalar> m) const {
  auto it = action.find({p, q});
  if (it == action.end()) return Vector(dim(p + q));
  return it->second.apply(x, m);
}

Vector DGModule::d(int q, std::span<const Scalar> m) const {
  auto it = differential.find(q);
  if (it == differential.end()) return Vector(dim(q - 1));
  return it->second.apply(m);
}

// ---------------------------------------------------------------------------
// Axiom checkers

AxiomReport check_dgla(const DGLieAlgebra& L) {
  AxiomReport report;
  const auto degs = degrees_of(L.dims);

  for (const auto& [pq, t] : L.brackets) {
    const auto [p, q] = pq;
    if (t.dim0() != L.dim(p) || t.dim1() != L.dim(q) || t.dim2() != L.dim(p + q))
      report.push_back({Axiom::shape, {p, q}, {}});
  }
  for (const auto& [p, m] : L.differential)
    if (m.cols() != L.dim(p) || m.rows() != L.dim(p - 1)) report.push_back({Axiom::shape, {p}, {}});
  if (!report.empty()) return report;

  for (int p : degs)
    for (int q : degs) {
      if (q < p) continue;
      const int s = koszul_sign(p * q + 1);
      for (std::size_t i = 0; i < L.dim(p); ++i)
        for (std::size_t j = 0; j < L.dim(q); ++j) {
          Vector lhs = L.bracket_basis(p, i, q, j);
          axpy(lhs, -s, L.bracket_basis(q, j, p, i));
          if (!zero(lhs)) report.push_back({Axiom::antisymmetry, {p, q}, {i, j}});
        }
    }

  for (int p : degs)
    for (int q : degs)
      for (int r : degs) {
        if (L.dim(p + q + r) == 0) continue;
        for (std::size_t i = 0; i < L.dim(p); ++i)
          for (std::size_t j = 0; j < L.dim(q); ++j)
            for (std::size_t k = 0; k < L.dim(r); ++k) {
              const Vector x = unit(L.dim(p), i), y = unit(L.dim(q), j), z = unit(L.dim(r), k);
              Vector sum(L.dim(p + q + r));
              axpy(sum, koszul_sign(p * r), L.bracket(p, x, q + r, L.bracket(q, y, r, z)));
              axpy(sum, koszul_sign(q * p), L.bracket(q, y, r + p, L.bracket(r, z, p, x)));
              axpy(sum, koszul_sign(r * q), L.bracket(r, z, p + q, L.bracket(p, x, q, y)));
              if (!zero(sum)) report.push_back({Axiom::jacobi, {p, q, r}, {i, j, k}});
            }
      }

  for (int p : degs)
    for (int q : degs) {
      if (L.dim(p + q - 1) == 0) continue;
      for (std::size_t i = 0; i < L.dim(p); ++i)
        for (std::size_t j = 0; j < L.dim(q); ++j) {
          const Vector x = unit(L.dim(p), i), y = unit(L.dim(q), j);
          Vector lhs = L.d(p + q, L.bracket(p, x, q, y));
          axpy(lhs, -1, L.bracket(p - 1, L.d(p, x), q, y));
          axpy(lhs, -koszul_sign(p), L.bracket(p, x, q - 1, L.d(q, y)));
          if (!zero(lhs)) report.push_back({Axiom::leibniz_rule, {p, q}, {i, j}});
        }
    }

  for (int p : degs) {
    if (L.dim(p - 2) == 0) continue;
    for (std::size_t i = 0; i < L.dim(p); ++i)
      if (!zero(L.d(p - 1, L.d(p, unit(L.dim(p), i))))) report.push_back({Axiom::d_squared, {p}, {i}});
  }
  return report;
}

AxiomReport check_dg_module(const DGLieAlgebra& L, const DGModule& M) {
  AxiomReport report;
  for (const auto& [pq, t] : M.action) {
    const auto [p, q] = pq;
    if (t.dim0() != L.dim(p) || t.dim1() != M.dim(q) || t.dim2() != M.dim(p + q))
      report.push_back({Axiom::shape, {p, q}, {}});
  }
  for (const auto& [q, m] : M.differential)
    if (m.cols() != M.dim(q) || m.rows() != M.dim(q - 1)) report.push_back({Axiom::shape, {q}, {}});
  if (!report.empty()) return report;

  const auto ldegs = degrees_of(L.dims);
  const auto mdegs = degrees_of(M.dims);

  for (int p : ldegs)
    for (int q : ldegs)
      for (int r : mdegs) {
        if (M.dim(p + q + r) == 0) continue;
        for (std::size_t i = 0; i < L.dim(p); ++i)
          for (std::size_t j = 0; j < L.dim(q); ++j)
            for (std::size_t a = 0; a < M.dim(r); ++a) {
              const Vector x = unit(L.dim(p), i), y = unit(L.dim(q), j), m = unit(M.dim(r), a);
              Vector lhs = M.act(p + q, L.bracket(p, x, q, y), r, m);
              axpy(lhs, -1, M.act(p, x, q + r, M.act(q, y, r, m)));
              axpy(lhs, koszul_sign(p * q), M.act(q, y, p + r, M.act(p, x, r, m)));
              if (!zero(lhs)) report.push_back({Axiom::module_bracket, {p, q, r}, {i, j, a}});
            }
      }

  for (int p : ldegs)
    for (int r : mdegs) {
      if (M.dim(p + r - 1) == 0) continue;
      for (std::size_t i = 0; i < L.dim(p); ++i)
        for (std::size_t a = 0; a < M.dim(r); ++a) {
          const Vector x = unit(L.dim(p), i), m = unit(M.dim(r), a);
          Vector lhs = M.d(p + r, M.act(p, x, r, m));
          axpy(lhs, -1, M.act(p - 1, L.d(p, x), r, m));
          axpy(lhs, -koszul_sign(p), M.act(p, x, r - 1, M.d(r, m)));
          if (!zero(lhs)) report.push_back({Axiom::module_leibniz_rule, {p, r}, {i, a}});
        }
    }

  for (int r : mdegs) {
    if (M.dim(r - 2) == 0) continue;
    for (std::size_t a = 0; a < M.dim(r); ++a)
      if (!zero(M.d(r - 1, M.d(r, unit(M.dim(r), a))))) report.push_back({Axiom::d_squared, {r}, {a}});
  }
  return report;
}

namespace {

Vector apply_component(const DGLAMorphism& f, const DGLieAlgebra& target, int p, const Vector& v) {
  auto it = f.components.find(p);
  if (it == f.components.end()) return Vector(target.dim(p));
  return it->second.apply(v);
}

}  // namespace

AxiomReport check_morphism(const DGLieAlgebra& source, const DGLieAlgebra& target, const DGLAMorphism& f) {
  AxiomReport report;
  for (const auto& [p, m] : f.components)
    if (m.cols() != source.dim(p) || m.rows() != target.dim(p)) report.push_back({Axiom::shape, {p}, {}});
  if (!report.empty()) return report;

  const auto degs = degrees_of(source.dims);
  for (int p : degs)
    for (std::size_t i = 0; i < source.dim(p); ++i) {
      const Vector x = unit(source.dim(p), i);
      Vector lhs = apply_component(f, target, p - 1, source.d(p, x));
      axpy(lhs, -1, target.d(p, apply_component(f, target, p, x)));
      if (!zero(lhs)) report.push_back({Axiom::morphism_differential, {p}, {i}});
    }
  for (int p : degs)
    for (int q : degs)
      for (std::size_t i = 0; i < source.dim(p); ++i)
        for (std::size_t j = 0; j < source.dim(q); ++j) {
          const Vector x = unit(source.dim(p), i), y = unit(source.dim(q), j);
          Vector lhs = apply_component(f, target, p + q, source.bracket(p, x, q, y));
          axpy(lhs, -1,
               target.bracket(p, apply_component(f, target, p, x), q, apply_component(f, target, q, y)));
          if (!zero(lhs)) report.push_back({Axiom::morphism_bracket, {p, q}, {i, j}});
        }
  return report;
}

// ---------------------------------------------------------------------------
// Constructions

DGLieAlgebra cone(const LieAlgebra& h) {
  const std::size_t n = h.dim();
  DGLieAlgebra L;
  L.dims = {{0, n}, {1, n}};
  L.basis_names[0] = h.basis_names;
  for (const auto& name : h.basis_names) L.basis_names[1].push_back("s" + name);
  L.brackets[{0, 0}] = h.structure;
  L.set_bracket(0, 1, h.structure);
  L.differential[1] = Matrix::identity(n);
  return L;
}

LeibResult leib(const DGLieAlgebra& L) {
  const std::size_t n1 = L.dim(1), n0 = L.dim(0);
  LeibResult out;
  std::vector<std::string> names = L.basis_names.count(1) ? L.basis_names.at(1) : std::vector<std::string>{};
  if (names.size() != n1) {
    names.clear();
    for (std::size_t i = 0; i < n1; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  out.algebra = make_algebra(std::move(names));
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      const Vector v = L.bracket(0, L.d(1, unit(n1, i)), 1, unit(n1, j));
      for (std::size_t k = 0; k < n1; ++k) out.algebra.structure(i, j, k) = v[k];
    }

  const Matrix d1 = L.differential.count(1) ? L.differential.at(1) : Matrix(n0, n1);
  out.category.d1_surjective = rank(d1) == n0;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      images.push_back(L.d(2, L.bracket_basis(1, i, 1, j)));
  out.category.kernel_is_d_of_brackets = kernel_basis(d1) == Subspace::span(n1, images);
  return out;
}

DGLieAlgebra minimal_envelope(const LeibnizAlgebra& g) {
  const QuotientData q = lie_quotient(g);
  const Subspace& ann = q.kernel;
  const std::size_t n = g.dim(), r = q.quotient.dim(), a = ann.dim();

  auto ann_coords = [&](const Vector& v) {
    auto c = ann.coordinates(v);
    if (!c) throw IllDefinedQuotient("bracket value left the kernel ideal");
    return *c;
  };

  DGLieAlgebra L;
  L.dims = {{0, r}, {1, n}, {2, a}};
  L.basis_names[0] = q.quotient.basis_names;
  L.basis_names[1] = g.basis_names;
  for (std::size_t b = 0; b < a; ++b) L.basis_names[2].push_back("ann" + std::to_string(b + 1));

  L.brackets[{0, 0}] = q.quotient.structure;
  L.set_bracket(0, 1, q.action_on_g);

  Tensor3 on_ann(r, a, a);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t b = 0; b < a; ++b) {
      const Vector img = g.bracket(q.section.column(k), ann.basis_vector(b));
      const Vector c = ann_coords(img);
      for (std::size_t t = 0; t < a; ++t) on_ann(k, b, t) = c[t];
    }
  L.set_bracket(0, 2, std::move(on_ann));

  Tensor3 sym(n, n, a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = g.bracket_basis(i, j);
      axpy(v, 1, g.bracket_basis(j, i));
      const Vector c = ann_coords(v);
      for (std::size_t t = 0; t < a; ++t) sym(i, j, t) = c[t];
    }
  L.brackets[{1, 1}] = std::move(sym);

  L.differential[1] = q.projection;
  L.differential[2] = ann.basis();
  return L;
}

DGLAMorphism minimal_counit(const DGLieAlgebra& L) {
  for (auto [p, n] : L.dims)
    if (p < 0 && n > 0) throw NotInCategory("minimal_counit: L has a nonzero negative degree");
  const LeibResult lr = leib(L);
  if (!lr.category.member()) {
    throw NotInCategory(std::string("minimal_counit: ") +
                        (lr.category.d1_surjective ? "ker d1 differs from d2[[L1,L1]]" : "d1 is not surjective"));
  }
  const QuotientData q = lie_quotient(lr.algebra);
  const std::size_t n0 = L.dim(0), n1 = L.dim(1);
  const Matrix d1 = L.differential.count(1) ? L.differential.at(1) : Matrix(n0, n1);

  DGLAMorphism f;
  std::vector<Vector> lifts;
  for (std::size_t k = 0; k < n0; ++k) lifts.push_back(*solve(d1, unit(n0, k)));
  f.components[0] = q.projection * Matrix::from_columns(n1, lifts);
  f.components[1] = Matrix::identity(n1);

  const std::size_t n2 = L.dim(2);
  Matrix c2(q.kernel.dim(), n2);
  for (std::size_t i = 0; i < n2; ++i) {
    auto c = q.kernel.coordinates(L.d(2, unit(n2, i)));
    if (!c) throw NotInCategory("minimal_counit: d2 does not land in the kernel ideal");
    for (std::size_t t = 0; t < c->size(); ++t) c2(t, i) = (*c)[t];
  }
  f.components[2] = std::move(c2);
  for (auto [p, n] : L.dims)
    if (p > 2) f.components[p] = Matrix(0, n);
  return f;
}

DGModule minimal_module(const LeibnizAlgebra& g, const Representation& m) {
  const QuotientData q = lie_quotient(g);
  const Symmetrization s = symmetrization(m);
  const auto lifts_g = q.kernel.complement_indices();
  const auto lifts_m = s.anti.complement_indices();
  const std::size_t n = g.dim(), r = q.quotient.dim(), d = m.dim(), a = s.anti.dim(), sd = s.symm_dim;

  auto left = [&](std::size_t i, const Vector& v) {
    Vector out(d);
    for (std::size_t x = 0; x < d; ++x)
      if (!is_zero(v[x]))
        for (std::size_t y = 0; y < d; ++y) out[y] += v[x] * m.left_action(i, x, y);
    return out;
  };
  auto right = [&](const Vector& v, const Vector& x) { return m.right_action.apply(v, x); };
  auto anti_coords = [&](const Vector& v, const char* what) {
    auto c = s.anti.coordinates(v);
    if (!c) throw IllDefinedAction(std::string("minimal_module: ") + what + " leaves m_anti");
    return *c;
  };

  for (std::size_t b = 0; b < a; ++b)
    for (std::size_t x = 0; x < n; ++x)
      if (!zero(right(s.anti.basis_vector(b), unit(n, x))))
        throw IllDefinedAction("minimal_module: [m_anti, g] != 0, so x (x) dm is not well defined");

  DGModule M;
  M.dims = {{-1, sd}, {0, d}, {1, a}};

  Tensor3 on_m(r, d, d), on_anti(r, a, a), on_symm(r, sd, sd);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t i = lifts_g[k];
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) on_m(k, x, y) = m.left_action(i, x, y);
    for (std::size_t b = 0; b < a; ++b) {
      const Vector c = anti_coords(left(i, s.anti.basis_vector(b)), "g_Lie action on m_anti");
      for (std::size_t t = 0; t < a; ++t) on_anti(k, b, t) = c[t];
    }
    for (std::size_t t = 0; t < sd; ++t) {
      const Vector img = s.projection.apply(left(i, unit(d, lifts_m[t])));
      for (std::size_t u = 0; u < sd; ++u) on_symm(k, t, u) = img[u];
    }
  }
  M.action[{0, 0}] = std::move(on_m);
  M.action[{0, 1}] = std::move(on_anti);
  M.action[{0, -1}] = std::move(on_symm);

  // x (x) dm -> -[m, x]
  Tensor3 raise_symm(n, sd, d);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t t = 0; t < sd; ++t) {
      const Vector v = right(unit(d, lifts_m[t]), unit(n, x));
      for (std::size_t y = 0; y < d; ++y) raise_symm(x, t, y) = -v[y];
    }
  M.action[{1, -1}] = std::move(raise_symm);

  // x (x) m -> [x, m] + [m, x]
  Tensor3 raise_m(n, d, a);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Vector v = left(x, unit(d, y));
      axpy(v, 1, right(unit(d, y), unit(n, x)));
      const Vector c = anti_coords(v, "[x,m]+[m,x]");
      for (std::size_t t = 0; t < a; ++t) raise_m(x, y, t) = c[t];
    }
  M.action[{1, 0}] = std::move(raise_m);

  // [[x,y]] (x) dm -> -[m, [x,y] + [y,x]]; degree-2 basis = kernel ideal basis.
  Tensor3 raise_two(q.kernel.dim(), sd, a);
  for (std::size_t z = 0; z < q.kernel.dim(); ++z)
    for (std::size_t t = 0; t < sd; ++t) {
      Vector v = right(unit(d, lifts_m[t]), q.kernel.basis_vector(z));
      for (auto& e : v) e = -e;
      const Vector c = anti_coords(v, "-[m, [x,y]+[y,x]]");
      for (std::size_t u = 0; u < a; ++u) raise_two(z, t, u) = c[u];
    }
  M.action[{2, -1}] = std::move(raise_two);

  M.differential[0] = s.projection;
  M.differential[1] = s.anti.basis();
  return M;
}

DGModule adjoint_dg_module(const DGLieAlgebra& L) {
  DGModule M;
  M.dims = L.dims;
  M.action = L.brackets;
  M.differential = L.differential;
  return M;
}

std::map<int, std::size_t> homology(const DGLieAlgebra& L) {
  std::map<int, std::size_t> out;
  for (auto [p, n] : L.dims) {
    const Matrix d_out = L.differential.count(p) ? L.differential.at(p) : Matrix(L.dim(p - 1), n);
    const Matrix d_in = L.differential.count(p + 1) ? L.differential.at(p + 1) : Matrix(n, L.dim(p + 1));
    out[p] = homology_dimension(d_out, d_in);
  }
  return out;
}

}  // namespace leibhom
