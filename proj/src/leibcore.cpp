#include "leibhom/leibcore.hpp"

#include <string>

namespace leibhom {

std::string to_string(Convention c) { return c == Convention::left ? "left" : "right"; }

LeibnizAlgebra make_algebra(std::vector<std::string> names, Convention convention) {
  const std::size_t n = names.size();
  return LeibnizAlgebra{std::move(names), Tensor3(n, n, n), convention};
}

LeibnizAlgebra abelian_algebra(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return make_algebra(std::move(names));
}

LeibnizAlgebra as_leibniz(const LieAlgebra& h) {
  return LeibnizAlgebra{h.basis_names, h.structure, Convention::left};
}

LieAlgebra as_lie(const LeibnizAlgebra& g) {
  LieAlgebra h{g.basis_names, g.structure};
  const auto report = check_lie(h);
  if (!report.empty()) {
    const auto& v = report.front();
    throw AxiomError("not a Lie algebra: " + std::string(v.identity == 1 ? "antisymmetry" : "Jacobi") +
                     " fails at (" + g.basis_names[v.i] + "," + g.basis_names[v.j] +
                     (v.identity == 2 ? "," + g.basis_names[v.k] : std::string()) + ")");
  }
  return h;
}

Representation trivial_representation(const LeibnizAlgebra& g, std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t a = 0; a < dim; ++a) names.push_back("m" + std::to_string(a + 1));
  return Representation{std::move(names), Tensor3(g.dim(), dim, dim), Tensor3(dim, g.dim(), dim)};
}

Representation adjoint_representation(const LeibnizAlgebra& g) {
  return Representation{g.basis_names, g.structure, g.structure};
}

Representation lift_lie_module(const QuotientData& q, const LieModule& m) {
  const std::size_t n = q.projection.cols();
  const std::size_t d = m.dim();
  if (m.action.dim0() != q.quotient.dim() || m.action.dim1() != d || m.action.dim2() != d)
    throw ShapeMismatch("lift_lie_module: module action does not match g_Lie");
  Representation rep{m.basis_names, Tensor3(n, d, d), Tensor3(d, n, d)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < q.projection.rows(); ++k) {
      const Scalar& p = q.projection(k, j);
      if (is_zero(p)) continue;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          const Scalar v = p * m.action(k, a, b);
          rep.left_action(j, a, b) += v;
          rep.right_action(a, j, b) -= v;
        }
    }
  return rep;
}

LieModule trivial_module(const LieAlgebra& h, std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t a = 0; a < dim; ++a) names.push_back("m" + std::to_string(a + 1));
  return LieModule{std::move(names), Tensor3(h.dim(), dim, dim)};
}

LieModule adjoint_module(const LieAlgebra& h) { return LieModule{h.basis_names, h.structure}; }

// ---------------------------------------------------------------------------
// Identity checks

namespace {

// Bracket on g (+) m with [m, m'] = 0; only used on triples holding a single m.
class MixedBracket {
 public:
  MixedBracket(const LeibnizAlgebra& g, const Representation* m) : g_(g), m_(m) {}

  std::size_t size() const { return g_.dim() + (m_ ? m_->dim() : 0); }

  Vector unit(std::size_t i) const {
    Vector v(size());
    v[i] = 1;
    return v;
  }

  Vector operator()(const Vector& u, const Vector& v) const {
    const std::size_t n = g_.dim();
    std::span<const Scalar> ug(u.data(), n), vg(v.data(), n);
    Vector out(size());
    const Vector gg = g_.structure.apply(ug, vg);
    std::copy(gg.begin(), gg.end(), out.begin());
    if (m_) {
      std::span<const Scalar> um(u.data() + n, m_->dim()), vm(v.data() + n, m_->dim());
      const Vector left = m_->left_action.apply(ug, vm);
      const Vector right = m_->right_action.apply(um, vg);
      for (std::size_t a = 0; a < m_->dim(); ++a) out[n + a] = left[a] + right[a];
    }
    return out;
  }

  // Zero exactly when the convention's identity holds on (a, b, c).
  Vector defect(std::size_t a, std::size_t b, std::size_t c) const {
    const Vector x = unit(a), y = unit(b), z = unit(c);
    Vector lhs, rhs1, rhs2;
    if (g_.convention == Convention::left) {
      lhs = (*this)((*this)(x, y), z);
      rhs1 = (*this)(x, (*this)(y, z));
      rhs2 = (*this)(y, (*this)(x, z));
    } else {
      lhs = (*this)(x, (*this)(y, z));
      rhs1 = (*this)((*this)(x, y), z);
      rhs2 = (*this)((*this)(x, z), y);
    }
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= rhs1[i] - rhs2[i];
    return lhs;
  }

 private:
  const LeibnizAlgebra& g_;
  const Representation* m_;
};

}  // namespace

ViolationReport check_leibniz(const LeibnizAlgebra& g) {
  MixedBracket br(g, nullptr);
  ViolationReport report;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(std::span<const Scalar>(br.defect(i, j, k)))) report.push_back({0, i, j, k});
  return report;
}

ViolationReport check_lie(const LieAlgebra& h) {
  ViolationReport report;
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (h.structure(i, j, k) != -h.structure(j, i, k)) {
          report.push_back({1, i, j, 0});
          break;
        }
  // Jacobi: [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0.
  auto unit = [n](std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = unit(i), y = unit(j), z = unit(k);
        Vector s = h.structure.apply(x, h.structure.at(j, k));
        const Vector t = h.structure.apply(y, h.structure.at(k, i));
        const Vector u = h.structure.apply(z, h.structure.at(i, j));
        for (std::size_t l = 0; l < n; ++l) s[l] += t[l] + u[l];
        if (!is_zero(std::span<const Scalar>(s))) report.push_back({2, i, j, k});
      }
  return report;
}

ViolationReport check_representation(const LeibnizAlgebra& g, const Representation& m) {
  if (m.left_action.dim0() != g.dim() || m.right_action.dim1() != g.dim() ||
      m.left_action.dim1() != m.dim() || m.right_action.dim0() != m.dim()) {
    throw ShapeMismatch("representation arrays do not match the algebra and module dimensions");
  }
  MixedBracket br(g, &m);
  ViolationReport report;
  const std::size_t n = g.dim();
  // Identity number = slot occupied by the module element.
  for (std::size_t a = 0; a < m.dim(); ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t ma = n + a;
        if (!is_zero(std::span<const Scalar>(br.defect(ma, x, y)))) report.push_back({1, a, x, y});
        if (!is_zero(std::span<const Scalar>(br.defect(x, ma, y)))) report.push_back({2, x, a, y});
        if (!is_zero(std::span<const Scalar>(br.defect(x, y, ma)))) report.push_back({3, x, y, a});
      }
  return report;
}

ViolationReport check_lie_module(const LieAlgebra& h, const LieModule& m) {
  ViolationReport report;
  const std::size_t n = h.dim(), d = m.dim();
  if (m.action.dim0() != n || m.action.dim1() != d || m.action.dim2() != d)
    throw ShapeMismatch("check_lie_module: action tensor has the wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < d; ++a) {
        Vector fa(d);
        fa[a] = 1;
        const Vector ij = h.structure.at(i, j);
        Vector lhs = m.action.apply(ij, fa);
        Vector ei(n), ej(n);
        ei[i] = 1;
        ej[j] = 1;
        const Vector y_m = m.action.apply(ej, fa);
        const Vector x_m = m.action.apply(ei, fa);
        const Vector xy_m = m.action.apply(ei, y_m);
        const Vector yx_m = m.action.apply(ej, x_m);
        for (std::size_t b = 0; b < d; ++b) lhs[b] -= xy_m[b] - yx_m[b];
        if (!is_zero(std::span<const Scalar>(lhs))) report.push_back({1, i, j, a});
      }
  return report;
}

// ---------------------------------------------------------------------------
// Constructions

LeibnizAlgebra opposite(const LeibnizAlgebra& g) {
  return LeibnizAlgebra{g.basis_names, g.structure.transposed(),
                        g.convention == Convention::left ? Convention::right : Convention::left};
}

Subspace kernel_ideal(const LeibnizAlgebra& g) {
  std::vector<Vector> squares;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      Vector v = g.bracket_basis(i, j);
      const Vector w = g.bracket_basis(j, i);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[k];
      squares.push_back(std::move(v));
    }
  return Subspace::span(g.dim(), squares);
}

QuotientData lie_quotient(const LeibnizAlgebra& g) {
  if (g.convention != Convention::left) {
    throw IllDefinedQuotient("lie_quotient expects a left Leibniz algebra; convert with opposite()");
  }
  const std::size_t n = g.dim();
  QuotientData q;
  q.kernel = kernel_ideal(g);
  q.projection = q.kernel.quotient_projection();
  const auto comp = q.kernel.complement_indices();
  const std::size_t r = comp.size();

  q.section = Matrix(n, r);
  for (std::size_t t = 0; t < r; ++t) q.section(comp[t], t) = 1;

  for (std::size_t b = 0; b < q.kernel.dim(); ++b) {
    const Vector v = q.kernel.basis_vector(b);
    for (std::size_t j = 0; j < n; ++j) {
      Vector ej(n);
      ej[j] = 1;
      if (!is_zero(std::span<const Scalar>(g.bracket(v, ej)))) {
        throw IllDefinedQuotient("kernel element does not annihilate " + g.basis_names[j] +
                                 " from the left");
      }
      if (!is_zero(std::span<const Scalar>(q.projection.apply(g.bracket(ej, v))))) {
        throw IllDefinedQuotient("kernel is not an ideal: [" + g.basis_names[j] + ", g_ann] leaves it");
      }
    }
  }

  std::vector<std::string> names;
  for (auto c : comp) names.push_back(g.basis_names[c]);
  q.quotient = LieAlgebra{std::move(names), Tensor3(r, r, r)};
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      const Vector img = q.projection.apply(g.bracket_basis(comp[k], comp[l]));
      for (std::size_t t = 0; t < r; ++t) q.quotient.structure(k, l, t) = img[t];
    }

  q.action_on_g = Tensor3(r, n, n);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) q.action_on_g(k, j, l) = g.structure(comp[k], j, l);
  return q;
}

Symmetrization symmetrization(const Representation& m) {
  const std::size_t n = m.left_action.dim0(), d = m.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < d; ++a) {
      Vector v(d);
      for (std::size_t b = 0; b < d; ++b) v[b] = m.left_action(i, a, b) + m.right_action(a, i, b);
      gens.push_back(std::move(v));
    }
  Symmetrization s;
  s.anti = Subspace::span(d, gens);
  s.symm_dim = d - s.anti.dim();
  s.projection = s.anti.quotient_projection();
  return s;
}

Representation opposite_representation(const Representation& m) {
  return Representation{m.basis_names, m.right_action.transposed(), m.left_action.transposed()};
}

LieModule left_action_module(const QuotientData& q, const Representation& m) {
  const auto comp = q.kernel.complement_indices();
  const std::size_t d = m.dim();
  LieModule out{m.basis_names, Tensor3(comp.size(), d, d)};
  for (std::size_t k = 0; k < comp.size(); ++k)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) out.action(k, a, b) = m.left_action(comp[k], a, b);
  return out;
}

}  // namespace leibhom
