#include "leibhom/homology/loday.hpp"

namespace leibhom {

std::size_t Coefficients::dim() const {
  switch (kind) {
    case Kind::trivial: return 1;
    case Kind::lie_module: return module.dim();
    case Kind::representation: return rep.dim();
  }
  return 0;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void decode(std::size_t idx, std::size_t base, std::vector<std::size_t>& out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = idx % base;
    idx /= base;
  }
}

// Coefficient actions as dense matrices: act[x](b, a) = coefficient of f_b.
struct Actions {
  std::vector<Matrix> left;   // [x, m]
  std::vector<Matrix> right;  // [m, x]
};

Actions actions(const LeibnizAlgebra& g, const Coefficients& m) {
  const std::size_t n = g.dim(), d = m.dim();
  Actions out{std::vector<Matrix>(n, Matrix(d, d)), std::vector<Matrix>(n, Matrix(d, d))};
  switch (m.kind) {
    case Coefficients::Kind::trivial: break;
    case Coefficients::Kind::lie_module: {
      const QuotientData q = lie_quotient(g);
      const Representation r = lift_lie_module(q, m.module);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) {
            out.left[x](b, a) = r.left_action(x, a, b);
            out.right[x](b, a) = r.right_action(a, x, b);
          }
      break;
    }
    case Coefficients::Kind::representation:
      if (m.rep.left_action.dim0() != n || m.rep.right_action.dim1() != n)
        throw ShapeMismatch("representation does not match the algebra");
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) {
            out.left[x](b, a) = m.rep.left_action(x, a, b);
            out.right[x](b, a) = m.rep.right_action(a, x, b);
          }
      break;
  }
  return out;
}

std::vector<std::string> labels_for(const LeibnizAlgebra& g, const Coefficients& m, std::size_t n, bool cochain) {
  const std::size_t k = g.dim(), d = m.dim(), words = ipow(k, n);
  std::vector<std::string> out;
  out.reserve(d * words);
  std::vector<std::size_t> w(n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t idx = 0; idx < words; ++idx) {
      decode(idx, k, w);
      std::string s;
      if (m.kind != Coefficients::Kind::trivial) {
        const auto& names = m.kind == Coefficients::Kind::lie_module ? m.module.basis_names : m.rep.basis_names;
        s = names[a];
      } else {
        s = "1";
      }
      std::string word;
      for (std::size_t p = 0; p < n; ++p) word += (p ? "|" : "") + g.basis_names[w[p]];
      if (cochain) s = "(" + (n ? word : std::string("1")) + " -> " + s + ")";
      else if (n) s += "|" + word;
      out.push_back(std::move(s));
    }
  return out;
}

void fill_complex_meta(ChainComplex& c, const LeibnizAlgebra& g, const Coefficients& m, std::size_t n_max,
                       bool labels, bool cochain) {
  c.offset = 0;
  c.direction = cochain ? Direction::cochain : Direction::chain;
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    c.dims.push_back(m.dim() * ipow(g.dim(), n));
    if (labels) c.labels.push_back(labels_for(g, m, n, cochain));
  }
  c.top_exact = static_cast<int>(n_max);
}

}  // namespace

ChainComplex loday_chain(const LeibnizAlgebra& g, const Coefficients& m, std::size_t n_max, const LodayOptions& opts) {
  const std::size_t k = g.dim(), d = m.dim();
  const Actions act = actions(g, m);
  // the [m, x_j] operator used for each j
  auto right_term = [&](std::size_t x, bool first) -> Matrix {
    if (m.kind != Coefficients::Kind::representation) return act.right[x];
    switch (opts.chain_rule) {
      case RepChainRule::left_only: return -act.left[x];
      case RepChainRule::right_action: return act.right[x];
      case RepChainRule::symmetrized_j1: return first ? act.right[x] + act.left[x] : act.right[x];
    }
    return act.right[x];
  };
  std::vector<std::vector<Matrix>> rt(2);
  for (std::size_t x = 0; x < k; ++x) {
    rt[0].push_back(right_term(x, false));
    rt[1].push_back(right_term(x, true));
  }

  ChainComplex c;
  fill_complex_meta(c, g, m, n_max, opts.labels, false);
  for (std::size_t n = 1; n <= n_max + 1; ++n) {
    const std::size_t src_words = ipow(k, n), dst_words = ipow(k, n - 1);
    Matrix dn(d * dst_words, d * src_words);
    std::vector<std::size_t> x(n), y(n - 1);
    for (std::size_t idx = 0; idx < src_words; ++idx) {
      decode(idx, k, x);
      // sum_{i<j} (-1)^j m (x) x1 .. [x_j, x_i] .. ^x_j .. xn   (1-based)
      for (std::size_t j = 2; j <= n; ++j)
        for (std::size_t i = 1; i < j; ++i) {
          const int sign = (j % 2 == 0) ? 1 : -1;
          for (std::size_t t = 0; t < k; ++t) {
            const Scalar& c0 = g.structure(x[j - 1], x[i - 1], t);
            if (is_zero(c0)) continue;
            std::size_t q = 0;
            for (std::size_t p = 1; p <= n; ++p) {
              if (p == j) continue;
              y[q++] = (p == i) ? t : x[p - 1];
            }
            std::size_t out = 0;
            for (auto l : y) out = out * k + l;
            for (std::size_t a = 0; a < d; ++a) dn(a * dst_words + out, a * src_words + idx) += sign * c0;
          }
        }
      // sum_j (-1)^{j+1} [m, x_j] (x) x1 .. ^x_j .. xn
      for (std::size_t j = 1; j <= n; ++j) {
        const Matrix& r = rt[j == 1 ? 1 : 0][x[j - 1]];
        if (r.is_zero()) continue;
        const int sign = (j % 2 == 1) ? 1 : -1;
        std::size_t out = 0;
        for (std::size_t p = 1; p <= n; ++p)
          if (p != j) out = out * k + x[p - 1];
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            if (!is_zero(r(b, a))) dn(b * dst_words + out, a * src_words + idx) += sign * r(b, a);
      }
    }
    c.diffs.push_back(std::move(dn));
  }
  verify(c);
  return c;
}

ChainComplex loday_cochain(const LeibnizAlgebra& g, const Coefficients& m, std::size_t n_max,
                           const LodayOptions& opts) {
  const std::size_t k = g.dim(), d = m.dim();
  const Actions act = actions(g, m);
  // the [x_j, f] operator used for each j
  std::vector<std::vector<Matrix>> lt(2);
  for (std::size_t x = 0; x < k; ++x) {
    Matrix plain = act.left[x];
    Matrix first = plain;
    if (m.kind == Coefficients::Kind::representation) {
      switch (opts.cochain_rule) {
        case RepCochainRule::corrected: first = -act.right[x]; break;
        case RepCochainRule::added: first = plain + act.right[x]; break;
        case RepCochainRule::uncorrected: break;
      }
    }
    lt[0].push_back(std::move(plain));
    lt[1].push_back(std::move(first));
  }

  ChainComplex c;
  fill_complex_meta(c, g, m, n_max, opts.labels, true);
  // (df)(x1..x_{n+1}) = sum_{i<j} (-1)^j f(.. [x_j,x_i] .. ^x_j ..) + sum_j (-1)^{j+1} [x_j, f(.. ^x_j ..)]
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t src_words = ipow(k, n), dst_words = ipow(k, n + 1);
    Matrix dn(d * dst_words, d * src_words);
    std::vector<std::size_t> x(n + 1), y(n);
    for (std::size_t idx = 0; idx < dst_words; ++idx) {
      decode(idx, k, x);
      for (std::size_t j = 2; j <= n + 1; ++j)
        for (std::size_t i = 1; i < j; ++i) {
          const int sign = (j % 2 == 0) ? 1 : -1;
          for (std::size_t t = 0; t < k; ++t) {
            const Scalar& c0 = g.structure(x[j - 1], x[i - 1], t);
            if (is_zero(c0)) continue;
            std::size_t q = 0;
            for (std::size_t p = 1; p <= n + 1; ++p) {
              if (p == j) continue;
              y[q++] = (p == i) ? t : x[p - 1];
            }
            std::size_t in = 0;
            for (auto l : y) in = in * k + l;
            for (std::size_t b = 0; b < d; ++b) dn(b * dst_words + idx, b * src_words + in) += sign * c0;
          }
        }
      for (std::size_t j = 1; j <= n + 1; ++j) {
        const Matrix& l = lt[j == 1 ? 1 : 0][x[j - 1]];
        if (l.is_zero()) continue;
        const int sign = (j % 2 == 1) ? 1 : -1;
        std::size_t in = 0;
        for (std::size_t p = 1; p <= n + 1; ++p)
          if (p != j) in = in * k + x[p - 1];
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            if (!is_zero(l(b, a))) dn(b * dst_words + idx, a * src_words + in) += sign * l(b, a);
      }
    }
    c.diffs.push_back(std::move(dn));
  }
  verify(c);
  return c;
}

}  // namespace leibhom
