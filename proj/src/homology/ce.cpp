#include "leibhom/homology/ce.hpp"

#include <algorithm>
#include <functional>

namespace leibhom {

namespace {

void require_lie_coefficients(const Coefficients& m, std::size_t g_lie_dim) {
  if (m.kind == Coefficients::Kind::representation)
    throw IllDefinedAction("CE complexes take trivial or Lie-module coefficients");
  if (m.kind == Coefficients::Kind::lie_module && m.module.action.dim0() != g_lie_dim)
    throw ShapeMismatch("Lie-module coefficients do not match g_Lie");
}

// action(k, a, b) for module coefficients, zero for trivial.
Scalar act(const Coefficients& m, std::size_t k, std::size_t a, std::size_t b) {
  if (m.kind != Coefficients::Kind::lie_module) return 0;
  return m.module.action(k, a, b);
}

std::vector<std::string> coefficient_names(const Coefficients& m) {
  if (m.kind == Coefficients::Kind::lie_module) return m.module.basis_names;
  return {"1"};
}

std::string monomial_name(const PBWAlgebra& U, const Monomial& w) {
  if (w.empty()) return "1";
  const auto& names = U.underlying().basis_names;
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const int p = U.degree(w[k]);
    if (k) s += (p == 1 && U.degree(w[k - 1]) == 1) ? "^" : ".";
    s += names.at(p).at(U.local_index(w[k]));
  }
  return s;
}

// Split a normal monomial into an optional single degree-0 prefix and the rest.
std::pair<std::optional<std::size_t>, Monomial> fold_prefix(const PBWAlgebra& U, const Monomial& w) {
  std::size_t zeros = 0;
  while (zeros < w.size() && U.degree(w[zeros]) == 0) ++zeros;
  if (zeros > 1) throw ShapeMismatch("CE differential produced more than one degree-0 letter");
  if (zeros == 0) return {std::nullopt, w};
  return {U.local_index(w[0]), Monomial(w.begin() + 1, w.end())};
}

struct CESetup {
  LeibnizAlgebra g;
  DGLieAlgebra M;
  PBWAlgebra U;
  CEBasis basis;
  CESetup(const LeibnizAlgebra& g_, std::size_t n_max)
      : g(g_), M(minimal_envelope(g_)), U(M), basis(ce_basis(U, n_max + 1)) {}
};

void fill_meta(ChainComplex& c, const CESetup& s, const Coefficients& m, std::size_t n_max, Direction dir) {
  c.offset = 0;
  c.direction = dir;
  const auto names = coefficient_names(m);
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    c.dims.push_back(names.size() * s.basis.monomials[n].size());
    std::vector<std::string> labels;
    for (const auto& a : names)
      for (const auto& w : s.basis.monomials[n])
        labels.push_back(dir == Direction::chain ? a + "|" + monomial_name(s.U, w)
                                                 : "(" + monomial_name(s.U, w) + " -> " + a + ")");
    c.labels.push_back(std::move(labels));
  }
  c.top_exact = static_cast<int>(n_max);
}

}  // namespace

CEBasis ce_basis(const PBWAlgebra& U, std::size_t n_max) {
  const DGLieAlgebra& M = U.underlying();
  const std::size_t n1 = M.dim(1), n2 = M.dim(2);
  CEBasis out;
  out.monomials.resize(n_max + 1);
  out.index.resize(n_max + 1);
  for (std::size_t t = 0; 2 * t <= n_max; ++t) {
    // multisets of size t from the ann letters
    std::vector<Monomial> multisets;
    Monomial cur;
    std::function<void(std::size_t)> rec_t = [&](std::size_t start) {
      if (cur.size() == t) {
        multisets.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n2; ++i) {
        cur.push_back(U.letter(2, i));
        rec_t(i);
        cur.pop_back();
      }
    };
    rec_t(0);
    for (std::size_t s = 0; s + 2 * t <= n_max; ++s) {
      const std::size_t n = s + 2 * t;
      std::vector<Monomial> subsets;
      Monomial sub;
      std::function<void(std::size_t)> rec_s = [&](std::size_t start) {
        if (sub.size() == s) {
          subsets.push_back(sub);
          return;
        }
        for (std::size_t i = start; i < n1; ++i) {
          sub.push_back(U.letter(1, i));
          rec_s(i + 1);
          sub.pop_back();
        }
      };
      rec_s(0);
      for (const auto& S : subsets)
        for (const auto& T : multisets) {
          Monomial w = S;
          w.insert(w.end(), T.begin(), T.end());
          out.index[n][w] = out.monomials[n].size();
          out.monomials[n].push_back(std::move(w));
        }
    }
  }
  return out;
}

ChainComplex ce_chain(const LeibnizAlgebra& g, const Coefficients& m, std::size_t n_max) {
  const CESetup s(g, n_max);
  require_lie_coefficients(m, s.M.dim(0));
  const std::size_t d = m.dim();
  ChainComplex c;
  fill_meta(c, s, m, n_max, Direction::chain);
  for (std::size_t n = 1; n <= n_max + 1; ++n) {
    const auto& src = s.basis.monomials[n];
    const auto& dst_index = s.basis.index[n - 1];
    const std::size_t ns = src.size(), nd = s.basis.monomials[n - 1].size();
    Matrix dn(d * nd, d * ns);
    for (std::size_t col = 0; col < ns; ++col) {
      for (const auto& [u, coeff] : s.U.differential(src[col])) {
        const auto [xi, rest] = fold_prefix(s.U, u);
        const std::size_t row = dst_index.at(rest);
        for (std::size_t a = 0; a < d; ++a) {
          if (!xi) {
            dn(a * nd + row, a * ns + col) += coeff;
            continue;
          }
          // m (x) xi w  ->  (-xi . m) (x) w
          for (std::size_t b = 0; b < d; ++b) {
            const Scalar v = act(m, *xi, a, b);
            if (!is_zero(v)) dn(b * nd + row, a * ns + col) -= coeff * v;
          }
        }
      }
    }
    c.diffs.push_back(std::move(dn));
  }
  verify(c);
  return c;
}

ChainComplex ce_cochain(const LeibnizAlgebra& g, const Coefficients& m, std::size_t n_max) {
  const CESetup s(g, n_max);
  require_lie_coefficients(m, s.M.dim(0));
  const std::size_t d = m.dim();
  ChainComplex c;
  fill_meta(c, s, m, n_max, Direction::cochain);
  // (dF)(w) = F(dw), with xi w' evaluated as xi . F(w')
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto& tgt = s.basis.monomials[n + 1];
    const auto& src_index = s.basis.index[n];
    const std::size_t nt = tgt.size(), ns = s.basis.monomials[n].size();
    Matrix dn(d * nt, d * ns);
    for (std::size_t w = 0; w < nt; ++w) {
      for (const auto& [u, coeff] : s.U.differential(tgt[w])) {
        const auto [xi, rest] = fold_prefix(s.U, u);
        const std::size_t col = src_index.at(rest);
        for (std::size_t b = 0; b < d; ++b) {
          if (!xi) {
            dn(b * nt + w, b * ns + col) += coeff;
            continue;
          }
          for (std::size_t a = 0; a < d; ++a) {
            const Scalar v = act(m, *xi, a, b);
            if (!is_zero(v)) dn(b * nt + w, a * ns + col) += coeff * v;
          }
        }
      }
    }
    c.diffs.push_back(std::move(dn));
  }
  verify(c);
  return c;
}

ChainComplex classical_ce(const LieAlgebra& h, const Coefficients& m, std::size_t n_max, Direction variant) {
  if (m.kind == Coefficients::Kind::representation)
    throw IllDefinedAction("classical_ce takes trivial or module coefficients");
  if (m.kind == Coefficients::Kind::lie_module && m.module.action.dim0() != h.dim())
    throw ShapeMismatch("module does not match the Lie algebra");
  const std::size_t k = h.dim(), d = m.dim();

  std::vector<std::vector<std::vector<std::size_t>>> subsets(n_max + 2);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(n_max + 2);
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (cur.size() == n) {
        index[n][cur] = subsets[n].size();
        subsets[n].push_back(cur);
        return;
      }
      for (std::size_t i = start; i < k; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }

  ChainComplex c;
  c.direction = variant;
  const auto names = coefficient_names(m);
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    c.dims.push_back(d * subsets[n].size());
    std::vector<std::string> labels;
    for (const auto& a : names)
      for (const auto& s : subsets[n]) {
        std::string w;
        for (std::size_t p = 0; p < s.size(); ++p) w += (p ? "^" : "") + h.basis_names[s[p]];
        if (w.empty()) w = "1";
        labels.push_back(variant == Direction::chain ? a + "|" + w : "(" + w + " -> " + a + ")");
      }
    c.labels.push_back(std::move(labels));
  }
  c.top_exact = static_cast<int>(n_max);

  // t ^ rest, sorted: returns (sign, index) or nullopt when t is repeated
  auto wedge_front = [&](std::size_t t, const std::vector<std::size_t>& rest)
      -> std::optional<std::pair<int, std::size_t>> {
    if (std::find(rest.begin(), rest.end(), t) != rest.end()) return std::nullopt;
    std::size_t below = 0;
    std::vector<std::size_t> w = rest;
    for (auto r : rest) below += (r < t);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(below), t);
    return std::make_pair((below % 2 == 0) ? 1 : -1, index[w.size()].at(w));
  };

  for (std::size_t n = 1; n <= n_max + 1; ++n) {
    const std::size_t nh = subsets[n].size(), nl = subsets[n - 1].size();
    // chain: C_n -> C_{n-1} (rows nl); cochain: C^{n-1} -> C^n (rows nh)
    Matrix dn = variant == Direction::chain ? Matrix(d * nl, d * nh) : Matrix(d * nh, d * nl);
    auto add = [&](std::size_t a_hi, std::size_t hi, std::size_t a_lo, std::size_t lo, const Scalar& v) {
      if (variant == Direction::chain) dn(a_lo * nl + lo, a_hi * nh + hi) += v;
      else dn(a_hi * nh + hi, a_lo * nl + lo) += v;
    };
    for (std::size_t col = 0; col < nh; ++col) {
      const auto& x = subsets[n][col];
      // action terms, (-1)^{i+1} with 1-based i
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> rest = x;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        const std::size_t lo = index[n - 1].at(rest);
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) {
            const Scalar v = act(m, x[i], a, b);
            if (is_zero(v)) continue;
            if (variant == Direction::chain) add(a, col, b, lo, -sign * v);  // m . x = -x . m
            else add(b, col, a, lo, sign * v);
          }
      }
      // bracket terms, (-1)^{i+j} with 1-based i < j
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          for (std::size_t t = 0; t < k; ++t) {
            const Scalar& v = h.structure(x[i], x[j], t);
            if (is_zero(v)) continue;
            std::vector<std::size_t> rest;
            for (std::size_t p = 0; p < n; ++p)
              if (p != i && p != j) rest.push_back(x[p]);
            const auto placed = wedge_front(t, rest);
            if (!placed) continue;
            const int sign = ((i + j) % 2 == 0) ? 1 : -1;
            for (std::size_t a = 0; a < d; ++a) add(a, col, a, placed->second, sign * placed->first * v);
          }
    }
    c.diffs.push_back(std::move(dn));
  }
  verify(c);
  return c;
}

CEProjection ce_projection(const LeibnizAlgebra& g, const Coefficients& m, std::size_t n_max) {
  const CESetup s(g, n_max);
  require_lie_coefficients(m, s.M.dim(0));
  const std::size_t k = g.dim(), d = m.dim();
  LodayOptions lopts;
  lopts.labels = false;
  const ChainComplex lc = loday_chain(g, m, n_max, lopts);
  const ChainComplex lcc = loday_cochain(g, m, n_max, lopts);
  const ChainComplex cc = ce_chain(g, m, n_max);
  const ChainComplex ccc = ce_cochain(g, m, n_max);

  CEProjection out;
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    std::size_t words = 1;
    for (std::size_t p = 0; p < n; ++p) words *= k;
    const std::size_t nm = s.basis.monomials[n].size();
    Matrix P(d * nm, d * words), Q(d * words, d * nm);
    Monomial w(n);
    for (std::size_t idx = 0; idx < words; ++idx) {
      std::size_t rem = idx;
      for (std::size_t p = n; p-- > 0;) {
        w[p] = s.U.letter(1, rem % k);
        rem /= k;
      }
      for (const auto& [u, coeff] : s.U.normal_form(w)) {
        const auto [xi, rest] = fold_prefix(s.U, u);
        const std::size_t mono = s.basis.index[n].at(rest);
        for (std::size_t a = 0; a < d; ++a) {
          if (!xi) {
            P(a * nm + mono, a * words + idx) += coeff;
            Q(a * words + idx, a * nm + mono) += coeff;
            continue;
          }
          for (std::size_t b = 0; b < d; ++b) {
            const Scalar v = act(m, *xi, a, b);
            if (is_zero(v)) continue;
            P(b * nm + mono, a * words + idx) -= coeff * v;
            Q(b * words + idx, a * nm + mono) += coeff * v;
          }
        }
      }
    }
    out.chain_map.push_back(std::move(P));
    out.cochain_map.push_back(std::move(Q));
  }

  for (std::size_t n = 1; n <= n_max + 1; ++n)
    if (!(out.chain_map[n - 1] * lc.diffs[n - 1] == cc.diffs[n - 1] * out.chain_map[n]))
      throw NotAChainMap("ce_projection: chain map fails to commute in degree " + std::to_string(n));
  for (std::size_t n = 0; n <= n_max; ++n)
    if (!(out.cochain_map[n + 1] * ccc.diffs[n] == lcc.diffs[n] * out.cochain_map[n]))
      throw NotAChainMap("ce_projection: cochain map fails to commute in degree " + std::to_string(n));

  ComparisonReport& r = out.report;
  r.loday_homology = betti(lc);
  r.ce_homology = betti(cc);
  r.loday_cohomology = betti(lcc);
  r.ce_cohomology = betti(ccc);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const int deg = static_cast<int>(n);
    r.homology_maps.push_back(induced_map(lc, cc, out.chain_map[n], deg));
    r.cohomology_maps.push_back(induced_map(ccc, lcc, out.cochain_map[n], deg));
    r.homology_ranks.push_back(rank(r.homology_maps.back()));
    r.cohomology_ranks.push_back(rank(r.cohomology_maps.back()));
  }
  auto iso = [&](std::size_t n) {
    return r.homology_ranks[n] == r.loday_homology[n] && r.homology_ranks[n] == r.ce_homology[n] &&
           r.cohomology_ranks[n] == r.loday_cohomology[n] && r.cohomology_ranks[n] == r.ce_cohomology[n];
  };
  r.iso_degree0 = iso(0);
  r.iso_degree1 = n_max >= 1 && iso(1);
  r.surjective_h2 = n_max >= 2 && r.homology_ranks[2] == r.ce_homology[2];
  r.injective_h2 = n_max >= 2 && r.cohomology_ranks[2] == r.ce_cohomology[2];
  return out;
}

}  // namespace leibhom
