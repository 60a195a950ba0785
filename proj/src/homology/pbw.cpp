#include "leibhom/homology/pbw.hpp"

namespace leibhom {

void add_scaled(UElement& acc, const UElement& x, const Scalar& c) {
  if (is_zero(c)) return;
  for (const auto& [w, v] : x) {
    auto [it, inserted] = acc.try_emplace(w, 0);
    it->second += c * v;
    if (is_zero(it->second)) acc.erase(it);
  }
}

PBWAlgebra::PBWAlgebra(const DGLieAlgebra& L) : L_(L) {
  for (auto [p, n] : L.dims) {
    if (n == 0) continue;
    if (p < 0) throw ShapeMismatch("PBWAlgebra: negative degrees are not supported");
    first_[p] = degree_.size();
    for (std::size_t i = 0; i < n; ++i) {
      degree_.push_back(p);
      local_.push_back(i);
    }
  }
}

std::size_t PBWAlgebra::letter(int p, std::size_t i) const { return first_.at(p) + i; }

bool PBWAlgebra::is_normal(const Monomial& w) const {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] > w[k + 1]) return false;
    if (w[k] == w[k + 1] && degree_[w[k]] % 2 != 0) return false;
  }
  return true;
}

UElement PBWAlgebra::bracket(std::size_t a, std::size_t b) const {
  const int p = degree_[a], q = degree_[b];
  UElement out;
  if (L_.dim(p + q) == 0) return out;
  const Vector v = L_.bracket_basis(p, local_[a], q, local_[b]);
  for (std::size_t t = 0; t < v.size(); ++t)
    if (!is_zero(v[t])) out[{letter(p + q, t)}] = v[t];
  return out;
}

UElement PBWAlgebra::normal_form(const Monomial& w, RewriteStrategy s) const {
  if (is_normal(w)) return {{w, Scalar(1)}};
  auto& memo = memo_[s == RewriteStrategy::leftmost ? 0 : 1];
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  UElement out = rewrite(w, s);
  memo.emplace(w, out);
  return out;
}

UElement PBWAlgebra::normal_form(const UElement& x, RewriteStrategy s) const {
  UElement out;
  for (const auto& [w, c] : x) add_scaled(out, normal_form(w, s), c);
  return out;
}

UElement PBWAlgebra::rewrite(const Monomial& w, RewriteStrategy s) const {
  std::size_t pos = w.size();
  auto violates = [&](std::size_t k) {
    return w[k] > w[k + 1] || (w[k] == w[k + 1] && degree_[w[k]] % 2 != 0);
  };
  if (s == RewriteStrategy::leftmost) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (violates(k)) {
        pos = k;
        break;
      }
  } else {
    for (std::size_t k = w.size() - 1; k-- > 0;)
      if (violates(k)) {
        pos = k;
        break;
      }
  }
  const std::size_t a = w[pos], b = w[pos + 1];
  UElement out;
  auto splice = [&](const Monomial& middle, const Scalar& c) {
    Monomial m(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    m.insert(m.end(), middle.begin(), middle.end());
    m.insert(m.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
    add_scaled(out, normal_form(m, s), c);
  };
  if (a == b) {
    for (const auto& [l, c] : bracket(a, b)) splice(l, c / 2);
  } else {
    splice({b, a}, ((degree_[a] * degree_[b]) % 2 == 0) ? 1 : -1);
    for (const auto& [l, c] : bracket(a, b)) splice(l, c);
  }
  return out;
}

UElement PBWAlgebra::differential(const Monomial& w) const {
  UElement out;
  int prefix_degree = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int p = degree_[w[i]];
    if (p > 0 && L_.dim(p - 1) > 0) {
      Vector e(L_.dim(p));
      e[local_[w[i]]] = 1;
      const Vector dv = L_.d(p, e);
      const int sign = (prefix_degree % 2 == 0) ? 1 : -1;
      for (std::size_t t = 0; t < dv.size(); ++t) {
        if (is_zero(dv[t])) continue;
        Monomial m = w;
        m[i] = letter(p - 1, t);
        add_scaled(out, normal_form(m), sign * dv[t]);
      }
    }
    prefix_degree += p;
  }
  return out;
}

}  // namespace leibhom
