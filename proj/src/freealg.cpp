#include "leibhom/freealg.hpp"

#include <gmpxx.h>

namespace leibhom {

TensorElement letter(std::size_t i) { return {{TensorWord{{i}}, Scalar(1)}}; }

void add_scaled(TensorElement& acc, const TensorElement& x, const Scalar& c) {
  if (is_zero(c)) return;
  for (const auto& [w, v] : x) {
    auto [it, inserted] = acc.try_emplace(w, 0);
    it->second += c * v;
    if (is_zero(it->second)) acc.erase(it);
  }
}

TensorElement multiply(const TensorElement& u, const TensorElement& w) {
  TensorElement out;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : w) {
      TensorWord ab = a;
      ab.letters.insert(ab.letters.end(), b.letters.begin(), b.letters.end());
      add_scaled(out, {{std::move(ab), Scalar(1)}}, x * y);
    }
  return out;
}

namespace {

std::size_t degree_of(const TensorElement& u) {
  const std::size_t p = u.begin()->first.weight();
  for (const auto& [w, c] : u)
    if (w.weight() != p) throw ShapeMismatch("graded_commutator: inhomogeneous tensor element");
  return p;
}

}  // namespace

TensorElement graded_commutator(const TensorElement& u, const TensorElement& w) {
  if (u.empty() || w.empty()) return {};
  const std::size_t p = degree_of(u), q = degree_of(w);
  TensorElement out = multiply(u, w);
  add_scaled(out, multiply(w, u), ((p * q) % 2 == 0) ? -1 : 1);
  return out;
}

TensorElement left_normed_commutator(const std::vector<std::size_t>& letters) {
  if (letters.empty()) return {};
  TensorElement c = letter(letters[0]);
  for (std::size_t k = 1; k < letters.size(); ++k) c = graded_commutator(c, letter(letters[k]));
  return c;
}

std::vector<TensorWord> all_words(std::size_t d, std::size_t w) {
  std::vector<TensorWord> out;
  TensorWord cur{std::vector<std::size_t>(w, 0)};
  if (d == 0) return out;
  while (true) {
    out.push_back(cur);
    std::size_t k = w;
    while (k > 0 && cur.letters[k - 1] + 1 == d) cur.letters[--k] = 0;
    if (k == 0) break;
    ++cur.letters[k - 1];
  }
  return out;
}

std::size_t word_rank(const TensorWord& word, std::size_t d) {
  std::size_t r = 0;
  for (std::size_t l : word.letters) r = r * d + l;
  return r;
}

// ---------------------------------------------------------------------------

FreeLeibnizTruncation::FreeLeibnizTruncation(std::size_t generators, std::size_t max_weight)
    : d_(generators), max_weight_(max_weight) {
  for (std::size_t w = 1; w <= max_weight_; ++w) words_[w] = all_words(d_, w);
  for (std::size_t p = 1; p < max_weight_; ++p)
    for (std::size_t q = 1; p + q <= max_weight_; ++q)
      for (const auto& u : words_[p])
        for (const auto& w : words_[q]) compute(u, w);
}

std::vector<std::size_t> FreeLeibnizTruncation::dims() const {
  std::vector<std::size_t> out;
  for (const auto& [w, list] : words_) out.push_back(list.size());
  return out;
}

// [a, v] = a v;  [a, b v] = [[a, b], v] - [[a, v], b]
const TensorElement& FreeLeibnizTruncation::compute(const TensorWord& u, const TensorWord& w) {
  auto key = std::make_pair(u, w);
  if (auto it = table_.find(key); it != table_.end()) return it->second;
  TensorElement out;
  const std::size_t v = w.letters.back();
  if (w.weight() == 1) {
    TensorWord uv = u;
    uv.letters.push_back(v);
    out.emplace(std::move(uv), 1);
  } else {
    TensorWord b{std::vector<std::size_t>(w.letters.begin(), w.letters.end() - 1)};
    const TensorElement ab = compute(u, b);
    for (const auto& [word, c] : ab) {
      TensorWord ext = word;
      ext.letters.push_back(v);
      add_scaled(out, {{std::move(ext), Scalar(1)}}, c);
    }
    TensorWord av = u;
    av.letters.push_back(v);
    add_scaled(out, compute(av, b), -1);
  }
  return table_.emplace(std::move(key), std::move(out)).first->second;
}

const TensorElement& FreeLeibnizTruncation::bracket_right(const TensorWord& u, const TensorWord& w) const {
  if (u.weight() == 0 || w.weight() == 0) throw ShapeMismatch("free Leibniz bracket of the empty word");
  if (u.weight() + w.weight() > max_weight_)
    throw WeightOverflow("bracket weight " + std::to_string(u.weight() + w.weight()) + " exceeds W_max " +
                         std::to_string(max_weight_));
  return table_.at({u, w});
}

TensorElement FreeLeibnizTruncation::bracket(const TensorElement& u, const TensorElement& w) const {
  TensorElement out;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : w) add_scaled(out, bracket(a, b), x * y);
  return out;
}

std::string FreeLeibnizTruncation::word_name(const TensorWord& w) const {
  std::string out;
  for (std::size_t l : w.letters) {
    if (d_ <= 26) {
      out += static_cast<char>('a' + l);
    } else {
      if (!out.empty()) out += '.';
      out += "g" + std::to_string(l + 1);
    }
  }
  return out;
}

LeibnizAlgebra FreeLeibnizTruncation::nilpotent_quotient() const {
  std::vector<std::string> names;
  std::map<TensorWord, std::size_t> index;
  std::vector<TensorWord> basis;
  for (const auto& [w, list] : words_)
    for (const auto& word : list) {
      index[word] = basis.size();
      basis.push_back(word);
      names.push_back(word_name(word));
    }
  LeibnizAlgebra g = make_algebra(std::move(names));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (basis[i].weight() + basis[j].weight() > max_weight_) continue;
      for (const auto& [word, c] : bracket(basis[i], basis[j])) g.structure(i, j, index.at(word)) = c;
    }
  return g;
}

TensorElement free_leibniz_bracket(const TensorWord& u, const TensorWord& w, std::size_t d, std::size_t max_weight) {
  return FreeLeibnizTruncation(d, max_weight).bracket_right(u, w);
}

FreeLeibnizTruncation free_leibniz(std::size_t d, std::size_t max_weight) {
  return FreeLeibnizTruncation(d, max_weight);
}

// ---------------------------------------------------------------------------

GradedLieComponent free_graded_lie_component(std::size_t d, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= d;
  std::vector<Vector> gens;
  for (const auto& seq : all_words(d, n)) {
    Vector v(total);
    for (const auto& [word, c] : left_normed_commutator(seq.letters)) v[word_rank(word, d)] = c;
    gens.push_back(std::move(v));
  }
  return {n, Subspace::span(total, gens)};
}

namespace {

int mobius(std::size_t n) {
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::size_t witt_dim(std::size_t d, std::size_t w) {
  mpz_class sum = 0;
  for (std::size_t e = 1; e <= w; ++e) {
    if (w % e != 0) continue;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), d, w / e);
    sum += mobius(e) * power;
  }
  sum /= static_cast<unsigned long>(w);
  return sum.get_ui();
}

}  // namespace leibhom
