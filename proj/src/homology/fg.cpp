#include "leibhom/homology/fg.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <thread>

namespace leibhom {

namespace {

using Sequence = std::vector<std::size_t>;  // letter indices

// Degree-n part of T(V) restricted to an explicit list of basis sequences.
struct Block {
  std::vector<Sequence> seqs;
  std::map<Sequence, std::size_t> index;

  void add(Sequence s) {
    index.emplace(s, seqs.size());
    seqs.push_back(std::move(s));
  }
};

// Bracket of two letters as a combination of letters.
using LetterBracket = std::function<std::vector<std::pair<std::size_t, Scalar>>(std::size_t, std::size_t)>;

// Loday trivial differential C_n -> C_{n-1} on the listed blocks.
Matrix loday_block_differential(const Block& src, const Block& dst, const LetterBracket& bracket) {
  Matrix d(dst.seqs.size(), src.seqs.size());
  for (std::size_t col = 0; col < src.seqs.size(); ++col) {
    const Sequence& x = src.seqs[col];
    const std::size_t n = x.size();
    for (std::size_t j = 2; j <= n; ++j)
      for (std::size_t i = 1; i < j; ++i) {
        const int sign = (j % 2 == 0) ? 1 : -1;
        for (const auto& [t, c] : bracket(x[j - 1], x[i - 1])) {
          Sequence y;
          for (std::size_t p = 1; p <= n; ++p) {
            if (p == j) continue;
            y.push_back(p == i ? t : x[p - 1]);
          }
          auto it = dst.index.find(y);
          if (it == dst.index.end()) throw ShapeMismatch("differential leaves the weight block");
          d(it->second, col) += sign * c;
        }
      }
  }
  return d;
}

Subspace commutator_span(const Block& b) {
  std::vector<Vector> gens;
  for (const auto& s : b.seqs) {
    Vector v(b.seqs.size());
    for (const auto& [w, c] : left_normed_commutator(s)) {
      auto it = b.index.find(w.letters);
      if (it == b.index.end()) throw ShapeMismatch("commutator leaves the block");
      v[it->second] = c;
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(b.seqs.size(), gens);
}

ChainComplex assemble(const std::vector<Block>& blocks, const LetterBracket& bracket, int top_exact,
                      const std::function<std::string(std::size_t)>& letter_name) {
  // blocks[k] is degree k + 1
  ChainComplex c;
  c.offset = 1;
  c.direction = Direction::chain;
  std::vector<Subspace> F;
  for (const auto& b : blocks) F.push_back(commutator_span(b));
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    c.dims.push_back(F[k].dim());
    std::vector<std::string> labels;
    for (std::size_t t = 0; t < F[k].dim(); ++t) {
      // echelon basis vectors are labelled by their pivot sequence
      std::string s;
      for (auto l : blocks[k].seqs[F[k].pivots()[t]]) s += (s.empty() ? "" : "|") + letter_name(l);
      labels.push_back("F:" + s);
    }
    c.labels.push_back(std::move(labels));
  }
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    const Matrix full = loday_block_differential(blocks[k], blocks[k - 1], bracket);
    c.diffs.push_back(restrict_map(full, F[k], F[k - 1]));
  }
  c.top_exact = top_exact;
  verify(c);
  return c;
}

}  // namespace

std::size_t block_size(std::size_t d, std::size_t n, std::size_t w) {
  // compositions of w into n positive parts, times d^w
  if (n == 0 || n > w) return 0;
  std::size_t binom = 1;
  for (std::size_t i = 1; i < n; ++i) binom = binom * (w - i) / i;
  std::size_t power = 1;
  for (std::size_t i = 0; i < w; ++i) power *= d;
  return binom * power;
}

ChainComplex fg_subcomplex(const LeibnizAlgebra& g, std::size_t n_max) {
  const std::size_t k = g.dim();
  std::vector<Block> blocks(n_max + 1);
  for (std::size_t n = 1; n <= n_max + 1; ++n)
    for (const auto& w : all_words(k, n)) blocks[n - 1].add(w.letters);
  const LetterBracket bracket = [&](std::size_t a, std::size_t b) {
    std::vector<std::pair<std::size_t, Scalar>> out;
    for (std::size_t t = 0; t < k; ++t)
      if (!is_zero(g.structure(a, b, t))) out.emplace_back(t, g.structure(a, b, t));
    return out;
  };
  return assemble(blocks, bracket, static_cast<int>(n_max), [&](std::size_t l) { return g.basis_names[l]; });
}

ChainComplex fg_subcomplex(const FreeLeibnizTruncation& F, std::size_t n_max, std::size_t weight) {
  if (n_max < 1 || n_max > weight || weight > F.max_weight())
    throw ShapeMismatch("fg_subcomplex: need 1 <= n_max <= weight <= W_max");
  // letters = all words of weight <= weight
  std::vector<TensorWord> letters;
  std::map<TensorWord, std::size_t> letter_index;
  std::vector<std::vector<std::size_t>> by_weight(weight + 1);
  for (std::size_t w = 1; w <= weight; ++w)
    for (const auto& word : F.words(w)) {
      letter_index[word] = letters.size();
      by_weight[w].push_back(letters.size());
      letters.push_back(word);
    }
  const std::size_t top = std::min(n_max + 1, weight);
  std::vector<Block> blocks(top);
  for (std::size_t n = 1; n <= top; ++n) {
    // sequences of n letters with weights summing to `weight`, in lexicographic order of weights then words
    Sequence cur;
    std::function<void(std::size_t)> rec = [&](std::size_t remaining) {
      if (cur.size() == n) {
        if (remaining == 0) blocks[n - 1].add(cur);
        return;
      }
      const std::size_t slots_left = n - cur.size() - 1;
      for (std::size_t w = 1; w + slots_left <= remaining; ++w)
        for (std::size_t l : by_weight[w]) {
          cur.push_back(l);
          rec(remaining - w);
          cur.pop_back();
        }
    };
    rec(weight);
  }
  const LetterBracket bracket = [&](std::size_t a, std::size_t b) {
    std::vector<std::pair<std::size_t, Scalar>> out;
    for (const auto& [w, c] : F.bracket(letters[a], letters[b])) out.emplace_back(letter_index.at(w), c);
    return out;
  };
  // With n_max + 1 > weight the block is the whole complex.
  const int top_exact = static_cast<int>(n_max);
  return assemble(blocks, bracket, top_exact, [&](std::size_t l) { return F.word_name(letters[l]); });
}

ConjectureReport conjecture_check(std::size_t d, std::size_t max_weight, unsigned threads) {
  if (d < 1 || d > 3) throw ShapeMismatch("conjecture_check: generator count must be 1, 2 or 3");
  if (max_weight < 1) throw ShapeMismatch("conjecture_check: max weight must be positive");
  for (std::size_t n = 1; n <= max_weight; ++n)
    if (block_size(d, n, max_weight) > kConjectureBlockBudget)
      throw BudgetExceeded("conjecture_check: weight " + std::to_string(max_weight) + " needs a block of " +
                           std::to_string(block_size(d, n, max_weight)) + " columns (budget " +
                           std::to_string(kConjectureBlockBudget) + ")");

  const FreeLeibnizTruncation F(d, max_weight);
  ConjectureReport report;
  report.generators = d;
  report.max_weight = max_weight;
  report.rows.resize(max_weight);

  auto evaluate = [&](std::size_t w) {
    WeightRow row;
    row.weight = w;
    const ChainComplex c = fg_subcomplex(F, w, w);
    row.homology = betti(c);
    row.witt = witt_dim(d, w);
    for (std::size_t n = 1; n <= w; ++n) row.largest_block = std::max(row.largest_block, block_size(d, n, w));
    row.vanishing = true;
    for (std::size_t n = 2; n <= row.homology.size(); ++n) row.vanishing = row.vanishing && row.homology[n - 1] == 0;
    row.h1_matches = !row.homology.empty() && row.homology[0] == row.witt;
    return row;
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(max_weight)));
  if (workers == 1) {
    for (std::size_t w = 1; w <= max_weight; ++w) report.rows[w - 1] = evaluate(w);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    // heaviest weights first
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = next++; i < max_weight; i = next++) {
            const std::size_t w = max_weight - i;
            report.rows[w - 1] = evaluate(w);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  bool vanish = true, h1 = true;
  for (const auto& r : report.rows) {
    vanish = vanish && r.vanishing;
    h1 = h1 && r.h1_matches;
  }
  report.verdict = !vanish ? "FALSIFICATION" : (!h1 ? "H1_MISMATCH" : "PASS");
  return report;
}

}  // namespace leibhom
