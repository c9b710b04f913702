#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qkac/laurent.hpp"
#include "qkac/ratq.hpp"
#include "qkac/rootdata.hpp"
#include "qkac/series.hpp"

namespace qkac::borel {

using rootdata::CartanDatum;
using rootdata::RootVec;

/// A word in the generators, one byte per letter: letter i is char('0' + i).
/// Lexicographic order on these strings is the order on letter sequences.
using Word = std::string;

/// Finite linear combination of words.
template <class C>
using FreeElement = std::map<Word, C>;

char letter(std::size_t i);
std::size_t letter_index(char c);
Word word_from_indices(const std::vector<std::size_t>& letters);
RootVec content(const Word& w, std::size_t rank);
/// Human readable form with 1-based indices, e.g. "f1f2" for prefix "f".
std::string display_word(const Word& w, const std::string& prefix);

/// Every word of content gamma, in lexicographic order.
std::vector<Word> words_of_content(const RootVec& gamma);

template <class C>
void add_term(FreeElement<C>& x, const Word& w, const C& c) {
  if (c == C{}) return;
  auto [it, inserted] = x.emplace(w, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second == C{}) x.erase(it);
  }
}

/// Row echelon form of the Serre-ideal component at gamma over Z[q, q^-1].
/// Columns are the words of content gamma in lexicographic order; the pivot
/// of each row is its largest word, and rows are kept primitive.
struct SerreSpan {
  RootVec gamma;
  std::vector<Word> words;
  /// pivot column -> row
  std::map<std::size_t, std::vector<LaurentInt>> rows;

  /// True when the coordinate vector lies in the span.
  bool contains(std::vector<LaurentInt> v) const;
};

/**
 * Basis of U^+_gamma (equivalently U^-_{-gamma}) by words, with the normal
 * form map. Basis words are the lexicographically smallest words whose
 * images are independent modulo the Serre ideal.
 */
class WordBasis {
 public:
  explicit WordBasis(std::shared_ptr<const SerreSpan> span);

  const RootVec& gamma() const noexcept { return span_->gamma; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Word>& basis_words() const noexcept { return basis_; }
  const std::vector<Word>& free_words() const noexcept { return span_->words; }
  std::size_t serre_rank() const noexcept { return span_->rows.size(); }
  const SerreSpan& serre_span() const noexcept { return *span_; }
  /// Position of a basis word, or dim() when w is not a basis word.
  std::size_t basis_index(const Word& w) const;

  /// Coordinates of w over basis_words().
  std::vector<RatQ> reduce(const Word& w) const;
  std::vector<RatQ> reduce(const FreeElement<RatQ>& x) const;
  /// True when x lies in the Serre-ideal component.
  bool in_serre_ideal(const FreeElement<RatQ>& x) const;

 private:
  void build_reductions() const;

  std::shared_ptr<const SerreSpan> span_;
  std::vector<Word> basis_;
  std::map<Word, std::size_t> basis_index_;
  mutable std::once_flag reductions_once_;
  /// non-basis word -> coordinates over basis_
  mutable std::map<Word, std::vector<RatQ>> reductions_;
};

/// The Serre element sum_{r+s=1-A[i][j]} (-1)^r e_i^(r) e_j e_i^(s) with
/// divided powers as rational coefficients. Rejects i == j.
FreeElement<RatQ> serre_element(const CartanDatum& datum, std::size_t i, std::size_t j);
/// Same element times [N]!_{q_i}, N = 1 - A[i][j]: integral coefficients.
FreeElement<LaurentInt> serre_element_integral(const CartanDatum& datum, std::size_t i,
                                               std::size_t j);

/// Positive (or negative) half of U up to a height bound, with cached graded
/// components. Thread-safe.
class Borel {
 public:
  Borel(CartanDatum datum, int max_height);

  const CartanDatum& datum() const noexcept { return datum_; }
  int max_height() const noexcept { return max_height_; }

  /// Throws HeightExceeded beyond the bound, InvalidInput outside Q+.
  const WordBasis& component(const RootVec& gamma) const;
  std::size_t dimension(const RootVec& gamma) const { return component(gamma).dim(); }

  /// Computes every component up to `height` (at most max_height), in
  /// parallel within each height slice.
  void precompute(int height) const;

  /// sum_gamma dim U^-_{-gamma} e(-gamma) up to `height`.
  CharSeries dim_series(int height) const;

 private:
  std::shared_ptr<const SerreSpan> build_span(const RootVec& gamma) const;

  CartanDatum datum_;
  int max_height_;
  mutable std::mutex mutex_;
  mutable std::map<RootVec, std::unique_ptr<WordBasis>> cache_;
};

/// r_{i,+}: sum over letters x_k = i of q^{(alpha_i, content after k)} (x without k).
FreeElement<RatQ> r_plus(const CartanDatum& datum, std::size_t i, const FreeElement<RatQ>& x);
/// r'_{i,+}: sum over letters x_k = i of q^{(alpha_i, content before k)} (x without k).
FreeElement<RatQ> r_prime_plus(const CartanDatum& datum, std::size_t i,
                               const FreeElement<RatQ>& x);
/// The analogous maps on f-words: r_{i,-} uses the content before the letter,
/// r'_{i,-} the content after it.
FreeElement<RatQ> r_minus(const CartanDatum& datum, std::size_t i, const FreeElement<RatQ>& y);
FreeElement<RatQ> r_prime_minus(const CartanDatum& datum, std::size_t i,
                                const FreeElement<RatQ>& y);

/// Product in the free algebra.
template <class C>
FreeElement<C> multiply(const FreeElement<C>& a, const FreeElement<C>& b) {
  FreeElement<C> out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) add_term(out, wa + wb, ca * cb);
  }
  return out;
}

template <class C>
FreeElement<C> single(const Word& w, const C& c = C(1)) {
  FreeElement<C> x;
  add_term(x, w, c);
  return x;
}

}  // namespace qkac::borel
