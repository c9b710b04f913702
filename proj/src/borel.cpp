#include "qkac/borel.hpp"

#include <algorithm>

#include "qkac/error.hpp"
#include "qkac/parallel.hpp"
#include "qkac/qarith.hpp"

namespace qkac::borel {

char letter(std::size_t i) {
  if (i >= 64) throw InvalidInput("rank too large for the word encoding");
  return static_cast<char>('0' + i);
}

std::size_t letter_index(char c) { return static_cast<std::size_t>(c - '0'); }

Word word_from_indices(const std::vector<std::size_t>& letters) {
  Word w;
  for (auto i : letters) w.push_back(letter(i));
  return w;
}

RootVec content(const Word& w, std::size_t rank) {
  RootVec c = RootVec::zero(rank);
  for (char ch : w) c[letter_index(ch)] += 1;
  return c;
}

std::string display_word(const Word& w, const std::string& prefix) {
  if (w.empty()) return "1";
  std::string out;
  for (char ch : w) out += prefix + std::to_string(letter_index(ch) + 1);
  return out;
}

std::vector<Word> words_of_content(const RootVec& gamma) {
  Word w;
  for (std::size_t i = 0; i < gamma.rank(); ++i) {
    if (gamma[i] < 0) throw InvalidInput("content outside Q+: " + gamma.to_string());
    w.append(static_cast<std::size_t>(gamma[i]), letter(i));
  }
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// --- Serre span -----------------------------------------------------------------

namespace {

std::size_t top_column(const std::vector<LaurentInt>& v) {
  for (std::size_t c = v.size(); c-- > 0;) {
    if (!v[c].is_zero()) return c;
  }
  return v.size();
}

/// Divides out the common factor of all entries, units included.
void make_primitive(std::vector<LaurentInt>& v) {
  LaurentInt g;
  std::int64_t low = 0;
  bool first = true;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (first) {
      low = x.low_degree();
      g = x.stripped();
      first = false;
    } else {
      low = std::min(low, x.low_degree());
      if (!g.is_one()) g = gcd(g, x);
    }
  }
  if (first) return;
  if (sgn(g.leading_coefficient()) < 0) g = -g;
  g = g.stripped();
  const bool divide = !g.is_one();
  for (auto& x : v) {
    if (x.is_zero()) continue;
    if (divide) x = x.divide_exact(g);
    if (low != 0) x = x.shifted(-low);
  }
}

/// Reduces v against the echelon rows; returns the column where it stopped
/// (v.size() when v reduced to zero).
std::size_t reduce_row(const std::map<std::size_t, std::vector<LaurentInt>>& rows,
                       std::vector<LaurentInt>& v) {
  for (;;) {
    const std::size_t c = top_column(v);
    if (c == v.size()) return c;
    auto it = rows.find(c);
    if (it == rows.end()) return c;
    const auto& e = it->second;
    const LaurentInt a = e[c];
    const LaurentInt b = v[c];
    for (std::size_t k = 0; k < c; ++k) {
      if (e[k].is_zero()) {
        if (!v[k].is_zero()) v[k] *= a;
      } else {
        v[k] = v[k] * a - b * e[k];
      }
    }
    v[c] = LaurentInt();
    make_primitive(v);
  }
}

}  // namespace

bool SerreSpan::contains(std::vector<LaurentInt> v) const {
  if (v.size() != words.size()) throw InvalidInput("vector length does not match the component");
  return reduce_row(rows, v) == v.size();
}

// --- WordBasis --------------------------------------------------------------------

WordBasis::WordBasis(std::shared_ptr<const SerreSpan> span) : span_(std::move(span)) {
  for (std::size_t c = 0; c < span_->words.size(); ++c) {
    if (span_->rows.count(c)) continue;
    basis_index_.emplace(span_->words[c], basis_.size());
    basis_.push_back(span_->words[c]);
  }
}

std::size_t WordBasis::basis_index(const Word& w) const {
  auto it = basis_index_.find(w);
  return it == basis_index_.end() ? basis_.size() : it->second;
}

void WordBasis::build_reductions() const {
  const auto& words = span_->words;
  // Reduced echelon form over Q(q), built in ascending pivot order.
  std::map<std::size_t, std::vector<RatQ>> done;
  for (const auto& [pivot, laurent_row] : span_->rows) {
    std::vector<RatQ> row(laurent_row.begin(), laurent_row.end());
    for (const auto& [p, prev] : done) {
      if (row[p].is_zero()) continue;
      const RatQ factor = row[p];
      for (std::size_t k = 0; k <= p; ++k) {
        if (!prev[k].is_zero()) row[k] -= factor * prev[k];
      }
    }
    const RatQ inv = row[pivot].inverse();
    for (std::size_t k = 0; k <= pivot; ++k) {
      if (!row[k].is_zero()) row[k] *= inv;
    }
    done.emplace(pivot, std::move(row));
  }
  for (const auto& [pivot, row] : done) {
    std::vector<RatQ> coords(basis_.size());
    for (std::size_t k = 0; k < pivot; ++k) {
      if (row[k].is_zero()) continue;
      coords[basis_index_.at(words[k])] = -row[k];
    }
    reductions_.emplace(words[pivot], std::move(coords));
  }
}

std::vector<RatQ> WordBasis::reduce(const Word& w) const {
  std::vector<RatQ> out(basis_.size());
  auto it = basis_index_.find(w);
  if (it != basis_index_.end()) {
    out[it->second] = RatQ(1);
    return out;
  }
  std::call_once(reductions_once_, [this] { build_reductions(); });
  auto r = reductions_.find(w);
  if (r == reductions_.end()) {
    throw InvalidInput("word of the wrong content for component " + gamma().to_string());
  }
  return r->second;
}

std::vector<RatQ> WordBasis::reduce(const FreeElement<RatQ>& x) const {
  std::vector<RatQ> out(basis_.size());
  for (const auto& [w, c] : x) {
    auto it = basis_index_.find(w);
    if (it != basis_index_.end()) {
      out[it->second] += c;
      continue;
    }
    const auto coords = reduce(w);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (!coords[k].is_zero()) out[k] += c * coords[k];
    }
  }
  return out;
}

bool WordBasis::in_serre_ideal(const FreeElement<RatQ>& x) const {
  const auto coords = reduce(x);
  return std::all_of(coords.begin(), coords.end(), [](const RatQ& c) { return c.is_zero(); });
}

// --- Serre elements ---------------------------------------------------------------

namespace {
void check_pair(const CartanDatum& datum, std::size_t i, std::size_t j) {
  if (i >= datum.rank() || j >= datum.rank()) throw InvalidInput("generator index out of range");
  if (i == j) throw InvalidInput("Serre element needs i != j");
}
Word serre_word(std::size_t i, std::size_t j, long r, long s) {
  Word w(static_cast<std::size_t>(r), letter(i));
  w.push_back(letter(j));
  w.append(static_cast<std::size_t>(s), letter(i));
  return w;
}
}  // namespace

FreeElement<RatQ> serre_element(const CartanDatum& datum, std::size_t i, std::size_t j) {
  check_pair(datum, i, j);
  const long n = 1 - datum.cartan(i, j);
  const long d = datum.sym(i);
  FreeElement<RatQ> out;
  for (long r = 0; r <= n; ++r) {
    const long s = n - r;
    RatQ coef(LaurentInt(r % 2 ? -1 : 1),
              qarith::q_factorial(r, d) * qarith::q_factorial(s, d));
    add_term(out, serre_word(i, j, r, s), coef);
  }
  return out;
}

FreeElement<LaurentInt> serre_element_integral(const CartanDatum& datum, std::size_t i,
                                               std::size_t j) {
  check_pair(datum, i, j);
  const long n = 1 - datum.cartan(i, j);
  const long d = datum.sym(i);
  FreeElement<LaurentInt> out;
  for (long r = 0; r <= n; ++r) {
    LaurentInt coef = qarith::q_binomial(n, r, d);
    if (r % 2) coef = -coef;
    add_term(out, serre_word(i, j, r, n - r), coef);
  }
  return out;
}

// --- Borel ----------------------------------------------------------------------

Borel::Borel(CartanDatum datum, int max_height) : datum_(std::move(datum)), max_height_(max_height) {
  if (max_height < 0) throw InvalidInput("height bound must be >= 0");
}

std::shared_ptr<const SerreSpan> Borel::build_span(const RootVec& gamma) const {
  auto span = std::make_shared<SerreSpan>();
  span->gamma = gamma;
  span->words = words_of_content(gamma);
  const std::size_t n = span->words.size();
  std::map<Word, std::size_t> column;
  for (std::size_t c = 0; c < n; ++c) column.emplace(span->words[c], c);

  auto insert = [&](std::vector<LaurentInt> v) {
    make_primitive(v);
    const std::size_t c = reduce_row(span->rows, v);
    if (c < n) span->rows.emplace(c, std::move(v));
  };

  // I_gamma = sum_i (e_i I_{gamma - alpha_i} + I_{gamma - alpha_i} e_i) + span of S_ij.
  const std::size_t rank = datum_.rank();
  for (std::size_t i = 0; i < rank; ++i) {
    if (gamma[i] == 0) continue;
    const RootVec sub = gamma - RootVec::simple(rank, i);
    if (sub.is_zero()) continue;
    const SerreSpan& lower = component(sub).serre_span();
    for (const auto& [pivot, row] : lower.rows) {
      std::vector<LaurentInt> left(n), right(n);
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k].is_zero()) continue;
        left[column.at(letter(i) + lower.words[k])] = row[k];
        right[column.at(lower.words[k] + letter(i))] = row[k];
      }
      insert(std::move(left));
      insert(std::move(right));
    }
  }
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      if (i == j) continue;
      RootVec c = (1 - datum_.cartan(i, j)) * RootVec::simple(rank, i);
      c[j] += 1;
      if (c != gamma) continue;
      std::vector<LaurentInt> v(n);
      for (const auto& [w, coef] : serre_element_integral(datum_, i, j)) v[column.at(w)] = coef;
      insert(std::move(v));
    }
  }
  return span;
}

const WordBasis& Borel::component(const RootVec& gamma) const {
  if (gamma.rank() != datum_.rank()) throw InvalidInput("root vector of wrong rank");
  if (!gamma.is_nonnegative()) throw InvalidInput("component outside Q+: " + gamma.to_string());
  if (gamma.height() > max_height_) {
    throw HeightExceeded("height of " + gamma.to_string() + " exceeds the bound " +
                         std::to_string(max_height_));
  }
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(gamma);
    if (it != cache_.end()) return *it->second;
  }
  auto basis = std::make_unique<WordBasis>(build_span(gamma));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.emplace(gamma, std::move(basis));
  return *it->second;
}

void Borel::precompute(int height) const {
  height = std::min(height, max_height_);
  for (int h = 0; h <= height; ++h) {
    const auto slice = rootdata::height_slice(datum_.rank(), h);
    parallel_for(slice.size(), [&](std::size_t k) { component(slice[k]); });
  }
}

CharSeries Borel::dim_series(int height) const {
  precompute(height);
  CharSeries s(datum_.rank(), height);
  for (const RootVec& g : rootdata::height_box(datum_.rank(), height)) {
    s.add(g, static_cast<std::int64_t>(dimension(g)));
  }
  return s;
}

// --- skew derivations -------------------------------------------------------------

namespace {

enum class Side { before, after };

FreeElement<RatQ> strip_letter(const CartanDatum& datum, std::size_t i,
                               const FreeElement<RatQ>& x, Side side) {
  FreeElement<RatQ> out;
  const char target = letter(i);
  for (const auto& [w, c] : x) {
    long total = 0;
    for (char ch : w) total += datum.simple_form(i, letter_index(ch));
    long before = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const long own = datum.simple_form(i, letter_index(w[k]));
      if (w[k] == target) {
        const long after = total - before - own;
        const long e = side == Side::before ? before : after;
        Word rest = w.substr(0, k) + w.substr(k + 1);
        add_term(out, rest, c * RatQ(LaurentInt::q_power(e)));
      }
      before += own;
    }
  }
  return out;
}

}  // namespace

FreeElement<RatQ> r_plus(const CartanDatum& datum, std::size_t i, const FreeElement<RatQ>& x) {
  return strip_letter(datum, i, x, Side::after);
}

FreeElement<RatQ> r_prime_plus(const CartanDatum& datum, std::size_t i,
                               const FreeElement<RatQ>& x) {
  return strip_letter(datum, i, x, Side::before);
}

FreeElement<RatQ> r_minus(const CartanDatum& datum, std::size_t i, const FreeElement<RatQ>& y) {
  return strip_letter(datum, i, y, Side::before);
}

FreeElement<RatQ> r_prime_minus(const CartanDatum& datum, std::size_t i,
                                const FreeElement<RatQ>& y) {
  return strip_letter(datum, i, y, Side::after);
}

}  // namespace qkac::borel
