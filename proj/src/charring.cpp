#include "qkac/charring.hpp"

#include "qkac/error.hpp"

namespace qkac::charring {

CharSeries series_invert(const CharSeries& s) {
  const std::size_t rank = s.rank();
  const RootVec zero = RootVec::zero(rank);
  const std::int64_t c0 = s.coefficient(zero);
  if (c0 != 1 && c0 != -1) {
    throw NonUnitConstantTerm("constant term " + std::to_string(c0) + " is not a unit");
  }
  CharSeries inv(rank, s.height(), s.anchor());
  inv.set(zero, c0);
  for (const RootVec& g : rootdata::height_box(rank, s.height())) {
    if (g.height() == 0) continue;
    std::int64_t acc = 0;
    for (const auto& [b, cb] : s.terms()) {
      if (b.height() == 0) continue;
      if (b.height() > g.height()) break;
      if (!b.dominated_by(g)) continue;
      acc += cb * inv.coefficient(g - b);
    }
    inv.set(g, -c0 * acc);
  }
  return inv;
}

namespace {

/// (1 - e(-alpha))^m truncated.
CharSeries binomial_factor(const RootVec& alpha, long m, std::size_t rank, int height) {
  CharSeries f(rank, height);
  std::int64_t binom = 1;
  RootVec power = RootVec::zero(rank);
  for (long k = 0; k <= m; ++k) {
    if (power.height() > height) break;
    f.add(power, k % 2 ? -binom : binom);
    binom = binom * (m - k) / (k + 1);
    power += alpha;
  }
  return f;
}

}  // namespace

CharSeries denominator_from(const Multiplicities& mults, std::size_t rank, int height) {
  CharSeries d = CharSeries::one(rank, height);
  for (const auto& [alpha, m] : mults) {
    if (m == 0 || alpha.height() > height) continue;
    d = d * binomial_factor(alpha, m, rank, height);
  }
  return d;
}

Multiplicities extract_multiplicities(const CharSeries& dims) {
  const std::size_t rank = dims.rank();
  const int height = dims.height();
  const CharSeries d = series_invert(dims);
  Multiplicities mults;
  CharSeries partial = CharSeries::one(rank, height);  // product over heights < h
  for (int h = 1; h <= height; ++h) {
    std::vector<std::pair<RootVec, long>> found;
    for (const RootVec& alpha : rootdata::height_slice(rank, h)) {
      const long m = static_cast<long>(partial.coefficient(alpha) - d.coefficient(alpha));
      if (m < 0) {
        throw NegativeMultiplicity("negative multiplicity " + std::to_string(m) + " at " +
                                   alpha.to_string());
      }
      if (m > 0) found.emplace_back(alpha, m);
    }
    for (const auto& [alpha, m] : found) {
      mults.emplace(alpha, m);
      partial = partial * binomial_factor(alpha, m, rank, height);
    }
  }
  return mults;
}

CharSeries orbit_series(const CartanDatum& datum, const Weight& lambda, int height) {
  CharSeries s(datum.rank(), height, lambda);
  for (const auto& term : rootdata::orbit_numerator(datum, lambda, height)) {
    s.add(term.offset, term.sign);
  }
  return s;
}

// --- CharacterRing ------------------------------------------------------------------

CharacterRing::CharacterRing(const borel::Borel& borel, int height) : borel_(borel), height_(height) {
  if (height > borel.max_height()) {
    throw HeightExceeded("character ring height " + std::to_string(height) +
                         " exceeds the algebra bound " + std::to_string(borel.max_height()));
  }
}

void CharacterRing::compute() const {
  std::call_once(once_, [this] {
    dims_ = borel_.dim_series(height_);
    mults_ = extract_multiplicities(dims_);
    denominator_ = denominator_from(mults_, datum().rank(), height_);
    inverse_ = series_invert(denominator_);
  });
}

const CharSeries& CharacterRing::dim_series() const {
  compute();
  return dims_;
}

const Multiplicities& CharacterRing::multiplicities() const {
  compute();
  return mults_;
}

const CharSeries& CharacterRing::denominator() const {
  compute();
  return denominator_;
}

const CharSeries& CharacterRing::denominator_inverse() const {
  compute();
  return inverse_;
}

CharSeries CharacterRing::weyl_kac(const Weight& lambda) const {
  CharSeries ch = orbit_series(datum(), lambda, height_) * denominator_inverse();
  ch.set_anchor(lambda);
  for (const auto& [g, c] : ch.terms()) {
    if (c < 0) {
      throw NegativeCoefficient("Weyl-Kac coefficient " + std::to_string(c) + " at " +
                                g.to_string() + " for lambda " + lambda.to_string());
    }
  }
  return ch;
}

CharSeries CharacterRing::verma_char(const Weight& lambda) const {
  CharSeries ch = denominator_inverse();
  ch.set_anchor(lambda);
  return ch;
}

SkewReport CharacterRing::skew_invariance_check(std::size_t i) const {
  const auto& datum = this->datum();
  if (i >= datum.rank()) throw InvalidInput("generator index out of range");
  const CharSeries& d = denominator();
  SkewReport report;
  report.index = i;
  const RootVec alpha = RootVec::simple(datum.rank(), i);
  // (s_i o D)[delta] = D[s_i delta + alpha_i]
  auto partner = [&](const RootVec& delta) { return datum.reflect(i, delta) + alpha; };
  auto verifiable = [&](const RootVec& p) { return !p.is_nonnegative() || p.height() <= height_; };
  report.window = height_;
  for (const RootVec& delta : rootdata::height_box(datum.rank(), height_)) {
    const RootVec p = partner(delta);
    if (!verifiable(p)) {
      report.window = std::min(report.window, delta.height() - 1);
      continue;
    }
    ++report.checked;
    const std::int64_t lhs = p.is_nonnegative() ? d.coefficient(p) : 0;
    const std::int64_t rhs = -d.coefficient(delta);
    if (lhs != rhs) {
      report.passed = false;
      report.details.push_back("coefficient at " + delta.to_string() + ": s_i o D gives " +
                               std::to_string(lhs) + ", -D gives " + std::to_string(rhs));
    }
  }
  return report;
}

IdentityReport CharacterRing::denominator_identity_check() const {
  IdentityReport report;
  report.window = height_;
  const std::size_t rank = datum().rank();
  const CharSeries product = orbit_series(datum(), Weight::zero(rank), height_) * dim_series();
  for (const RootVec& g : rootdata::height_box(rank, height_)) {
    const std::int64_t expected = g.height() == 0 ? 1 : 0;
    if (product.coefficient(g) != expected) {
      report.passed = false;
      report.details.push_back("coefficient at " + g.to_string() + " is " +
                               std::to_string(product.coefficient(g)));
    }
  }
  return report;
}

}  // namespace qkac::charring
