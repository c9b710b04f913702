#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qkac/borel.hpp"
#include "qkac/rootdata.hpp"
#include "qkac/series.hpp"

namespace qkac::charring {

using rootdata::ByHeight;
using rootdata::CartanDatum;
using rootdata::RootVec;
using rootdata::Weight;

using Multiplicities = std::map<RootVec, long, ByHeight>;

/// Truncated inverse. Throws NonUnitConstantTerm unless the constant term is +-1.
CharSeries series_invert(const CharSeries& s);

/// prod_alpha (1 - e(-alpha))^{m_alpha}, truncated.
CharSeries denominator_from(const Multiplicities& mults, std::size_t rank, int height);

/// Reads m_alpha off D = dims^{-1} by height induction. Throws
/// NegativeMultiplicity on a negative value.
Multiplicities extract_multiplicities(const CharSeries& dims);

/// sum_w sgn(w) e(w o lambda) as a series anchored at lambda.
CharSeries orbit_series(const CartanDatum& datum, const Weight& lambda, int height);

struct SkewReport {
  std::size_t index = 0;
  /// Every gamma with ht <= window has a verifiable partner.
  int window = 0;
  std::size_t checked = 0;
  bool passed = true;
  std::vector<std::string> details;
};

struct IdentityReport {
  int window = 0;
  bool passed = true;
  std::vector<std::string> details;
};

/**
 * Character-ring computations for one datum up to a height bound. The
 * dimension series comes from the Serre-quotient word bases; everything else
 * is derived from it.
 */
class CharacterRing {
 public:
  CharacterRing(const borel::Borel& borel, int height);

  const CartanDatum& datum() const noexcept { return borel_.datum(); }
  int height() const noexcept { return height_; }

  const CharSeries& dim_series() const;
  const Multiplicities& multiplicities() const;
  /// Expanded product over the extracted multiplicities.
  const CharSeries& denominator() const;
  /// invert(denominator()).
  const CharSeries& denominator_inverse() const;

  /// D^{-1} sum_w sgn(w) e(w o lambda); throws NonDominant, and
  /// NegativeCoefficient when a coefficient is negative.
  CharSeries weyl_kac(const Weight& lambda) const;
  /// e(lambda) D^{-1}.
  CharSeries verma_char(const Weight& lambda) const;

  /// s_i o D = -D on the verifiable part of the box.
  SkewReport skew_invariance_check(std::size_t i) const;
  /// numerator(0) * dims = 1 on the box.
  IdentityReport denominator_identity_check() const;

 private:
  const borel::Borel& borel_;
  int height_;
  mutable std::once_flag once_;
  mutable CharSeries dims_, denominator_, inverse_;
  mutable Multiplicities mults_;
  void compute() const;
};

}  // namespace qkac::charring
