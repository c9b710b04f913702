#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qkac/rootdata.hpp"

namespace qkac {

/**
 * Truncated element of the character ring, sum_gamma c_gamma e(anchor - gamma)
 * over gamma in Q+ with ht(gamma) <= height. Products drop every term beyond
 * the height bound.
 */
class CharSeries {
 public:
  using Coefficients = std::map<rootdata::RootVec, std::int64_t, rootdata::ByHeight>;

  CharSeries() = default;
  CharSeries(std::size_t rank, int height, rootdata::Weight anchor = {});
  static CharSeries one(std::size_t rank, int height, rootdata::Weight anchor = {});

  std::size_t rank() const noexcept { return rank_; }
  int height() const noexcept { return height_; }
  const rootdata::Weight& anchor() const noexcept { return anchor_; }
  void set_anchor(rootdata::Weight anchor) { anchor_ = std::move(anchor); }

  std::int64_t coefficient(const rootdata::RootVec& gamma) const;
  /// Adds c at gamma; terms outside the box are ignored.
  void add(const rootdata::RootVec& gamma, std::int64_t c);
  void set(const rootdata::RootVec& gamma, std::int64_t c);
  /// Nonzero coefficients only.
  const Coefficients& terms() const noexcept { return terms_; }

  /// Same series cut down to a smaller box.
  CharSeries truncated(int height) const;

  friend CharSeries operator*(const CharSeries& a, const CharSeries& b);
  friend CharSeries operator+(const CharSeries& a, const CharSeries& b);
  friend CharSeries operator-(const CharSeries& a, const CharSeries& b);
  /// Coefficientwise equality (anchors ignored).
  friend bool operator==(const CharSeries& a, const CharSeries& b) {
    return a.rank_ == b.rank_ && a.height_ == b.height_ && a.terms_ == b.terms_;
  }

  /// One "coords... coefficient" TSV row per gamma in the box, height then lex.
  std::string to_tsv(bool include_zero = true) const;

 private:
  std::size_t rank_ = 0;
  int height_ = 0;
  rootdata::Weight anchor_;
  Coefficients terms_;
};

}  // namespace qkac
