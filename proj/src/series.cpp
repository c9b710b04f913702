#include "qkac/series.hpp"

#include <sstream>

#include "qkac/error.hpp"

namespace qkac {

using rootdata::RootVec;

namespace {
std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("character coefficient overflow");
  return r;
}
std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("character coefficient overflow");
  return r;
}
}  // namespace

CharSeries::CharSeries(std::size_t rank, int height, rootdata::Weight anchor)
    : rank_(rank), height_(height), anchor_(std::move(anchor)) {
  if (anchor_.rank() == 0) anchor_ = rootdata::Weight::zero(rank);
}

CharSeries CharSeries::one(std::size_t rank, int height, rootdata::Weight anchor) {
  CharSeries s(rank, height, std::move(anchor));
  s.set(RootVec::zero(rank), 1);
  return s;
}

std::int64_t CharSeries::coefficient(const RootVec& gamma) const {
  auto it = terms_.find(gamma);
  return it == terms_.end() ? 0 : it->second;
}

void CharSeries::add(const RootVec& gamma, std::int64_t c) {
  if (c == 0) return;
  if (gamma.rank() != rank_) throw InvalidInput("series index of wrong rank");
  if (!gamma.is_nonnegative() || gamma.height() > height_) return;
  auto [it, inserted] = terms_.emplace(gamma, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void CharSeries::set(const RootVec& gamma, std::int64_t c) {
  if (!gamma.is_nonnegative() || gamma.height() > height_) return;
  if (c == 0) {
    terms_.erase(gamma);
  } else {
    terms_[gamma] = c;
  }
}

CharSeries CharSeries::truncated(int height) const {
  CharSeries out(rank_, std::min(height, height_), anchor_);
  for (const auto& [g, c] : terms_) out.add(g, c);
  return out;
}

CharSeries operator*(const CharSeries& a, const CharSeries& b) {
  if (a.rank_ != b.rank_) throw InvalidInput("series of different rank");
  CharSeries out(a.rank_, std::min(a.height_, b.height_), a.anchor_);
  for (const auto& [ga, ca] : a.terms_) {
    const int ha = ga.height();
    for (const auto& [gb, cb] : b.terms_) {
      if (ha + gb.height() > out.height_) break;  // terms are height-ordered
      out.add(ga + gb, checked_mul(ca, cb));
    }
  }
  return out;
}

CharSeries operator+(const CharSeries& a, const CharSeries& b) {
  CharSeries out = a.truncated(std::min(a.height_, b.height_));
  for (const auto& [g, c] : b.terms_) out.add(g, c);
  return out;
}

CharSeries operator-(const CharSeries& a, const CharSeries& b) {
  CharSeries out = a.truncated(std::min(a.height_, b.height_));
  for (const auto& [g, c] : b.terms_) out.add(g, -c);
  return out;
}

std::string CharSeries::to_tsv(bool include_zero) const {
  std::ostringstream os;
  for (const RootVec& g : rootdata::height_box(rank_, height_)) {
    const std::int64_t c = coefficient(g);
    if (c == 0 && !include_zero) continue;
    for (std::size_t i = 0; i < rank_; ++i) os << g[i] << '\t';
    os << c << '\n';
  }
  return os.str();
}

}  // namespace qkac
