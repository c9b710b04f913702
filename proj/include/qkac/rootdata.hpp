#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qkac::rootdata {

/// Element sum_i n_i alpha_i of the root lattice Q, in simple-root coordinates.
class RootVec {
 public:
  RootVec() = default;
  static RootVec zero(std::size_t rank) { return RootVec(std::vector<int>(rank, 0)); }
  explicit RootVec(std::vector<int> coords) : coords_(std::move(coords)) {}
  static RootVec simple(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const noexcept { return coords_; }

  int height() const;
  bool is_zero() const;
  /// All coordinates >= 0, i.e. the element lies in Q+.
  bool is_nonnegative() const;
  /// Componentwise <=.
  bool dominated_by(const RootVec& other) const;

  RootVec& operator+=(const RootVec& other);
  RootVec& operator-=(const RootVec& other);
  friend RootVec operator+(RootVec a, const RootVec& b) { return a += b; }
  friend RootVec operator-(RootVec a, const RootVec& b) { return a -= b; }
  friend RootVec operator*(int k, RootVec a) {
    for (auto& c : a.coords_) c *= k;
    return a;
  }
  friend bool operator==(const RootVec&, const RootVec&) = default;
  /// Lexicographic on coordinates; use ByHeight for the output order.
  friend auto operator<=>(const RootVec&, const RootVec&) = default;

  std::string to_string() const;

 private:
  std::vector<int> coords_;
};

/// Height first, then lexicographic. The order of every emitted table.
struct ByHeight {
  bool operator()(const RootVec& a, const RootVec& b) const {
    const int ha = a.height();
    const int hb = b.height();
    return ha != hb ? ha < hb : a < b;
  }
};

/// A weight, represented by its pairings p_i = <lambda, h_i>.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> pairings) : pairings_(std::move(pairings)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

  std::size_t rank() const noexcept { return pairings_.size(); }
  int operator[](std::size_t i) const { return pairings_[i]; }
  const std::vector<int>& pairings() const noexcept { return pairings_; }
  bool is_dominant() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  std::string to_string() const;

 private:
  std::vector<int> pairings_;
};

/// Symmetrizable generalized Cartan matrix with its symmetrizer.
class CartanDatum {
 public:
  /// Validates every invariant and throws InvalidInput naming the violated one.
  CartanDatum(std::string name, std::vector<std::vector<int>> cartan, std::vector<int> symmetrizer);

  static CartanDatum preset(const std::string& name);
  static std::vector<std::string> preset_names();
  /// {"rank": n, "cartan": [[...]], "symmetrizer": [d_1, ...]}
  static CartanDatum from_json(const std::string& text, const std::string& name = "custom");
  std::string to_json() const;

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return cartan_.size(); }
  /// A[i][j] = <alpha_j, h_i>.
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const noexcept { return cartan_; }
  /// d_i = (alpha_i, alpha_i) / 2.
  int sym(std::size_t i) const { return sym_[i]; }
  const std::vector<int>& symmetrizer() const noexcept { return sym_; }

  /// (alpha_i, alpha_j) = d_i A[i][j].
  int simple_form(std::size_t i, std::size_t j) const { return sym_[i] * cartan_[i][j]; }
  /// (gamma, delta) on the root lattice.
  long form(const RootVec& gamma, const RootVec& delta) const;
  /// (alpha_i, gamma).
  long form_simple(std::size_t i, const RootVec& gamma) const;
  /// (lambda, alpha_i) = d_i <lambda, h_i>.
  long form_weight_root(const Weight& lambda, std::size_t i) const;

  /// <gamma, h_i> for gamma in Q, i.e. (A gamma)_i.
  int pairing(std::size_t i, const RootVec& gamma) const;
  /// Pairing vector of lambda - gamma.
  Weight shift(const Weight& lambda, const RootVec& gamma) const;
  /// Ordinary reflection s_i gamma = gamma - <gamma, h_i> alpha_i.
  RootVec reflect(std::size_t i, const RootVec& gamma) const;

 private:
  std::string name_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
};

/// Smallest positive integers d with d_i A[i][j] = d_j A[j][i]; throws when the
/// matrix is not symmetrizable.
std::vector<int> minimal_symmetrizer(const std::vector<std::vector<int>>& cartan);

/// Every gamma in Q+ with ht(gamma) <= height, ordered by height then lex.
std::vector<RootVec> height_box(std::size_t rank, int height);
/// Every gamma in Q+ with ht(gamma) == height, in lexicographic order.
std::vector<RootVec> height_slice(std::size_t rank, int height);

/// A weight given as anchor - offset; only the pairings and the offset are
/// tracked.
struct ShiftedWeight {
  Weight pairings;
  RootVec offset;
};

/// s_i o mu = mu - (<mu, h_i> + 1) alpha_i.
ShiftedWeight dot_reflect(const CartanDatum& datum, std::size_t i, const ShiftedWeight& mu);

struct NumeratorTerm {
  RootVec offset;  // lambda - w o lambda
  int sign;        // sgn(w)
  friend bool operator==(const NumeratorTerm&, const NumeratorTerm&) = default;
};

/// {(lambda - w o lambda, sgn w) : ht <= height}, ordered by height then lex.
/// Throws NonDominant unless lambda is dominant.
std::vector<NumeratorTerm> orbit_numerator(const CartanDatum& datum, const Weight& lambda,
                                           int height);

/// Root multiplicities m_alpha up to the given height from the Peterson
/// recurrence. Only roots (m > 0) are returned.
std::map<RootVec, long, ByHeight> peterson_multiplicities(const CartanDatum& datum, int height);

}  // namespace qkac::rootdata
