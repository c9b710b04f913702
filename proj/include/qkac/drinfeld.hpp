#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qkac/borel.hpp"
#include "qkac/linalg.hpp"
#include "qkac/qarith.hpp"

namespace qkac::drinfeld {

using borel::Borel;
using borel::FreeElement;
using borel::Word;
using rootdata::CartanDatum;
using rootdata::RootVec;

/// tau(e_i, f_i) = -1 / (q_i - q_i^-1).
RatQ generator_pairing(const CartanDatum& datum, std::size_t i);

/**
 * The pairing tau(x, y) between e-words and f-words, computed by stripping
 * the leftmost f: tau(x, f_j y') = tau(e_j, f_j) tau(r'_{j,+}(x), y').
 *
 * Internally works with the normalized value
 *   tau_hat(x, y) = tau(x, y) / prod_{letters j of y} tau(e_j, f_j),
 * which lies in Z[q, q^-1]. For each f-word y the whole vector
 * x -> tau_hat(x, y) over the words of content(y) is memoized. Thread-safe.
 */
class PairingEvaluator {
 public:
  explicit PairingEvaluator(CartanDatum datum);

  const CartanDatum& datum() const noexcept { return datum_; }

  LaurentInt normalized(const Word& x, const Word& y) const;
  RatQ value(const Word& x, const Word& y) const;
  RatQ value(const FreeElement<RatQ>& x, const FreeElement<RatQ>& y) const;
  /// prod over the letters j of y of tau(e_j, f_j).
  RatQ normalization(const Word& y) const;

 private:
  using Vector = std::map<Word, LaurentInt>;
  std::shared_ptr<const Vector> column(const Word& y) const;

  CartanDatum datum_;
  mutable std::mutex mutex_;
  mutable std::map<Word, std::shared_ptr<const Vector>> memo_;
};

struct PairingData {
  RootVec gamma;
  /// Shared word basis of U^+_gamma and U^-_{-gamma}.
  std::vector<Word> basis;
  /// M[r][s] = tau(x_r, y_s).
  Matrix<RatQ> matrix;
  /// M with column s multiplied by prod_k (q_{i_k} - q_{i_k}^-1) over the
  /// letters of y_s; Laurent integral.
  Matrix<LaurentInt> normalized;
  RatQ det;
  LaurentInt normalized_det;
  /// Present when det is nonzero.
  std::optional<qarith::UnitCertificate> certificate;
  /// Set when certify_unit rejected det.
  std::string certificate_error;
};

/// Matrix of tau on the basis of gamma, its determinant and certificate.
/// Certification failures are recorded in the result, not thrown.
PairingData pairing_matrix(const Borel& borel, const PairingEvaluator& tau, const RootVec& gamma);

struct RadicalReport {
  RootVec gamma;
  std::string z;
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  /// Kernel vectors (coordinates over the basis of U^+_gamma), only for
  /// rational z.
  std::vector<std::vector<mpq_class>> kernel_basis;
  bool root_of_unity = false;
};

/// Radical of tau at q = z, from the normalized matrix. Throws PoleAtZ at z = 0.
RadicalReport radical_at(const PairingData& data, const mpq_class& z);
/// Rank over Q(zeta_n), zeta_n a primitive n-th root of unity.
RadicalReport radical_at_root_of_unity(const PairingData& data, long n);
/// Rank over F_p(t), q -> t.
RadicalReport radical_function_field(const PairingData& data, std::uint64_t p);

struct NondegeneracyRow {
  RootVec gamma;
  std::size_t dim = 0;
  bool generic_nonzero = false;
  std::optional<qarith::UnitCertificate> certificate;
  std::string certificate_error;
  /// z text -> kernel dimension (absent when skipped).
  std::vector<std::pair<std::string, std::optional<std::size_t>>> kernels;
  std::optional<std::size_t> function_field_kernel;
  bool passed = false;
};

struct NondegeneracyReport {
  std::vector<NondegeneracyRow> rows;
  std::vector<std::string> warnings;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Sweeps every gamma with ht(gamma) <= height: generic determinant nonzero,
/// cyclotomic certificate, and trivial radical at each z (roots of unity are
/// skipped with a warning). Aggregates all failures.
NondegeneracyReport verify_nondegenerate(const Borel& borel, const PairingEvaluator& tau,
                                         int height, const std::vector<mpq_class>& zs,
                                         std::optional<std::uint64_t> prime = std::nullopt);

/// tau(Sx, Sy) = tau(x, y) on all word pairs of height <= height, with the
/// antipode expanded on the k-extended Borel halves.
bool antipode_spot_check(const PairingEvaluator& tau, int height, std::string* detail = nullptr);

/// The mixed-product formula for x y on generators x = e_i, y = f_j, with
/// the right side assembled from the iterated coproducts, compared with the
/// commutation relation.
bool commutation_spot_check(const CartanDatum& datum, std::string* detail = nullptr);

}  // namespace qkac::drinfeld
