#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qkac/borel.hpp"
#include "qkac/drinfeld.hpp"
#include "qkac/linalg.hpp"

namespace qkac::verma {

using borel::Borel;
using borel::FreeElement;
using borel::Word;
using rootdata::CartanDatum;
using rootdata::RootVec;
using rootdata::Weight;

/// e_i acting on y v_lambda for a combination y of f-words: each f_i in a word
/// is replaced by [<mu, h_i>]_{q_i}, mu the weight of the part to its right.
/// No reduction; the result is again a combination of f-words.
FreeElement<LaurentInt> act_e(const CartanDatum& datum, std::size_t i, const Weight& lambda,
                              const FreeElement<LaurentInt>& v);
FreeElement<RatQ> act_e(const CartanDatum& datum, std::size_t i, const Weight& lambda,
                        const FreeElement<RatQ>& v);
/// Reduced form: v given by coordinates over the basis of gamma, result over
/// the basis of gamma - alpha_i (empty when that is not in Q+).
std::vector<RatQ> act_e(const Borel& borel, std::size_t i, const Weight& lambda,
                        const RootVec& gamma, const std::vector<RatQ>& v);

struct GramReport {
  Weight lambda;
  RootVec gamma;
  std::vector<Word> basis;
  /// G[r][s] = coefficient of v_lambda in omega(y_r) y_s v_lambda.
  Matrix<LaurentInt> gram;
  std::size_t generic_rank = 0;
  std::map<std::string, std::size_t> rank_at_z;
  bool symmetric = false;
};

/// Contravariant form on M(lambda)_{lambda - gamma}.
GramReport gram_matrix(const Borel& borel, const Weight& lambda, const RootVec& gamma,
                       const std::vector<mpq_class>& zs = {});

struct WitnessReport {
  bool passed = true;
  std::vector<std::string> details;
};

/// f_i^{<lambda, h_i> + 1} v_lambda lies in the radical of the contravariant
/// form, for every i.
WitnessReport integrability_witness(const Borel& borel, const Weight& lambda);

/// Exponent f_C(lambda) - f_C(lambda - gamma), telescoped along the letter
/// order of `path` (a word of content gamma).
long casimir_exponent(const CartanDatum& datum, const Weight& lambda, const Word& path);

struct CasimirReport {
  bool passed = true;
  long exponent = 0;
  bool path_independent = true;
  mpq_class scalar;
  std::vector<std::string> details;
};

/// sum_{gamma' <= gamma} Omega_{gamma'} acts on M_z(lambda)_{lambda - gamma}
/// as z^{f_C(lambda) - f_C(lambda - gamma)}. Throws SingularPairing when a
/// pairing matrix is singular at z.
CasimirReport casimir_check(const Borel& borel, const drinfeld::PairingEvaluator& tau,
                            const Weight& lambda, const RootVec& gamma, const mpq_class& z);

/// T_i(e_j) per the divided-power formula, and T_i(f_j).
FreeElement<RatQ> braid_e(const CartanDatum& datum, std::size_t i, std::size_t j);
FreeElement<RatQ> braid_f(const CartanDatum& datum, std::size_t i, std::size_t j);

struct BraidReport {
  bool passed = true;
  std::vector<std::string> details;
};

/// For each j != i: T_i(e_j) lies in ker r_{i,+}, T_i(f_j) in ker r'_{i,-},
/// and tau(T_i e_j, T_i f_j) = tau(e_j, f_j).
BraidReport braid_spot_check(const Borel& borel, const drinfeld::PairingEvaluator& tau,
                             std::size_t i);

}  // namespace qkac::verma
