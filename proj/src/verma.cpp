#include "qkac/verma.hpp"

#include <algorithm>

#include "qkac/error.hpp"
#include "qkac/qarith.hpp"

namespace qkac::verma {

using borel::content;
using borel::letter;
using borel::letter_index;

namespace {

/// Pairings <mu, h_i> of mu = lambda - content(tail) for every suffix; index k
/// refers to the suffix starting after position k.
template <class C, class Scalar>
FreeElement<C> act_e_impl(const CartanDatum& datum, std::size_t i, const Weight& lambda,
                          const FreeElement<C>& v, Scalar&& to_scalar) {
  if (i >= datum.rank()) throw InvalidInput("generator index out of range");
  FreeElement<C> out;
  const char target = letter(i);
  const long d = datum.sym(i);
  for (const auto& [w, c] : v) {
    long pairing = lambda[i];  // <lambda - content(tail), h_i>, tail = w[k+1..]
    for (std::size_t k = w.size(); k-- > 0;) {
      if (w[k] == target) {
        const LaurentInt qint = qarith::q_integer_signed(pairing, d);
        if (!qint.is_zero()) borel::add_term(out, w.substr(0, k) + w.substr(k + 1), c * to_scalar(qint));
      }
      pairing -= datum.cartan(i, letter_index(w[k]));
    }
  }
  return out;
}

}  // namespace

FreeElement<LaurentInt> act_e(const CartanDatum& datum, std::size_t i, const Weight& lambda,
                              const FreeElement<LaurentInt>& v) {
  return act_e_impl(datum, i, lambda, v, [](const LaurentInt& x) { return x; });
}

FreeElement<RatQ> act_e(const CartanDatum& datum, std::size_t i, const Weight& lambda,
                        const FreeElement<RatQ>& v) {
  return act_e_impl(datum, i, lambda, v, [](const LaurentInt& x) { return RatQ(x); });
}

std::vector<RatQ> act_e(const Borel& borel, std::size_t i, const Weight& lambda,
                        const RootVec& gamma, const std::vector<RatQ>& v) {
  const RootVec target = gamma - RootVec::simple(gamma.rank(), i);
  if (!target.is_nonnegative()) return {};
  const auto& source = borel.component(gamma);
  if (v.size() != source.dim()) throw InvalidInput("vector length does not match the component");
  FreeElement<RatQ> x;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) borel::add_term(x, source.basis_words()[k], v[k]);
  }
  return borel.component(target).reduce(act_e(borel.datum(), i, lambda, x));
}

// --- contravariant form ------------------------------------------------------------

namespace {

/// Coefficient of v_lambda in e_{x_n} ... e_{x_1} y v_lambda, where x is the
/// f-word whose image under omega is applied.
LaurentInt contravariant(const CartanDatum& datum, const Weight& lambda, const Word& x,
                         const Word& y) {
  FreeElement<LaurentInt> v;
  v.emplace(y, LaurentInt(1));
  for (char ch : x) {
    v = act_e(datum, letter_index(ch), lambda, v);
    if (v.empty()) return LaurentInt();
  }
  auto it = v.find(Word());
  return it == v.end() ? LaurentInt() : it->second;
}

}  // namespace

GramReport gram_matrix(const Borel& borel, const Weight& lambda, const RootVec& gamma,
                       const std::vector<mpq_class>& zs) {
  const auto& datum = borel.datum();
  if (lambda.rank() != datum.rank()) throw InvalidInput("weight rank does not match the datum");
  GramReport report;
  report.lambda = lambda;
  report.gamma = gamma;
  report.basis = borel.component(gamma).basis_words();
  const std::size_t n = report.basis.size();
  report.gram = Matrix<LaurentInt>(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      report.gram(r, s) = contravariant(datum, lambda, report.basis[r], report.basis[s]);
    }
  }
  report.symmetric = true;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r + 1; s < n; ++s) {
      if (!(report.gram(r, s) == report.gram(s, r))) report.symmetric = false;
    }
  }
  report.generic_rank = rank(report.gram);
  for (const auto& z : zs) {
    if (sgn(z) == 0) throw PoleAtZ("specialization at z = 0");
    Matrix<mpq_class> m = report.gram.map([&](const LaurentInt& x) { return x.evaluate(z); });
    report.rank_at_z[qarith::format_rational(z)] = field_rank(m);
  }
  return report;
}

WitnessReport integrability_witness(const Borel& borel, const Weight& lambda) {
  const auto& datum = borel.datum();
  if (!lambda.is_dominant()) throw NonDominant("weight " + lambda.to_string() + " is not dominant");
  WitnessReport report;
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    const int n = lambda[i] + 1;
    const RootVec gamma = n * RootVec::simple(datum.rank(), i);
    if (gamma.height() > borel.max_height()) {
      report.passed = false;
      report.details.push_back("f" + std::to_string(i + 1) + "^" + std::to_string(n) +
                               " exceeds the height bound");
      continue;
    }
    const Word power(static_cast<std::size_t>(n), letter(i));
    // Pair the vector against every word of the weight space.
    for (const Word& x : borel.component(gamma).basis_words()) {
      if (!contravariant(datum, lambda, x, power).is_zero()) {
        report.passed = false;
        report.details.push_back("f" + std::to_string(i + 1) + "^" + std::to_string(n) +
                                 " v is not in the radical");
        break;
      }
    }
  }
  return report;
}

// --- Casimir ----------------------------------------------------------------------

long casimir_exponent(const CartanDatum& datum, const Weight& lambda, const Word& path) {
  Weight mu = lambda;
  long total = 0;
  for (char ch : path) {
    const std::size_t i = letter_index(ch);
    total += 2 * datum.form_weight_root(mu, i);
    mu = datum.shift(mu, RootVec::simple(datum.rank(), i));
  }
  return total;
}

namespace {

mpq_class power(const mpq_class& z, long e) {
  mpq_class base = e >= 0 ? z : mpq_class(1) / z;
  base.canonicalize();
  mpq_class out = 1;
  for (long k = 0; k < std::labs(e); ++k) out *= base;
  out.canonicalize();
  return out;
}

std::vector<mpq_class> specialize_vector(const std::vector<RatQ>& v, const mpq_class& z) {
  std::vector<mpq_class> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out[k] = qarith::specialize(v[k], z).value;
  }
  return out;
}

}  // namespace

CasimirReport casimir_check(const Borel& borel, const drinfeld::PairingEvaluator& tau,
                            const Weight& lambda, const RootVec& gamma, const mpq_class& z) {
  const auto& datum = borel.datum();
  const std::size_t rank = datum.rank();
  if (sgn(z) == 0) throw PoleAtZ("specialization at z = 0");
  if (!gamma.is_nonnegative()) throw InvalidInput("gamma must lie in Q+");
  CasimirReport report;

  // Exponent along every letter ordering of gamma.
  const auto paths = borel::words_of_content(gamma);
  report.exponent = casimir_exponent(datum, lambda, paths.front());
  for (const Word& p : paths) {
    if (casimir_exponent(datum, lambda, p) != report.exponent) {
      report.path_independent = false;
      report.passed = false;
      report.details.push_back("exponent depends on the path " + borel::display_word(p, "a"));
    }
  }
  report.scalar = power(z, report.exponent);

  const auto& target = borel.component(gamma);
  const std::size_t n = target.dim();
  // sum over gamma' <= gamma of Omega_{gamma'}, as an n x n matrix at z.
  Matrix<mpq_class> total(n, n, mpq_class(0));

  for (const RootVec& sub : rootdata::height_box(rank, gamma.height())) {
    if (!sub.dominated_by(gamma)) continue;
    const RootVec rest = gamma - sub;
    const auto& mid = borel.component(rest);
    const auto data = drinfeld::pairing_matrix(borel, tau, sub);
    const std::size_t m = data.basis.size();
    Matrix<mpq_class> pairing(m, m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t s = 0; s < m; ++s) {
        pairing(r, s) = data.matrix(r, s).is_zero() ? mpq_class(0)
                                                     : qarith::specialize(data.matrix(r, s), z).value;
      }
    }
    const auto inverse = field_inverse(pairing);
    if (!inverse) {
      throw SingularPairing("pairing matrix at " + sub.to_string() + " is singular at z = " +
                            qarith::format_rational(z));
    }
    // Dual basis: y^r = sum_s B[s][r] y_s with M B = I.
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t r = 0; r < m; ++r) {
        // x_r acting on y_t v_lambda, reduced into the basis of rest.
        FreeElement<RatQ> v;
        v.emplace(target.basis_words()[t], RatQ(1));
        const Word& xr = data.basis[r];
        for (std::size_t k = xr.size(); k-- > 0;) {
          v = act_e(datum, letter_index(xr[k]), lambda, v);
        }
        if (v.empty()) continue;
        const auto coords = specialize_vector(mid.reduce(v), z);
        for (std::size_t s = 0; s < m; ++s) {
          const mpq_class& b = (*inverse)(s, r);
          if (sgn(b) == 0) continue;
          const Word& ys = data.basis[s];
          // S(f_{j1} ... f_{jk}) on a vector of weight nu.
          for (std::size_t u = 0; u < coords.size(); ++u) {
            if (sgn(coords[u]) == 0) continue;
            const Word& w = mid.basis_words()[u];
            Weight nu = datum.shift(lambda, rest);
            long e = 0;
            for (char ch : ys) {
              const std::size_t j = letter_index(ch);
              e += datum.form_weight_root(nu, j);
              nu = datum.shift(nu, RootVec::simple(rank, j));
            }
            Word image(ys.rbegin(), ys.rend());
            image += w;
            mpq_class scale = b * coords[u] * power(z, e);
            if (ys.size() % 2) scale = -scale;
            const auto reduced = specialize_vector(target.reduce(image), z);
            for (std::size_t k = 0; k < n; ++k) {
              if (sgn(reduced[k]) != 0) total(k, t) += scale * reduced[k];
            }
          }
        }
      }
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      total(r, c).canonicalize();
      const mpq_class expected = r == c ? report.scalar : mpq_class(0);
      if (total(r, c) != expected) {
        report.passed = false;
        report.details.push_back("Omega entry (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") = " + qarith::format_rational(total(r, c)) + ", expected " +
                                 qarith::format_rational(expected));
      }
    }
  }
  return report;
}

// --- braid operators --------------------------------------------------------------

namespace {

FreeElement<RatQ> braid_impl(const CartanDatum& datum, std::size_t i, std::size_t j, int sign) {
  if (i >= datum.rank() || j >= datum.rank()) throw InvalidInput("generator index out of range");
  if (i == j) throw InvalidInput("braid formula needs i != j");
  const long n = -datum.cartan(i, j);
  const long d = datum.sym(i);
  FreeElement<RatQ> out;
  for (long r = 0; r <= n; ++r) {
    const long s = n - r;
    // e-side: (-1)^r q_i^{-r} e_i^(s) e_j e_i^(r); f-side: (-1)^r q_i^{r} f_i^(r) f_j f_i^(s)
    Word w;
    if (sign > 0) {
      w = Word(static_cast<std::size_t>(s), letter(i)) + letter(j) +
          Word(static_cast<std::size_t>(r), letter(i));
    } else {
      w = Word(static_cast<std::size_t>(r), letter(i)) + letter(j) +
          Word(static_cast<std::size_t>(s), letter(i));
    }
    LaurentInt num = LaurentInt::q_power(-sign * r * d);
    if (r % 2) num = -num;
    borel::add_term(out, w, RatQ(num, qarith::q_factorial(r, d) * qarith::q_factorial(s, d)));
  }
  return out;
}

}  // namespace

FreeElement<RatQ> braid_e(const CartanDatum& datum, std::size_t i, std::size_t j) {
  return braid_impl(datum, i, j, +1);
}

FreeElement<RatQ> braid_f(const CartanDatum& datum, std::size_t i, std::size_t j) {
  return braid_impl(datum, i, j, -1);
}

BraidReport braid_spot_check(const Borel& borel, const drinfeld::PairingEvaluator& tau,
                             std::size_t i) {
  const auto& datum = borel.datum();
  BraidReport report;
  for (std::size_t j = 0; j < datum.rank(); ++j) {
    if (j == i) continue;
    const std::string tag = "T" + std::to_string(i + 1) + " on index " + std::to_string(j + 1);
    const auto te = braid_e(datum, i, j);
    const auto tf = braid_f(datum, i, j);
    const RootVec gamma = borel::content(te.begin()->first, datum.rank());
    if (gamma.height() > borel.max_height()) {
      report.details.push_back(tag + ": skipped, beyond the height bound");
      continue;
    }
    if (datum.cartan(i, j) == 0) {
      if (te != borel::single<RatQ>(Word(1, letter(j)))) {
        report.passed = false;
        report.details.push_back(tag + ": T_i(e_j) != e_j for orthogonal nodes");
      }
    }
    const RootVec lower = gamma - RootVec::simple(datum.rank(), i);
    const auto& comp = borel.component(lower);
    if (!comp.in_serre_ideal(borel::r_plus(datum, i, te))) {
      report.passed = false;
      report.details.push_back(tag + ": r_{i,+}(T_i e_j) != 0");
    }
    if (!comp.in_serre_ideal(borel::r_prime_minus(datum, i, tf))) {
      report.passed = false;
      report.details.push_back(tag + ": r'_{i,-}(T_i f_j) != 0");
    }
    const RatQ lhs = tau.value(te, tf);
    const RatQ rhs = drinfeld::generator_pairing(datum, j);
    if (!(lhs == rhs)) {
      report.passed = false;
      report.details.push_back(tag + ": tau(T_i e_j, T_i f_j) = " + lhs.to_string() +
                               ", expected " + rhs.to_string());
    }
  }
  return report;
}

}  // namespace qkac::verma
