#include "qkac/drinfeld.hpp"

#include <sstream>
#include <tuple>

#include "qkac/error.hpp"
#include "qkac/parallel.hpp"

namespace qkac::drinfeld {

using borel::content;
using borel::letter_index;
using borel::words_of_content;

namespace {
/// q_i - q_i^-1
LaurentInt q_diff(long d) { return LaurentInt::q_power(d) - LaurentInt::q_power(-d); }
}  // namespace

RatQ generator_pairing(const CartanDatum& datum, std::size_t i) {
  return RatQ(LaurentInt(-1), q_diff(datum.sym(i)));
}

// --- PairingEvaluator ---------------------------------------------------------------

PairingEvaluator::PairingEvaluator(CartanDatum datum) : datum_(std::move(datum)) {}

std::shared_ptr<const PairingEvaluator::Vector> PairingEvaluator::column(const Word& y) const {
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(y);
    if (it != memo_.end()) return it->second;
  }
  auto out = std::make_shared<Vector>();
  if (y.empty()) {
    out->emplace(Word(), LaurentInt(1));
  } else {
    const char j = y.front();
    const std::size_t jj = letter_index(j);
    const auto rest = column(y.substr(1));
    for (const Word& x : words_of_content(content(y, datum_.rank()))) {
      LaurentInt total;
      long before = 0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == j) {
          auto it = rest->find(x.substr(0, k) + x.substr(k + 1));
          if (it != rest->end()) total += it->second.shifted(before);
        }
        before += datum_.simple_form(jj, letter_index(x[k]));
      }
      if (!total.is_zero()) out->emplace(x, std::move(total));
    }
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = memo_.emplace(y, std::move(out));
  return it->second;
}

LaurentInt PairingEvaluator::normalized(const Word& x, const Word& y) const {
  if (x.size() != y.size()) return LaurentInt();
  const auto col = column(y);
  auto it = col->find(x);
  return it == col->end() ? LaurentInt() : it->second;
}

RatQ PairingEvaluator::normalization(const Word& y) const {
  LaurentInt den(1);
  for (char ch : y) den *= q_diff(datum_.sym(letter_index(ch)));
  return RatQ(LaurentInt(y.size() % 2 ? -1 : 1), den);
}

RatQ PairingEvaluator::value(const Word& x, const Word& y) const {
  const LaurentInt t = normalized(x, y);
  if (t.is_zero()) return RatQ();
  return RatQ(t) * normalization(y);
}

RatQ PairingEvaluator::value(const FreeElement<RatQ>& x, const FreeElement<RatQ>& y) const {
  RatQ total;
  for (const auto& [wy, cy] : y) {
    RatQ inner;
    for (const auto& [wx, cx] : x) {
      const LaurentInt t = normalized(wx, wy);
      if (!t.is_zero()) inner += cx * RatQ(t);
    }
    if (!inner.is_zero()) total += inner * cy * normalization(wy);
  }
  return total;
}

// --- pairing matrices -------------------------------------------------------------

PairingData pairing_matrix(const Borel& borel, const PairingEvaluator& tau, const RootVec& gamma) {
  PairingData data;
  data.gamma = gamma;
  if (!gamma.is_nonnegative()) {
    data.det = RatQ(1);
    data.normalized_det = LaurentInt(1);
    data.certificate = qarith::UnitCertificate{};
    return data;
  }
  const auto& datum = borel.datum();
  data.basis = borel.component(gamma).basis_words();
  const std::size_t n = data.basis.size();
  const int ht = gamma.height();
  const RatQ scale = n ? tau.normalization(data.basis.front()) : RatQ(1);
  data.matrix = Matrix<RatQ>(n, n);
  data.normalized = Matrix<LaurentInt>(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      const LaurentInt t = tau.normalized(data.basis[r], data.basis[s]);
      data.normalized(r, s) = ht % 2 ? -t : t;
      data.matrix(r, s) = t.is_zero() ? RatQ() : RatQ(t) * scale;
    }
  }
  data.normalized_det = determinant(data.normalized);
  LaurentInt cleared(1);
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    for (long k = 0; k < static_cast<long>(gamma[i]) * static_cast<long>(n); ++k) {
      cleared *= q_diff(datum.sym(i));
    }
  }
  if (data.normalized_det.is_zero()) {
    data.det = RatQ();
    data.certificate_error = "determinant vanishes in Q(q)";
    return data;
  }
  data.det = RatQ(data.normalized_det, cleared);
  try {
    data.certificate = qarith::certify_unit(data.det);
  } catch (const NotAUnit& e) {
    data.certificate_error = e.what();
  }
  return data;
}

RadicalReport radical_at(const PairingData& data, const mpq_class& z) {
  if (sgn(z) == 0) throw PoleAtZ("specialization at z = 0");
  RadicalReport report;
  report.gamma = data.gamma;
  report.z = qarith::format_rational(z);
  report.root_of_unity = qarith::is_root_of_unity(z);
  const std::size_t n = data.normalized.rows();
  report.dim = n;
  // Left kernel: coordinates c with sum_r c_r N[r][s] = 0 for all s.
  Matrix<mpq_class> transposed(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) transposed(s, r) = data.normalized(r, s).evaluate(z);
  }
  report.kernel_basis = field_kernel(transposed);
  report.kernel_dim = report.kernel_basis.size();
  report.rank = n - report.kernel_dim;
  return report;
}

RadicalReport radical_at_root_of_unity(const PairingData& data, long n_order) {
  if (n_order < 1) throw InvalidInput("root of unity order must be positive");
  RadicalReport report;
  report.gamma = data.gamma;
  report.z = "zeta_" + std::to_string(n_order);
  report.root_of_unity = true;
  const std::size_t n = data.normalized.rows();
  report.dim = n;
  Matrix<qarith::CyclotomicNumber> m =
      data.normalized.map([&](const LaurentInt& x) { return qarith::CyclotomicNumber::from_laurent(x, n_order); });
  report.rank = field_rank(m);
  report.kernel_dim = n - report.rank;
  return report;
}

RadicalReport radical_function_field(const PairingData& data, std::uint64_t p) {
  RadicalReport report;
  report.gamma = data.gamma;
  report.z = "t (F_" + std::to_string(p) + ")";
  const std::size_t n = data.normalized.rows();
  report.dim = n;
  Matrix<qarith::FpLaurent> m =
      data.normalized.map([&](const LaurentInt& x) { return qarith::FpLaurent::reduce(x, p); });
  report.rank = rank(m);
  report.kernel_dim = n - report.rank;
  return report;
}

NondegeneracyReport verify_nondegenerate(const Borel& borel, const PairingEvaluator& tau,
                                         int height, const std::vector<mpq_class>& zs,
                                         std::optional<std::uint64_t> prime) {
  for (const auto& z : zs) {
    if (sgn(z) == 0) throw InvalidInput("specialization z must be nonzero");
  }
  NondegeneracyReport report;
  for (const auto& z : zs) {
    if (qarith::is_root_of_unity(z)) {
      report.warnings.push_back("z = " + qarith::format_rational(z) +
                                " is a root of unity; radical check skipped");
    }
  }
  borel.precompute(height);
  const auto box = rootdata::height_box(borel.datum().rank(), height);
  report.rows.resize(box.size());
  parallel_for(box.size(), [&](std::size_t k) {
    const RootVec& gamma = box[k];
    NondegeneracyRow& row = report.rows[k];
    row.gamma = gamma;
    const PairingData data = pairing_matrix(borel, tau, gamma);
    row.dim = data.basis.size();
    row.generic_nonzero = !data.det.is_zero();
    row.certificate = data.certificate;
    row.certificate_error = data.certificate_error;
    bool ok = row.generic_nonzero && row.certificate.has_value();
    for (const auto& z : zs) {
      const std::string text = qarith::format_rational(z);
      if (qarith::is_root_of_unity(z)) {
        row.kernels.emplace_back(text, std::nullopt);
        continue;
      }
      const std::size_t kd = radical_at(data, z).kernel_dim;
      row.kernels.emplace_back(text, kd);
      ok = ok && kd == 0;
    }
    if (prime) {
      row.function_field_kernel = radical_function_field(data, *prime).kernel_dim;
      ok = ok && *row.function_field_kernel == 0;
    }
    row.passed = ok;
  });
  for (const auto& row : report.rows) {
    const std::string at = "gamma " + row.gamma.to_string();
    if (!row.generic_nonzero) report.failures.push_back(at + ": determinant is zero in Q(q)");
    if (row.generic_nonzero && !row.certificate) {
      report.failures.push_back(at + ": " + row.certificate_error);
    }
    for (const auto& [z, kd] : row.kernels) {
      if (kd && *kd != 0) {
        report.failures.push_back(at + ": radical of dimension " + std::to_string(*kd) +
                                  " at z = " + z);
      }
    }
    if (row.function_field_kernel && *row.function_field_kernel != 0) {
      report.failures.push_back(at + ": radical of dimension " +
                                std::to_string(*row.function_field_kernel) +
                                " over the function field");
    }
  }
  return report;
}

// --- spot checks --------------------------------------------------------------------

namespace {

/// Monomial word * k_kappa, with the generator type fixed by the caller:
/// +1 for e-words (k e_j = q^{(kappa, alpha_j)} e_j k), -1 for f-words.
struct KMono {
  Word word;
  std::vector<int> kappa;
  friend auto operator<=>(const KMono&, const KMono&) = default;
};

using KElement = std::map<KMono, RatQ>;

long form_vec(const CartanDatum& datum, const std::vector<int>& kappa, const Word& w) {
  RootVec a(kappa);
  return datum.form(a, content(w, datum.rank()));
}

KMono times(const CartanDatum& datum, const KMono& a, const KMono& b, int type, long& exponent) {
  exponent += type * form_vec(datum, a.kappa, b.word);
  KMono out{a.word + b.word, a.kappa};
  for (std::size_t i = 0; i < out.kappa.size(); ++i) out.kappa[i] += b.kappa[i];
  return out;
}

void add(KElement& x, const KMono& m, const RatQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

KElement times(const CartanDatum& datum, const KElement& a, const KElement& b, int type) {
  KElement out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      long e = 0;
      KMono m = times(datum, ma, mb, type, e);
      add(out, m, ca * cb * RatQ(LaurentInt::q_power(e)));
    }
  }
  return out;
}

std::vector<int> simple_vec(std::size_t rank, std::size_t i, int c) {
  std::vector<int> v(rank, 0);
  v[i] = c;
  return v;
}

/// Antipode of word * k_kappa in normal form.
KElement antipode(const CartanDatum& datum, const KMono& m, int type) {
  const std::size_t rank = datum.rank();
  KElement out;
  add(out, KMono{Word(), std::vector<int>(rank, 0)}, RatQ(1));
  // S(w k) = S(k) S(w) = k^-1 S(w_n) ... S(w_1)
  std::vector<int> inv = m.kappa;
  for (auto& c : inv) c = -c;
  KElement k_part;
  add(k_part, KMono{Word(), inv}, RatQ(1));
  out = times(datum, out, k_part, type);
  for (std::size_t t = m.word.size(); t-- > 0;) {
    const std::size_t j = letter_index(m.word[t]);
    KElement s;
    if (type > 0) {
      // S(e_j) = -k_j^-1 e_j
      KElement kinv, e;
      add(kinv, KMono{Word(), simple_vec(rank, j, -1)}, RatQ(-1));
      add(e, KMono{Word(1, m.word[t]), std::vector<int>(rank, 0)}, RatQ(1));
      s = times(datum, kinv, e, type);
    } else {
      // S(f_j) = -f_j k_j
      add(s, KMono{Word(1, m.word[t]), simple_vec(rank, j, 1)}, RatQ(-1));
    }
    out = times(datum, out, s, type);
  }
  return out;
}

/// tau(x k_a, y k_b) = tau(x, y) q^{-(a, b)}.
RatQ tau_k(const PairingEvaluator& tau, const KMono& x, const KMono& y) {
  const RatQ base = tau.value(x.word, y.word);
  if (base.is_zero()) return base;
  const long e = tau.datum().form(RootVec(x.kappa), RootVec(y.kappa));
  return base * RatQ(LaurentInt::q_power(-e));
}

RatQ tau_k(const PairingEvaluator& tau, const KElement& x, const KElement& y) {
  RatQ total;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) {
      const RatQ t = tau_k(tau, mx, my);
      if (!t.is_zero()) total += cx * cy * t;
    }
  }
  return total;
}

}  // namespace

bool antipode_spot_check(const PairingEvaluator& tau, int height, std::string* detail) {
  const auto& datum = tau.datum();
  const std::size_t rank = datum.rank();
  for (const RootVec& gamma : rootdata::height_box(rank, height)) {
    const auto words = words_of_content(gamma);
    for (const Word& x : words) {
      const KElement sx = antipode(datum, KMono{x, std::vector<int>(rank, 0)}, +1);
      for (const Word& y : words) {
        const KElement sy = antipode(datum, KMono{y, std::vector<int>(rank, 0)}, -1);
        const RatQ lhs = tau_k(tau, sx, sy);
        const RatQ rhs = tau.value(x, y);
        if (!(lhs == rhs)) {
          if (detail) {
            *detail = "tau(Sx, Sy) != tau(x, y) at x = " + borel::display_word(x, "e") +
                      ", y = " + borel::display_word(y, "f");
          }
          return false;
        }
      }
    }
  }
  return true;
}

bool commutation_spot_check(const CartanDatum& datum, std::string* detail) {
  const std::size_t rank = datum.rank();
  const PairingEvaluator tau(datum);
  const std::vector<int> zero(rank, 0);
  using Triple = std::tuple<KMono, KMono, KMono>;
  // Triangular normal form f-word * k_kappa * e-word.
  using Mixed = std::map<std::tuple<Word, std::vector<int>, Word>, RatQ>;
  auto add_mixed = [](Mixed& m, const Word& f, const std::vector<int>& k, const Word& e,
                      const RatQ& c) {
    if (c.is_zero()) return;
    auto key = std::make_tuple(f, k, e);
    auto [it, inserted] = m.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  };

  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      const Word ei(1, borel::letter(i));
      const Word fj(1, borel::letter(j));
      const auto ki = simple_vec(rank, i, 1);
      const auto kj_inv = simple_vec(rank, j, -1);
      // Iterated coproducts of the generators.
      const std::vector<Triple> dx = {
          {KMono{ei, zero}, KMono{"", zero}, KMono{"", zero}},
          {KMono{"", ki}, KMono{ei, zero}, KMono{"", zero}},
          {KMono{"", ki}, KMono{"", ki}, KMono{ei, zero}},
      };
      const std::vector<Triple> dy = {
          {KMono{fj, zero}, KMono{"", kj_inv}, KMono{"", kj_inv}},
          {KMono{"", zero}, KMono{fj, zero}, KMono{"", kj_inv}},
          {KMono{"", zero}, KMono{"", zero}, KMono{fj, zero}},
      };
      Mixed rhs;
      for (const auto& [x0, x1, x2] : dx) {
        for (const auto& [y0, y1, y2] : dy) {
          const RatQ a = tau_k(tau, x0, y0);
          if (a.is_zero()) continue;
          const KElement sy2 = antipode(datum, y2, -1);
          KElement x2e;
          add(x2e, x2, RatQ(1));
          const RatQ b = tau_k(tau, x2e, sy2);
          if (b.is_zero()) continue;
          // y1 x1 = f k_a * k_b e' ... with x1 = e' k_b = q^{-(b, cont e')} k_b e'
          const long e = form_vec(datum, x1.kappa, x1.word);
          std::vector<int> k = y1.kappa;
          for (std::size_t t = 0; t < rank; ++t) k[t] += x1.kappa[t];
          add_mixed(rhs, y1.word, k, x1.word, a * b * RatQ(LaurentInt::q_power(-e)));
        }
      }
      Mixed lhs;
      add_mixed(lhs, fj, zero, ei, RatQ(1));
      if (i == j) {
        const RatQ c = RatQ(LaurentInt(1), q_diff(datum.sym(i)));
        add_mixed(lhs, "", ki, "", c);
        add_mixed(lhs, "", simple_vec(rank, i, -1), "", -c);
      }
      if (lhs != rhs) {
        if (detail) {
          std::ostringstream os;
          os << "mixed product formula fails for e" << i + 1 << " f" << j + 1;
          *detail = os.str();
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace qkac::drinfeld
