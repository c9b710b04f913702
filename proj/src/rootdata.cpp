#include "qkac/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include <gmpxx.h>
#include <json.hpp>

#include "qkac/error.hpp"

namespace qkac::rootdata {

// --- RootVec / Weight ---------------------------------------------------------

RootVec RootVec::simple(std::size_t rank, std::size_t i) {
  RootVec v = RootVec::zero(rank);
  v[i] = 1;
  return v;
}

int RootVec::height() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

bool RootVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

bool RootVec::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

bool RootVec::dominated_by(const RootVec& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

RootVec& RootVec::operator+=(const RootVec& other) {
  if (other.rank() != rank()) throw InvalidInput("root vectors of different rank");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RootVec& RootVec::operator-=(const RootVec& other) {
  if (other.rank() != rank()) throw InvalidInput("root vectors of different rank");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

namespace {
std::string join(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}
}  // namespace

std::string RootVec::to_string() const { return "(" + join(coords_, ",") + ")"; }

bool Weight::is_dominant() const {
  return std::all_of(pairings_.begin(), pairings_.end(), [](int p) { return p >= 0; });
}

std::string Weight::to_string() const { return "[" + join(pairings_, ",") + "]"; }

// --- CartanDatum ----------------------------------------------------------------

namespace {

// The generalized Cartan matrix axioms, independent of any symmetrizer.
void check_gcm(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw InvalidInput("rank must be positive");
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidInput("cartan matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) {
      throw InvalidInput("cartan diagonal must be 2 (A[" + std::to_string(i) + "][" +
                         std::to_string(i) + "] = " + std::to_string(a[i][i]) + ")");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::string at = "A[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (a[i][j] > 0) throw InvalidInput("off-diagonal entries must be <= 0 (" + at + ")");
      if ((a[i][j] == 0) != (a[j][i] == 0)) {
        throw InvalidInput("A[i][j] = 0 must imply A[j][i] = 0 (" + at + ")");
      }
    }
  }
}

}  // namespace

CartanDatum::CartanDatum(std::string name, std::vector<std::vector<int>> cartan,
                         std::vector<int> symmetrizer)
    : name_(std::move(name)), cartan_(std::move(cartan)), sym_(std::move(symmetrizer)) {
  check_gcm(cartan_);
  const std::size_t n = cartan_.size();
  if (sym_.size() != n) throw InvalidInput("symmetrizer length must equal the rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (sym_[i] < 1) throw InvalidInput("symmetrizer entries must be >= 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sym_[i] * cartan_[i][j] != sym_[j] * cartan_[j][i]) {
        throw InvalidInput("symmetrizability d_i A[i][j] = d_j A[j][i] fails (A[" +
                           std::to_string(i) + "][" + std::to_string(j) + "])");
      }
    }
  }
}

namespace {

struct PresetSpec {
  const char* name;
  std::vector<std::vector<int>> cartan;
};

const std::vector<PresetSpec>& presets() {
  static const std::vector<PresetSpec> table = {
      {"A1", {{2}}},
      {"A2", {{2, -1}, {-1, 2}}},
      {"B2", {{2, -1}, {-2, 2}}},
      {"G2", {{2, -1}, {-3, 2}}},
      {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
      {"A1~", {{2, -2}, {-2, 2}}},
      {"A2~tw", {{2, -1}, {-4, 2}}},
  };
  return table;
}

std::string canonical_preset_name(std::string name) {
  if (name == "A1^(1)" || name == "affA1" || name == "A1aff") return "A1~";
  if (name == "A2^(2)" || name == "A2tw" || name == "A2~" || name == "affA2tw") return "A2~tw";
  return name;
}

}  // namespace

CartanDatum CartanDatum::preset(const std::string& name) {
  const std::string canonical = canonical_preset_name(name);
  for (const auto& p : presets()) {
    if (canonical == p.name) return CartanDatum(p.name, p.cartan, minimal_symmetrizer(p.cartan));
  }
  std::string known;
  for (const auto& p : presets()) known += std::string(known.empty() ? "" : ", ") + p.name;
  throw InvalidInput("unknown preset '" + name + "' (known: " + known + ")");
}

std::vector<std::string> CartanDatum::preset_names() {
  std::vector<std::string> out;
  for (const auto& p : presets()) out.emplace_back(p.name);
  return out;
}

CartanDatum CartanDatum::from_json(const std::string& text, const std::string& name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("datum file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("datum must be a JSON object");
  if (!doc.contains("cartan")) throw InvalidInput("datum is missing \"cartan\"");
  std::vector<std::vector<int>> cartan;
  std::vector<int> sym;
  try {
    cartan = doc.at("cartan").get<std::vector<std::vector<int>>>();
    if (doc.contains("symmetrizer")) sym = doc.at("symmetrizer").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("datum has malformed entries: ") + e.what());
  }
  if (doc.contains("rank")) {
    if (!doc.at("rank").is_number_integer()) throw InvalidInput("\"rank\" must be an integer");
    const long rank = doc.at("rank").get<long>();
    if (rank < 1) throw InvalidInput("rank must be positive");
    if (static_cast<std::size_t>(rank) != cartan.size()) {
      throw InvalidInput("\"rank\" does not match the size of \"cartan\"");
    }
  }
  if (sym.empty()) sym = minimal_symmetrizer(cartan);
  const std::string datum_name = doc.contains("name") && doc.at("name").is_string()
                                     ? doc.at("name").get<std::string>()
                                     : name;
  return CartanDatum(datum_name, std::move(cartan), std::move(sym));
}

std::string CartanDatum::to_json() const {
  nlohmann::json doc;
  doc["name"] = name_;
  doc["rank"] = rank();
  doc["cartan"] = cartan_;
  doc["symmetrizer"] = sym_;
  return doc.dump();
}

long CartanDatum::form(const RootVec& gamma, const RootVec& delta) const {
  long total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (gamma[i] == 0) continue;
    total += static_cast<long>(gamma[i]) * form_simple(i, delta);
  }
  return total;
}

long CartanDatum::form_simple(std::size_t i, const RootVec& gamma) const {
  long total = 0;
  for (std::size_t j = 0; j < rank(); ++j) total += static_cast<long>(simple_form(i, j)) * gamma[j];
  return total;
}

long CartanDatum::form_weight_root(const Weight& lambda, std::size_t i) const {
  return static_cast<long>(sym_[i]) * lambda[i];
}

int CartanDatum::pairing(std::size_t i, const RootVec& gamma) const {
  int total = 0;
  for (std::size_t j = 0; j < rank(); ++j) total += cartan_[i][j] * gamma[j];
  return total;
}

Weight CartanDatum::shift(const Weight& lambda, const RootVec& gamma) const {
  std::vector<int> p = lambda.pairings();
  for (std::size_t i = 0; i < rank(); ++i) p[i] -= pairing(i, gamma);
  return Weight(std::move(p));
}

RootVec CartanDatum::reflect(std::size_t i, const RootVec& gamma) const {
  RootVec out = gamma;
  out[i] -= pairing(i, gamma);
  return out;
}

std::vector<int> minimal_symmetrizer(const std::vector<std::vector<int>>& cartan) {
  check_gcm(cartan);
  const std::size_t n = cartan.size();
  std::vector<mpq_class> d(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> component{root};
    d[root] = 1;
    seen[root] = true;
    for (std::size_t k = 0; k < component.size(); ++k) {
      const std::size_t i = component[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || cartan[i][j] == 0) continue;
        if (cartan[j][i] == 0) throw InvalidInput("A[i][j] = 0 must imply A[j][i] = 0");
        // d_j = d_i A[i][j] / A[j][i]
        mpq_class dj = d[i] * cartan[i][j] / cartan[j][i];
        dj.canonicalize();
        if (!seen[j]) {
          if (sgn(dj) <= 0) throw InvalidInput("cartan matrix is not symmetrizable");
          d[j] = dj;
          seen[j] = true;
          component.push_back(j);
        } else if (d[j] != dj) {
          throw InvalidInput("cartan matrix is not symmetrizable");
        }
      }
    }
    mpz_class l = 1;
    for (auto i : component) l = lcm(l, mpz_class(d[i].get_den()));
    mpz_class g = 0;
    for (auto i : component) {
      d[i] *= l;
      g = gcd(g, mpz_class(d[i].get_num()));
    }
    for (auto i : component) d[i] /= g;
  }
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(d[i].get_num().get_si());
  return out;
}

// --- boxes ------------------------------------------------------------------

namespace {
void compositions(std::size_t rank, int remaining, std::vector<int>& current,
                  std::vector<RootVec>& out) {
  if (current.size() + 1 == rank) {
    current.push_back(remaining);
    out.emplace_back(current);
    current.pop_back();
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    current.push_back(c);
    compositions(rank, remaining - c, current, out);
    current.pop_back();
  }
}
}  // namespace

std::vector<RootVec> height_slice(std::size_t rank, int height) {
  std::vector<RootVec> out;
  if (height < 0 || rank == 0) return out;
  std::vector<int> current;
  compositions(rank, height, current, out);
  return out;
}

std::vector<RootVec> height_box(std::size_t rank, int height) {
  std::vector<RootVec> out;
  for (int h = 0; h <= height; ++h) {
    auto slice = height_slice(rank, h);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

// --- dot action -----------------------------------------------------------------

ShiftedWeight dot_reflect(const CartanDatum& datum, std::size_t i, const ShiftedWeight& mu) {
  const int step = mu.pairings[i] + 1;
  RootVec delta = step * RootVec::simple(datum.rank(), i);
  return ShiftedWeight{datum.shift(mu.pairings, delta), mu.offset + delta};
}

std::vector<NumeratorTerm> orbit_numerator(const CartanDatum& datum, const Weight& lambda,
                                           int height) {
  if (lambda.rank() != datum.rank()) throw InvalidInput("weight rank does not match the datum");
  if (!lambda.is_dominant()) {
    throw NonDominant("weight " + lambda.to_string() + " is not dominant");
  }
  std::map<RootVec, int, ByHeight> sign;
  std::deque<ShiftedWeight> queue;
  ShiftedWeight start{lambda, RootVec::zero(datum.rank())};
  sign[start.offset] = 1;
  queue.push_back(start);
  while (!queue.empty()) {
    const ShiftedWeight node = queue.front();
    queue.pop_front();
    const int s = sign.at(node.offset);
    for (std::size_t i = 0; i < datum.rank(); ++i) {
      ShiftedWeight next = dot_reflect(datum, i, node);
      if (next.offset.height() > height) continue;
      auto [it, inserted] = sign.emplace(next.offset, -s);
      if (inserted) {
        queue.push_back(std::move(next));
      } else if (it->second != -s) {
        throw CheckFailure("inconsistent Weyl sign at offset " + next.offset.to_string());
      }
    }
  }
  std::vector<NumeratorTerm> out;
  out.reserve(sign.size());
  for (const auto& [offset, sg] : sign) out.push_back({offset, sg});
  return out;
}

// --- Peterson recurrence --------------------------------------------------------

std::map<RootVec, long, ByHeight> peterson_multiplicities(const CartanDatum& datum, int height) {
  const std::size_t n = datum.rank();
  const auto box = height_box(n, height);
  std::map<RootVec, mpq_class, ByHeight> c;
  std::map<RootVec, long, ByHeight> m;

  // sum_{k >= 2, beta/k in Q+} m_{beta/k} / k
  auto divisor_tail = [&](const RootVec& beta) {
    mpq_class total = 0;
    int g = 0;
    for (std::size_t i = 0; i < n; ++i) g = std::gcd(g, beta[i]);
    for (int k = 2; k <= g; ++k) {
      if (g % k != 0) continue;
      std::vector<int> coords(beta.coords());
      for (auto& x : coords) x /= k;
      auto it = m.find(RootVec(coords));
      if (it != m.end()) total += mpq_class(it->second, k);
    }
    total.canonicalize();
    return total;
  };

  for (const RootVec& beta : box) {
    const int h = beta.height();
    if (h == 0) continue;
    if (h == 1) {
      c[beta] = 1;
      m[beta] = 1;
      continue;
    }
    long two_rho = 0;
    for (std::size_t i = 0; i < n; ++i) two_rho += 2L * beta[i] * datum.sym(i);
    const long lhs = datum.form(beta, beta) - two_rho;

    mpq_class rhs = 0;
    // ordered splittings beta = b1 + b2 with b1, b2 nonzero in Q+
    for (const RootVec& b1 : box) {
      const int h1 = b1.height();
      if (h1 == 0 || h1 >= h || !b1.dominated_by(beta)) continue;
      const RootVec b2 = beta - b1;
      const auto c1 = c.find(b1);
      const auto c2 = c.find(b2);
      if (c1 == c.end() || c2 == c.end() || sgn(c1->second) == 0 || sgn(c2->second) == 0) continue;
      rhs += datum.form(b1, b2) * c1->second * c2->second;
    }
    rhs.canonicalize();

    const mpq_class tail = divisor_tail(beta);
    mpq_class cb;
    if (lhs == 0) {
      // beta is not a root here; the recurrence only constrains the right side.
      if (sgn(rhs) != 0) {
        throw CheckFailure("Peterson recurrence inconsistent at " + beta.to_string());
      }
      cb = tail;
    } else {
      cb = rhs / lhs;
      cb.canonicalize();
    }
    c[beta] = cb;
    mpq_class mult = cb - tail;
    mult.canonicalize();
    if (mult.get_den() != 1 || sgn(mult) < 0) {
      throw CheckFailure("Peterson recurrence produced a non-integral multiplicity at " +
                         beta.to_string());
    }
    if (sgn(mult) > 0) m[beta] = mult.get_num().get_si();
  }
  return m;
}

}  // namespace qkac::rootdata
