// Independent reference computations used to cross-check the library.
// Nothing here calls the derivation, pairing or orbit code under test.
#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qkac/borel.hpp"
#include "qkac/rootdata.hpp"

namespace oracle {

using qkac::LaurentInt;
using qkac::RatQ;
using qkac::borel::FreeElement;
using qkac::borel::Word;
using qkac::rootdata::CartanDatum;
using qkac::rootdata::RootVec;

inline std::size_t idx(char c) { return static_cast<std::size_t>(c - '0'); }

// --- coproduct expansion ------------------------------------------------------
//
// A symbol is a generator (e or f) or a torus element k_{+-alpha_j}. Terms of
// Delta(word) are kept as symbol sequences and normalized by bubbling every
// torus symbol to the right end with k_gamma g_j = q^{(gamma, wt g_j)} g_j k_gamma.

struct Sym {
  bool torus;
  std::size_t j;
};

struct Normalized {
  long q_exp = 0;
  Word gens;
  RootVec torus;  // sum of the torus weights
};

/// `sign` is +1 for e-generators (weight alpha_j) and -1 for f-generators.
inline Normalized normalize(const CartanDatum& d, std::vector<Sym> seq, int sign, int torus_sign) {
  Normalized out;
  out.torus = RootVec::zero(d.rank());
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      if (seq[k].torus && !seq[k + 1].torus) {
        // k_{torus_sign alpha_a} g_b = q^{torus_sign * sign * (alpha_a, alpha_b)} g_b k
        out.q_exp += static_cast<long>(torus_sign) * sign * d.simple_form(seq[k].j, seq[k + 1].j);
        std::swap(seq[k], seq[k + 1]);
        moved = true;
      }
    }
  }
  for (const Sym& s : seq) {
    if (s.torus) {
      out.torus[s.j] += torus_sign;
    } else {
      out.gens.push_back(qkac::borel::letter(s.j));
    }
  }
  return out;
}

struct TensorTerm {
  Normalized left, right;
};

/// Delta(e_w) with Delta(e_i) = e_i (x) 1 + k_i (x) e_i.
inline std::vector<TensorTerm> coproduct_e(const CartanDatum& d, const Word& w) {
  std::vector<TensorTerm> out;
  const std::size_t n = w.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Sym> left, right;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (1u << k)) {
        left.push_back({true, idx(w[k])});
        right.push_back({false, idx(w[k])});
      } else {
        left.push_back({false, idx(w[k])});
      }
    }
    out.push_back({normalize(d, left, +1, +1), normalize(d, right, +1, +1)});
  }
  return out;
}

/// Delta(f_w) with Delta(f_i) = f_i (x) k_i^{-1} + 1 (x) f_i.
inline std::vector<TensorTerm> coproduct_f(const CartanDatum& d, const Word& w) {
  std::vector<TensorTerm> out;
  const std::size_t n = w.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Sym> left, right;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (1u << k)) {
        left.push_back({false, idx(w[k])});
        right.push_back({true, idx(w[k])});
      } else {
        right.push_back({false, idx(w[k])});
      }
    }
    out.push_back({normalize(d, left, -1, -1), normalize(d, right, -1, -1)});
  }
  return out;
}

inline void add(FreeElement<RatQ>& x, const Word& w, const RatQ& c) { qkac::borel::add_term(x, w, c); }

/// Delta(x) = r_{i,+}(x) k_i (x) e_i + ...
inline FreeElement<RatQ> r_plus(const CartanDatum& d, std::size_t i, const Word& w) {
  FreeElement<RatQ> out;
  for (const auto& t : coproduct_e(d, w)) {
    if (t.right.gens == Word(1, qkac::borel::letter(i))) add(out, t.left.gens, LaurentInt::q_power(t.left.q_exp + t.right.q_exp));
  }
  return out;
}

/// Delta(x) = e_i k_{gamma - alpha_i} (x) r'_{i,+}(x) + ...
inline FreeElement<RatQ> r_prime_plus(const CartanDatum& d, std::size_t i, const Word& w) {
  FreeElement<RatQ> out;
  for (const auto& t : coproduct_e(d, w)) {
    if (t.left.gens == Word(1, qkac::borel::letter(i))) add(out, t.right.gens, LaurentInt::q_power(t.left.q_exp + t.right.q_exp));
  }
  return out;
}

/// Delta(y) = ... (x) f_i k: the left factors with a lone f_i on the right.
inline FreeElement<RatQ> r_minus(const CartanDatum& d, std::size_t i, const Word& w) {
  FreeElement<RatQ> out;
  for (const auto& t : coproduct_f(d, w)) {
    if (t.right.gens == Word(1, qkac::borel::letter(i))) add(out, t.left.gens, LaurentInt::q_power(t.left.q_exp + t.right.q_exp));
  }
  return out;
}

/// Delta(y) = f_i (x) ... : the right factors with a lone f_i on the left.
inline FreeElement<RatQ> r_prime_minus(const CartanDatum& d, std::size_t i, const Word& w) {
  FreeElement<RatQ> out;
  for (const auto& t : coproduct_f(d, w)) {
    if (t.left.gens == Word(1, qkac::borel::letter(i))) add(out, t.right.gens, LaurentInt::q_power(t.left.q_exp + t.right.q_exp));
  }
  return out;
}

template <class F>
FreeElement<RatQ> linear(const FreeElement<RatQ>& x, F&& f) {
  FreeElement<RatQ> out;
  for (const auto& [w, c] : x) {
    for (const auto& [v, e] : f(w)) add(out, v, c * e);
  }
  return out;
}

// --- right-strip pairing ------------------------------------------------------
//
// tau(x, y' f_i) = tau(e_i, f_i) tau(r_{i,+}(x), y') with r from the coproduct
// expansion above, anchored at tau(1, 1) = 1.

class RightStripPairing {
 public:
  explicit RightStripPairing(CartanDatum d) : d_(std::move(d)) {}

  RatQ value(const Word& x, const Word& y) {
    if (x.size() != y.size()) return RatQ(0);
    if (y.empty()) return RatQ(1);
    const auto key = std::make_pair(x, y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t i = idx(y.back());
    const Word rest = y.substr(0, y.size() - 1);
    RatQ total(0);
    for (const auto& [w, c] : r_plus(d_, i, x)) total += c * value(w, rest);
    total *= generator(i);
    memo_.emplace(key, total);
    return total;
  }

  RatQ value(const FreeElement<RatQ>& x, const FreeElement<RatQ>& y) {
    RatQ total(0);
    for (const auto& [wx, cx] : x) {
      for (const auto& [wy, cy] : y) total += cx * cy * value(wx, wy);
    }
    return total;
  }

  /// -1 / (q_i - q_i^{-1})
  RatQ generator(std::size_t i) const {
    const long di = d_.sym(i);
    return RatQ(LaurentInt(-1), LaurentInt::q_power(di) - LaurentInt::q_power(-di));
  }

 private:
  CartanDatum d_;
  std::map<std::pair<Word, Word>, RatQ> memo_;
};

// --- Weyl group by word enumeration ----------------------------------------------

/// s_i acting on a weight given by pairings: s_i mu = mu - <mu, h_i> alpha_i.
inline std::vector<long> reflect_weight(const CartanDatum& d, std::size_t i, std::vector<long> p) {
  const long pi = p[i];
  for (std::size_t j = 0; j < d.rank(); ++j) p[j] -= pi * d.cartan(j, i);
  return p;
}

/// {lambda - w o lambda : sgn w} for every w given by a word of length <= max_len
/// whose offset has height <= height. Offsets computed through w(lambda + rho).
inline std::map<RootVec, int> orbit_by_words(const CartanDatum& d, const std::vector<int>& lambda,
                                             int height, int max_len) {
  struct State {
    std::vector<long> pairings;  // of w(lambda + rho)
    RootVec offset;              // lambda + rho - w(lambda + rho)
    int sign;
  };
  std::vector<long> start(lambda.begin(), lambda.end());
  for (auto& p : start) p += 1;
  std::map<RootVec, int> out;
  std::vector<State> layer{{start, RootVec::zero(d.rank()), 1}};
  out[RootVec::zero(d.rank())] = 1;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<State> next;
    for (const State& s : layer) {
      for (std::size_t i = 0; i < d.rank(); ++i) {
        State t{reflect_weight(d, i, s.pairings), s.offset, -s.sign};
        t.offset[i] += static_cast<int>(s.pairings[i]);
        if (t.offset.height() <= height && t.offset.is_nonnegative()) {
          if (!out.count(t.offset)) out[t.offset] = t.sign;
        }
        next.push_back(std::move(t));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Positive roots up to `height`: the W-orbit of the simple roots, plus the
/// multiples of `delta` (affine imaginary roots, multiplicity 1) when given.
inline std::map<RootVec, long> roots_by_reflection(const CartanDatum& d, int height,
                                                   const RootVec* delta = nullptr) {
  std::set<RootVec> found;
  std::vector<RootVec> frontier;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    frontier.push_back(RootVec::simple(d.rank(), i));
    found.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& r : frontier) {
      for (std::size_t i = 0; i < d.rank(); ++i) {
        RootVec s = r;
        long c = 0;
        for (std::size_t j = 0; j < d.rank(); ++j) c += static_cast<long>(d.cartan(i, j)) * r[j];
        s[i] -= static_cast<int>(c);
        if (!s.is_nonnegative() || s.is_zero() || s.height() > height) continue;
        if (found.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  std::map<RootVec, long> out;
  for (const auto& r : found) out[r] = 1;
  if (delta) {
    for (int k = 1; k * delta->height() <= height; ++k) out[k * *delta] = 1;
  }
  return out;
}

}  // namespace oracle
