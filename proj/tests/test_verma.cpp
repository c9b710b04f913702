#include <doctest.h>

#include "helpers.hpp"
#include "qkac/drinfeld.hpp"
#include "qkac/error.hpp"
#include "qkac/verma.hpp"

using namespace qkac;
using namespace qkac::verma;
using borel::single;

namespace {
RootVec rv(std::vector<int> c) { return RootVec(std::move(c)); }
FreeElement<LaurentInt> lone(const Word& w) { return {{w, LaurentInt(1)}}; }
}  // namespace

TEST_CASE("e acting on Verma vectors") {
  const auto a1 = CartanDatum::preset("A1");
  CHECK(act_e(a1, 0, Weight({1}), lone("0")) == lone(""));
  CHECK(act_e(a1, 0, Weight({1}), lone("00")).empty());
  CHECK(act_e(a1, 0, Weight({1}), lone("")).empty());
  // [n]_q [p - n + 1]_q f^{n-1} v
  CHECK(act_e(a1, 0, Weight({3}), lone("00")) ==
        FreeElement<LaurentInt>{{"0", qarith::q_integer(2) * qarith::q_integer(2)}});
  const auto a2 = CartanDatum::preset("A2");
  CHECK(act_e(a2, 1, Weight({1, 0}), lone("0")).empty());
}

TEST_CASE("Gram matrix examples") {
  const Borel b(CartanDatum::preset("A1"), 4);
  const auto g1 = gram_matrix(b, Weight({1}), rv({1}), {2});
  CHECK(g1.gram(0, 0) == LaurentInt(1));
  CHECK(g1.generic_rank == 1);
  const auto g2 = gram_matrix(b, Weight({1}), rv({2}), {2});
  CHECK(g2.gram(0, 0).is_zero());
  CHECK(g2.generic_rank == 0);
  const auto g0 = gram_matrix(b, Weight({0}), rv({1}));
  CHECK(g0.gram(0, 0).is_zero());
  CHECK(g0.generic_rank == 0);
}

TEST_CASE("Gram matrices are symmetric with z-independent rank") {
  for (const auto& name : {"A2", "B2", "G2", "A1~"}) {
    const auto d = CartanDatum::preset(name);
    const Borel b(d, 4);
    for (const auto& p : {std::vector<int>{0, 0}, std::vector<int>{1, 0}, std::vector<int>{1, 2}}) {
      for (const auto& g : rootdata::height_box(2, 4)) {
        const auto rep = gram_matrix(b, Weight(p), g, {2, mpq_class(1, 3), mpq_class(-7, 5)});
        CHECK(rep.symmetric);
        for (const auto& [z, r] : rep.rank_at_z) CHECK(r == rep.generic_rank);
      }
    }
  }
}

TEST_CASE("integrability witnesses") {
  const Borel a1(CartanDatum::preset("A1"), 4);
  CHECK(integrability_witness(a1, Weight({1})).passed);
  CHECK(integrability_witness(a1, Weight({0})).passed);
  const Borel a2(CartanDatum::preset("A2"), 4);
  CHECK(integrability_witness(a2, Weight({1, 0})).passed);
  CHECK_THROWS_AS(integrability_witness(a2, Weight({-1, 0})), NonDominant);
}

TEST_CASE("Casimir examples") {
  const auto a1 = CartanDatum::preset("A1");
  const Borel b(a1, 4);
  const drinfeld::PairingEvaluator tau(a1);
  const auto r0 = casimir_check(b, tau, Weight({1}), rv({0}), 2);
  CHECK(r0.passed);
  CHECK(r0.scalar == 1);
  const auto r1 = casimir_check(b, tau, Weight({1}), rv({1}), 2);
  CHECK(r1.passed);
  CHECK(r1.exponent == 2);
  CHECK(r1.scalar == 4);
  const auto r2 = casimir_check(b, tau, Weight({0}), rv({1}), 2);
  CHECK(r2.passed);
  CHECK(r2.exponent == 0);
  CHECK(r2.scalar == 1);
}

TEST_CASE("Casimir exponent is path independent") {
  for (const auto& name : {"A2", "B2", "G2", "A1~", "A2~tw"}) {
    const auto d = CartanDatum::preset(name);
    for (const auto& g : rootdata::height_box(2, 4)) {
      const auto words = borel::words_of_content(g);
      const long e = casimir_exponent(d, Weight({1, 2}), words.front());
      for (const auto& w : words) CHECK(casimir_exponent(d, Weight({1, 2}), w) == e);
    }
  }
}

TEST_CASE("Casimir acts by the predicted scalar") {
  for (const auto& name : {"A2", "B2", "A1~"}) {
    const auto d = CartanDatum::preset(name);
    const Borel b(d, 3);
    const drinfeld::PairingEvaluator tau(d);
    for (const auto& p : {std::vector<int>{0, 0}, std::vector<int>{0, 1}, std::vector<int>{2, 1}}) {
      for (const auto& g : rootdata::height_box(2, 3)) {
        const auto rep = casimir_check(b, tau, Weight(p), g, mpq_class(1, 3));
        CHECK_MESSAGE(rep.passed, name);
        CHECK(rep.path_independent);
      }
    }
  }
}

TEST_CASE("braid operators") {
  const auto a2 = CartanDatum::preset("A2");
  const RatQ qinv(LaurentInt::q_power(-1));
  // T_1(e_2) = e_1 e_2 - q^-1 e_2 e_1 up to the ordering convention of the formula.
  const auto t = braid_e(a2, 0, 1);
  CHECK(t.size() == 2);
  CHECK(t.count("01") == 1);
  CHECK(t.count("10") == 1);
  for (const auto& name : {"A2", "B2", "G2", "A1~"}) {
    const auto d = CartanDatum::preset(name);
    const Borel b(d, 5);
    const drinfeld::PairingEvaluator tau(d);
    for (std::size_t i = 0; i < 2; ++i) {
      const auto rep = braid_spot_check(b, tau, i);
      CHECK_MESSAGE(rep.passed, name);
    }
  }
}
