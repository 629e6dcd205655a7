#include <doctest.h>

#include <random>

#include "meander/catalog.hpp"
#include "meander/errors.hpp"
#include "meander/invariants.hpp"
#include "meander/moves.hpp"

using namespace meander;

namespace {

Diagram closure(std::vector<int> p) { return close_open_meander(meander_from_permutation(std::move(p))); }
Diagram gauss(const char* s) { return realize_gauss_code(parse_gauss_code(s)); }

}  // namespace

TEST_CASE("laurent polynomials") {
  auto p = LaurentPolynomial::from_terms({{-3, 1}, {2, -2}});
  CHECK(p.min_exponent() == -3);
  CHECK(p.max_exponent() == 2);
  CHECK(LaurentPolynomial::parse(p.serialize()) == p);
  CHECK((p - p).is_zero());
  CHECK((p * LaurentPolynomial::monomial(0)) == p);
  CHECK(p.inverted().inverted() == p);
  CHECK(p.scaled_exponents(4).divided_exponents(4) == p);
  CHECK_THROWS_AS(p.divided_exponents(2), DomainError);
  CHECK(LaurentPolynomial::from_terms({{-5, -1}, {3, -1}, {7, 1}}).pretty("A") == "-A^-5 - A^3 + A^7");
  CHECK_THROWS_AS(LaurentPolynomial::monomial(0, INT64_MAX) + LaurentPolynomial::monomial(0, 1), std::overflow_error);
}

TEST_CASE("modular arithmetic") {
  ModP a(123456789);
  CHECK((a * a.inverse()).v == 1);
  CHECK(ModP::from_signed(-1).v == ModP::kP - 1);
  auto p = LaurentPolynomial::from_terms({{0, 3}, {2, 1}});
  CHECK(p.eval_mod(5) == 28);
}

TEST_CASE("bracket of small diagrams") {
  Diagram unknot = realize_gauss_code(GaussCode{{{}}});
  CHECK(kauffman_bracket(unknot) == LaurentPolynomial::monomial(0));
  LaurentPolynomial t = kauffman_bracket(closure({3, 2, 1}));
  CHECK(t.terms().size() == 3);
  CHECK(t.max_exponent() - t.min_exponent() == 12);
  CHECK(t == kauffman_bracket_state_sum(closure({3, 2, 1})));
}

TEST_CASE("transfer matrix agrees with the state sum on all closures up to order 9") {
  int checked = 0;
  for (int n = 1; n <= 9; ++n)
    for (const auto& m : enumerate_open_meanders(n)) {
      Diagram d = close_open_meander(m);
      CHECK(kauffman_bracket(d) == kauffman_bracket_state_sum(d));
      ++checked;
    }
  CHECK(checked == 1 + 1 + 2 + 3 + 8 + 14 + 42 + 81 + 262);
}

TEST_CASE("bracket is invariant under random Reidemeister moves") {
  std::mt19937_64 rng(7);
  Diagram d = gauss("{-1, 2, -3, -4, 5, 3, -2, 1, 4, -5}");
  LaurentPolynomial nb = normalized_bracket(d);
  bool kinds[5] = {};
  for (int step = 0; step < 300; ++step) {
    auto mv = random_move(d, rng);
    REQUIRE(mv.has_value());
    kinds[static_cast<int>(mv->kind)] = true;
    if (mv->result.crossing_count() > 14) continue;
    d = mv->result;
    CHECK(normalized_bracket(d) == nb);
  }
  CHECK(kinds[0]);
  CHECK(kinds[2]);
}

TEST_CASE("single moves") {
  Diagram t = closure({3, 2, 1});
  auto k = r1_add(t, 0, true, 1);
  REQUIRE(k.has_value());
  CHECK(k->crossing_count() == 4);
  CHECK(normalized_bracket(*k) == normalized_bracket(t));
  CHECK(kauffman_bracket(*k) != kauffman_bracket(t));
  auto back = r1_removals(*k);
  REQUIRE_FALSE(back.empty());
  CHECK(fingerprint(back[0]) == fingerprint(t));
  CHECK(r2_removals(t).empty());
  CHECK(r1_removals(t).empty());
}

TEST_CASE("fingerprints") {
  Diagram a = closure({1, 8, 5, 6, 7, 4, 3, 2, 9});
  Diagram b = closure({1, 8, 7, 6, 5, 2, 3, 4, 9});
  Diagram c = closure({1, 8, 7, 4, 5, 6, 3, 2, 9});
  CHECK(fingerprint(a) == fingerprint(b));
  CHECK(fingerprint(a) == fingerprint(c));
  Diagram f8 = gauss("{-1, 2, -3, -4, 5, 3, -2, 1, 4, -5}");
  auto ref = reference_diagram("4_1");
  REQUIRE(ref.has_value());
  CHECK(fingerprint(f8) == fingerprint(*ref));
  CHECK(fingerprint(a) == fingerprint(mirror(a)));
  CHECK_FALSE(fingerprint(a) == fingerprint(f8));
}

TEST_CASE("determinants and Alexander polynomials") {
  Diagram unknot = realize_gauss_code(GaussCode{{{}}});
  CHECK(determinant(unknot) == 1);
  Diagram t = closure({3, 2, 1});
  CHECK(determinant(t) == 3);
  Diagram f8 = gauss("{-1, 2, -3, -4, 5, 3, -2, 1, 4, -5}");
  CHECK(determinant(f8) == 5);
  CHECK(alexander_polynomial(t) == LaurentPolynomial::from_terms({{0, 1}, {1, -1}, {2, 1}}));
  CHECK(alexander_polynomial(f8) == LaurentPolynomial::from_terms({{0, -1}, {1, 3}, {2, -1}}));
  // det = |bracket at A = e^(i pi/4)| agrees with the Alexander value at -1
  for (const auto& m : enumerate_open_meanders(9)) {
    Diagram d = close_open_meander(m);
    auto al = alexander_polynomial(d);
    std::int64_t v = 0, s = 1;
    for (int e = al.min_exponent(); e <= al.max_exponent(); ++e, s = -s) v += s * al.coefficient(e);
    CHECK(determinant(d) == (v < 0 ? -v : v));
    CHECK(determinant(d) == determinant_from_bracket(normalized_bracket(d)));
  }
}

TEST_CASE("linking numbers") {
  auto lk = linking_matrix(closure({1, 2}));
  CHECK(std::abs(lk[0][1]) == 1);
  CHECK(lk[0][1] == lk[1][0]);
  auto l4 = linking_matrix(closure({1, 4, 3, 2}));
  CHECK(std::abs(l4[0][1]) == 2);
  Diagram split = realize_gauss_code(GaussCode{{{}, {}}});
  CHECK(linking_matrix(split)[0][1] == 0);
}

TEST_CASE("coloring module") {
  CHECK(coloring_module(closure({3, 2, 1})).str() == "Z/3");
  CHECK(coloring_module(closure({1, 2})).str() == "Z/2");
  CHECK(smith_invariants({{2, 0}, {0, 3}}) == std::vector<std::int64_t>{1, 6});
}
