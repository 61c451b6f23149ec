#include "oracles/oracles.hpp"
#include "support.hpp"

#include "polymat/errors.hpp"
#include "polymat/lab.hpp"
#include "polymat/polymatroid.hpp"
#include "polymat/primes.hpp"

#include <doctest.h>

using namespace polymat;
using testing::ideal;
using testing::mono;

namespace {

/// Every exponent-cap vector with entries 0..c in n variables.
std::vector<std::vector<Exponent>> cap_vectors(int n, int c) {
  std::vector<std::vector<Exponent>> out;
  std::vector<Exponent> cur(n, 0);
  while (true) {
    out.push_back(cur);
    int i = 0;
    while (i < n && cur[i] == c) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

std::vector<MonomialIdeal> single_degree_corpus() {
  lab::IdealSpace s;
  s.nvars = 3;
  s.min_degree = 2;
  s.max_degree = 2;
  s.max_generators = 6;
  auto out = lab::enumerate_space(s);
  s.min_degree = s.max_degree = 3;
  s.max_generators = 4;
  for (auto& I : lab::enumerate_space(s)) out.push_back(std::move(I));
  return out;
}

}  // namespace

TEST_CASE("polymatroidal examples") {
  const auto opening = is_polymatroidal(ideal("x1^2, x1*x2, x3^2, x2*x3", 3));
  CHECK_FALSE(opening.holds);
  REQUIRE(opening.witness);
  CHECK(is_polymatroidal(ideal("x1^2, x1*x2, x2^2", 2)).holds);

  const auto a = is_polymatroidal(ideal("x1*x3^2, x1^2*x3, x1*x2*x3, x2^2*x3", 3));
  CHECK_FALSE(a.holds);
  REQUIRE(a.witness);
  CHECK(a.witness->u == mono("x1*x3^2", 3));
  CHECK(a.witness->v == mono("x2^2*x3", 3));
  CHECK(a.witness->i == 0);
}

TEST_CASE("witnesses are genuine violations") {
  for (const auto& I : single_degree_corpus()) {
    const auto v = is_polymatroidal(I);
    CHECK(v.holds == oracle::polymatroidal(I));
    if (v.holds) continue;
    REQUIRE(v.witness);
    const auto& w = *v.witness;
    const auto& gens = I.generators();
    CHECK(std::find(gens.begin(), gens.end(), w.u) != gens.end());
    CHECK(std::find(gens.begin(), gens.end(), w.v) != gens.end());
    CHECK(w.u[w.i] > w.v[w.i]);
    const auto ui = w.u / Monomial::variable(3, w.i);
    for (int j = 0; j < 3; ++j)
      if (w.v[j] > w.u[j]) CHECK_FALSE(I.contains(ui * Monomial::variable(3, j)));
  }
}

TEST_CASE("witnesses are deterministic") {
  const auto I = ideal("x1^2, x1*x2, x3^2, x2*x3", 3);
  const auto first = is_polymatroidal(I);
  for (int k = 0; k < 5; ++k) {
    const auto again = is_polymatroidal(parse_ideal(I.to_string(), 3));
    CHECK(again.witness->u == first.witness->u);
    CHECK(again.witness->v == first.witness->v);
    CHECK(again.witness->i == first.witness->i);
  }
}

TEST_CASE("degenerate ideals") {
  CHECK_THROWS_AS(is_polymatroidal(MonomialIdeal(3)), ZeroIdealError);
  CHECK(is_polymatroidal(MonomialIdeal::unit(3)).holds);
  CHECK(is_polymatroidal(ideal("x1^2*x3", 3)).holds);
  CHECK(has_strong_exchange(ideal("x1^2*x3", 3)).holds);
  CHECK(has_nonpure_exchange(ideal("x1^2*x3", 3)).holds);
  const auto mixed = is_polymatroidal(ideal("x1, x2^2", 2));
  CHECK_FALSE(mixed.holds);
  CHECK_FALSE(mixed.single_degree);
  CHECK_FALSE(mixed.witness);
}

TEST_CASE("matroidal") {
  CHECK(is_matroidal(ideal("x1*x2, x1*x3, x2*x3", 3)).holds);
  CHECK_FALSE(is_matroidal(ideal("x1^2, x1*x2, x2^2", 2)).holds);
  const auto v = is_matroidal(ideal("x1*x2, x3*x4", 4));
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->u == mono("x1*x2", 4));
  CHECK(v.witness->v == mono("x3*x4", 4));
  CHECK(v.witness->i == 0);
}

TEST_CASE("strong exchange") {
  CHECK(has_strong_exchange(veronese(VeroneseParams(2, {1, 1, 1}))).holds);
  const auto t = ideal("x1*x3, x1*x4, x2*x3, x2*x4", 4);
  CHECK(is_polymatroidal(t).holds);
  const auto v = has_strong_exchange(t);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->u == mono("x1*x3", 4));
  CHECK(v.witness->v == mono("x2*x4", 4));
  CHECK(v.witness->i == 0);
  CHECK(v.witness->j == 3);
  for (const auto& I : single_degree_corpus())
    if (has_strong_exchange(I).holds) CHECK(is_polymatroidal(I).holds);
}

TEST_CASE("non-pure exchange") {
  CHECK(has_nonpure_exchange(ideal("x1*x2, x1*x3^2, x2*x3^2", 3)).holds);
  CHECK_FALSE(has_nonpure_exchange(ideal("x1^2, x2^2", 2)).holds);
}

TEST_CASE("symmetric exchange on polymatroidal ideals") {
  for (const auto& I : single_degree_corpus())
    if (is_polymatroidal(I).holds) CHECK(has_symmetric_exchange(I).holds);
}

TEST_CASE("Veronese type") {
  CHECK(veronese(VeroneseParams(2, {1, 1, 1})) == ideal("x1*x2, x1*x3, x2*x3", 3));
  CHECK(veronese(VeroneseParams(3, {3, 3})) == power(MonomialIdeal::maximal(2), 3));
  CHECK(veronese(VeroneseParams(3, {2, 3})) == ideal("x1^2*x2, x1*x2^2, x2^3", 2));
  CHECK_THROWS_AS(VeroneseParams(4, {1, 1, 1}), DomainError);
  CHECK_THROWS_AS(VeroneseParams(0, {1}), DomainError);
  CHECK(VeroneseParams::parse("3; 2,3") == VeroneseParams(3, {2, 3}));
  CHECK(VeroneseParams(3, {2, 3}).to_string() == "3; 2,3");

  for (int n = 1; n <= 3; ++n)
    for (long d = 1; d <= 4; ++d)
      for (const auto& caps : cap_vectors(n, static_cast<int>(d) + 1)) {
        long total = 0;
        for (auto c : caps) total += c;
        if (total < d) continue;
        const auto I = veronese(VeroneseParams(d, caps));
        CHECK(is_polymatroidal(I).holds);
        const auto back = detect_veronese(I);
        REQUIRE(back);
        CHECK(veronese(*back) == I);
      }
}

TEST_CASE("detect Veronese") {
  CHECK(detect_veronese(ideal("x1*x2, x1*x3, x2*x3", 3)) == VeroneseParams(2, {1, 1, 1}));
  CHECK_FALSE(detect_veronese(ideal("x1*x3, x1*x4, x2*x3, x2*x4", 4)));
  CHECK(detect_veronese(power(MonomialIdeal::maximal(3), 2)) == VeroneseParams(2, {2, 2, 2}));
  CHECK_THROWS_AS(detect_veronese(ideal("x1, x2^2", 2)), DomainError);
}

TEST_CASE("componentwise polymatroidal") {
  const auto nonpure = ideal("x1*x2, x1*x3^2, x2*x3^2", 3);
  const auto v = is_componentwise_polymatroidal(nonpure);
  CHECK_FALSE(v.holds);
  CHECK(v.failing_degree == 3L);
  CHECK(is_componentwise_polymatroidal(ideal("x1^2, x2^2*x3, x1*x2*x3, x1*x2^2, x1*x3^3, x2*x3^3", 3)).holds);
  CHECK(is_componentwise_polymatroidal(veronese(VeroneseParams(3, {2, 1, 2}))).holds);
  CHECK(is_componentwise_veronese(ideal("x1^2, x1*x2, x2^2, x1^3", 2)).holds);
  CHECK_FALSE(is_componentwise_veronese(nonpure).holds);
  CHECK(is_componentwise_veronese(power(MonomialIdeal::maximal(3), 3)).holds);
  // (x1) is of Veronese type but (x1)m = (x1^2, x1x2, x1x3) is not.
  const auto x1 = is_componentwise_veronese(ideal("x1", 3));
  CHECK_FALSE(x1.holds);
  CHECK(x1.failing_degree == 2L);
  CHECK(is_componentwise_veronese(ideal("x1", 1)).holds);
}

TEST_CASE("Veronese type times m") {
  // V(d; a) m is of Veronese type iff a_i + a_j >= d for all i != j (caps clipped to d).
  for (int n = 2; n <= 3; ++n)
    for (long d = 1; d <= 3; ++d)
      for (const auto& caps : cap_vectors(n, static_cast<int>(d))) {
        long total = 0;
        for (auto c : caps) total += c;
        if (total < d) continue;
        bool pairwise = true;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) pairwise = pairwise && caps[i] + caps[j] >= d;
        const auto next = veronese(VeroneseParams(d, caps)) * MonomialIdeal::maximal(n);
        CHECK(detect_veronese(next).has_value() == pairwise);
      }
}

TEST_CASE("components above the top degree need no check") {
  lab::IdealSpace s;
  s.nvars = 3;
  s.max_degree = 3;
  s.max_generators = 3;
  for (const auto& I : lab::enumerate_space(s)) {
    CHECK(is_componentwise_polymatroidal(I).holds == is_componentwise_polymatroidal(I, 2).holds);
    CHECK(is_componentwise_veronese(I).holds == is_componentwise_veronese(I, 2).holds);
  }
}

TEST_CASE("componentwise polymatroidal implies non-pure exchange, not conversely") {
  lab::IdealSpace s;
  s.nvars = 3;
  s.max_degree = 3;
  s.max_generators = 4;
  std::size_t hits = 0;
  for (const auto& I : lab::enumerate_space(s))
    if (is_componentwise_polymatroidal(I).holds) {
      ++hits;
      CHECK(has_nonpure_exchange(I).holds);
    }
  CHECK(hits > 0);
  const auto nonpure = ideal("x1*x2, x1*x3^2, x2*x3^2", 3);
  CHECK(has_nonpure_exchange(nonpure).holds);
  CHECK_FALSE(is_componentwise_polymatroidal(nonpure).holds);
}

TEST_CASE("polymatroidal ideals are closed under colons and products") {
  std::vector<MonomialIdeal> pm;
  for (const auto& I : single_degree_corpus())
    if (is_polymatroidal(I).holds) pm.push_back(I);
  REQUIRE(pm.size() > 10);
  for (const auto& I : pm) {
    CHECK(is_single_degree(I));
    for (const auto& u : capped_divisors(I)) CHECK(is_polymatroidal(colon(I, u)).holds);
  }
  for (std::size_t a = 0; a < pm.size(); a += 7)
    for (std::size_t b = a; b < pm.size(); b += 11) CHECK(is_polymatroidal(pm[a] * pm[b]).holds);
}

TEST_CASE("transversal ideals are polymatroidal") {
  for (VarSubset::Bits p = 1; p < 16; ++p)
    for (VarSubset::Bits q = 1; q < 16; q += 3) {
      const auto I = transversal({VarSubset(4, p), VarSubset(4, q)}, {1, 2});
      CHECK(is_polymatroidal(I).holds);
    }
}
