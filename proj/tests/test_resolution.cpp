#include "oracles/oracles.hpp"
#include "support.hpp"

#include "polymat/errors.hpp"
#include "polymat/lab.hpp"
#include "polymat/linalg.hpp"
#include "polymat/quotients.hpp"
#include "polymat/resolution.hpp"

#include <doctest.h>

#include <random>

using namespace polymat;
using testing::ideal;

namespace {

std::map<std::pair<int, long>, long> entries(const BettiTable& t) { return {t.entries().begin(), t.entries().end()}; }

/// Stanley-Reisner ideal of the six-vertex real projective plane.
MonomialIdeal projective_plane() {
  const std::vector<std::array<int, 3>> facets = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                                  {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
  std::vector<Monomial> gens;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c)
        if (std::find(facets.begin(), facets.end(), std::array<int, 3>{a, b, c}) == facets.end())
          gens.push_back(Monomial::product_of(VarSubset::from_one_based(6, {a, b, c})));
  return MonomialIdeal(6, std::move(gens));
}

}  // namespace

TEST_CASE("exact rank against a rational oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 7), c = 1 + static_cast<int>(rng() % 7);
    const bool huge = trial % 4 == 0;
    linalg::IntMatrix m(r, c);
    std::vector<std::vector<oracle::Rational>> q(r, std::vector<oracle::Rational>(c));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        std::int64_t x = static_cast<std::int64_t>(rng() % 7) - 3;
        if (huge) x *= 1'000'000'007LL * static_cast<std::int64_t>(rng() % 1000 + 1);
        m(i, j) = x;
        q[i][j] = x;
      }
    // Force dependent rows now and then.
    if (r > 2 && trial % 3 == 0) {
      m.row(r - 1) = m.row(0) * 3 - m.row(1) * 2;
      for (int j = 0; j < c; ++j) q[r - 1][j] = q[0][j] * 3 - q[1][j] * 2;
    }
    CHECK(static_cast<std::size_t>(linalg::rank(m, 0)) == oracle::rank_rational(q));
  }
}

TEST_CASE("rank overflows into big integers") {
  linalg::IntMatrix m(3, 3);
  const std::int64_t big = 3'000'000'000'000LL;
  m << big, big + 1, 7, big - 5, big, 3, 11, 13, big;
  CHECK(linalg::rank(m, 0) == 3);
  linalg::IntMatrix s(2, 2);
  s << big, 2 * big, big + 1, 2 * big + 2;
  CHECK(linalg::rank(s, 0) == 1);
}

TEST_CASE("modular rank") {
  linalg::IntMatrix m(2, 2);
  m << 1, 1, 1, -1;
  CHECK(linalg::rank(m, 0) == 2);
  CHECK(linalg::rank(m, 2) == 1);
  CHECK(linalg::rank(m, 3) == 2);
  CHECK_THROWS_AS(linalg::check_characteristic(4), DomainError);
  CHECK_THROWS_AS(linalg::check_characteristic(-3), DomainError);
  CHECK_NOTHROW(linalg::check_characteristic(2147483647));
}

TEST_CASE("simplicial complexes") {
  const auto circle = SimplicialComplex::from_facets(3, {0b011, 0b101, 0b110});
  CHECK(circle.dimension() == 1);
  CHECK(circle.reduced_homology(0) == std::vector<long>{0, 0, 1});
  const auto disk = SimplicialComplex::from_facets(3, {0b111});
  CHECK(disk.reduced_homology(0) == std::vector<long>{0, 0, 0, 0});
  const auto points = SimplicialComplex::from_facets(3, {0b001, 0b010, 0b100});
  CHECK(points.reduced_homology(0) == std::vector<long>{0, 2});
  const auto empty_face = SimplicialComplex::from_faces(2, {0});
  CHECK(empty_face.dimension() == -1);
  CHECK(empty_face.reduced_homology(0) == std::vector<long>{1});
  const auto none = SimplicialComplex::from_faces(2, {});
  CHECK(none.is_void());
  CHECK(none.reduced_homology(0).empty());
  CHECK_THROWS_AS(SimplicialComplex::from_faces(3, {0, 0b011}), DomainError);
  CHECK(circle.facets() == std::vector<SimplicialComplex::Face>{0b011, 0b101, 0b110});
}

TEST_CASE("Euler characteristic matches homology") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<SimplicialComplex::Face> facets;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 5); ++k)
      facets.push_back(static_cast<SimplicialComplex::Face>(rng() % (1u << n)));
    const auto cx = SimplicialComplex::from_facets(n, facets);
    for (std::int64_t ch : {0, 2, 3}) {
      const auto h = cx.reduced_homology(ch);
      long alt = 0;
      for (std::size_t k = 0; k < h.size(); ++k) alt += ((k % 2 == 1) ? 1 : -1) * h[k];
      CHECK(alt == cx.reduced_euler_characteristic());
    }
  }
}

TEST_CASE("Betti tables of small ideals") {
  const auto koszul = betti_table(MonomialIdeal::maximal(3));
  CHECK(entries(koszul) == std::map<std::pair<int, long>, long>{{{0, 1}, 3}, {{1, 2}, 3}, {{2, 3}, 1}});
  CHECK(entries(betti_table(ideal("x1^2*x2", 2))) == std::map<std::pair<int, long>, long>{{{0, 3}, 1}});
  const auto opening = betti_table(ideal("x1^2, x1*x2, x3^2, x2*x3", 3));
  CHECK(opening(1, 4) > 0);
  CHECK(entries(opening) == oracle::taylor_betti(ideal("x1^2, x1*x2, x3^2, x2*x3", 3), 0));
  CHECK(koszul.regularity() == 1);
  CHECK(koszul.projective_dimension() == 2);
  CHECK(koszul.generator_degrees() == std::vector<long>{1, 1, 1});
  CHECK(entries(betti_table(MonomialIdeal::unit(2))) == std::map<std::pair<int, long>, long>{{{0, 0}, 1}});
  CHECK_THROWS_AS(betti_table(MonomialIdeal(2)), ZeroIdealError);
}

TEST_CASE("Betti numbers agree with the Taylor oracle") {
  for (const auto& I : testing::random_ideals(4, 3, 6, 80, 101))
    for (std::int64_t ch : {0, 2}) CHECK(entries(betti_table(I, ch)) == oracle::taylor_betti(I, ch));
}

TEST_CASE("Betti numbers can depend on the characteristic") {
  const auto I = projective_plane();
  REQUIRE(I.size() == 10);
  const auto b0 = betti_table(I, 0), b2 = betti_table(I, 2), b3 = betti_table(I, 3);
  CHECK(entries(b0) == oracle::taylor_betti(I, 0));
  CHECK(entries(b2) == oracle::taylor_betti(I, 2));
  CHECK_FALSE(b0 == b2);
  CHECK(b0 == b3);
  CHECK(has_linear_resolution(I, 0));
  CHECK_FALSE(has_linear_resolution(I, 2));
}

TEST_CASE("zeroth Betti numbers count generators") {
  for (const auto& I : testing::random_ideals(3, 4, 6, 60, 55)) {
    const auto t = betti_table(I);
    std::map<long, long> counts;
    for (const auto& g : I.generators()) ++counts[g.degree()];
    for (const auto& [d, c] : counts) CHECK(t(0, d) == c);
    long total = 0;
    for (const auto& [key, rank] : t.entries())
      if (key.first == 0) total += rank;
    CHECK(total == static_cast<long>(I.size()));
  }
}

TEST_CASE("linear resolution and relations") {
  CHECK(has_linear_resolution(ideal("x1*x2, x1*x3, x2*x3", 3)));
  CHECK_FALSE(has_linear_resolution(ideal("x1^2, x1*x2, x3^2, x2*x3", 3)));
  CHECK_FALSE(has_linear_resolution(ideal("x1, x2^2", 2)));
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 4; ++k) CHECK(has_linear_resolution(power(MonomialIdeal::maximal(n), k)));
  const auto c = ideal("x1^3, x1^2*x2, x1^2*x3, x2^3, x1*x2^2, x2^2*x3, x3^3, x1*x3^2, x2*x3^2", 3);
  CHECK(has_linear_relations(c));
  CHECK_FALSE(has_linear_relations(ideal("x1^2, x1*x2, x3^2, x2*x3", 3)));
  CHECK(has_linear_relations(ideal("x1*x2^2", 2)));
  CHECK_THROWS_AS(has_linear_relations(ideal("x1, x2^2", 2)), DomainError);
}

TEST_CASE("componentwise linear") {
  CHECK(is_componentwise_linear(ideal("x1*x2, x1*x3^2, x2*x3^2", 3)).holds);
  const auto v = is_componentwise_linear(ideal("x1^2, x1*x2, x3^2, x2*x3", 3));
  CHECK_FALSE(v.holds);
  CHECK(v.failing_degree == 2L);
  for (int k = 1; k <= 3; ++k) CHECK(is_componentwise_linear(power(MonomialIdeal::maximal(3), k)).holds);
}

TEST_CASE("linear resolution with all pure powers forces a power of m") {
  for (int n : {2, 3}) {
    lab::IdealSpace s;
    s.nvars = n;
    s.max_degree = 3;
    s.max_generators = n == 2 ? 4 : 6;
    s.min_degree = 2;
    std::size_t hits = 0;
    for (const auto& I : lab::enumerate_space(s)) {
      if (!is_single_degree(I)) continue;
      const long d = I.min_degree();
      bool pure = true;
      for (int i = 0; i < n; ++i) pure = pure && I.contains(Monomial::variable(n, i).pow(static_cast<Exponent>(d)));
      if (!pure || !has_linear_resolution(I)) continue;
      ++hits;
      CHECK(I == power(MonomialIdeal::maximal(n), static_cast<int>(d)));
    }
    CHECK(hits > 0);
  }
}

TEST_CASE("linear quotients imply a linear resolution") {
  lab::IdealSpace s;
  s.nvars = 3;
  s.min_degree = 2;
  s.max_degree = 2;
  s.max_generators = 6;
  for (const auto& I : lab::enumerate_space(s))
    if (find_lq_order(I)) CHECK(has_linear_resolution(I));
}

TEST_CASE("lattice budget") {
  Budget tiny;
  tiny.max_lattice = 3;
  CHECK_THROWS_AS(betti_table(ideal("x1^2, x1*x2, x3^2, x2*x3", 3), 0, tiny), ResourceError);
  const auto lattice = lcm_lattice(ideal("x1, x2", 2));
  CHECK(lattice.size() == 3);
}
