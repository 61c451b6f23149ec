#include "oracles/oracles.hpp"
#include "support.hpp"

#include "polymat/errors.hpp"
#include "polymat/lab.hpp"
#include "polymat/resolution.hpp"

#include <doctest.h>

#include <set>

using namespace polymat;
using namespace polymat::lab;
using testing::ideal;

TEST_CASE("exhaustive spaces are antichains without repeats") {
  IdealSpace space;
  space.nvars = 2;
  space.max_degree = 3;
  space.max_generators = 3;
  const auto all = enumerate_space(space);
  std::set<std::string> seen;
  for (const auto& I : all) {
    CHECK(seen.insert(I.to_string()).second);
    CHECK(I.generators().size() <= 3);
    for (const auto& g : I.generators()) CHECK((g.degree() >= 1 && g.degree() <= 3));
  }
  // Every antichain of monomials of degree 1..3 in two variables, counted by brute force.
  std::vector<oracle::Exps> cand;
  for (int d = 1; d <= 3; ++d)
    for (int a = 0; a <= d; ++a) cand.push_back({a, d - a});
  std::size_t count = 0;
  for (std::uint32_t s = 1; s < (1u << cand.size()); ++s) {
    if (__builtin_popcount(s) > 3) continue;
    bool anti = true;
    for (std::size_t x = 0; x < cand.size(); ++x)
      for (std::size_t y = 0; y < cand.size(); ++y)
        if (x != y && ((s >> x) & 1u) && ((s >> y) & 1u) && oracle::divides(cand[x], cand[y])) anti = false;
    count += anti;
  }
  CHECK(all.size() == count);

  Budget tight;
  tight.max_enumeration = 10;
  CHECK_THROWS_AS(enumerate_space(space, tight), ResourceError);
  space.min_degree = 0;
  CHECK_THROWS_AS(enumerate_space(space), DomainError);
}

TEST_CASE("squarefree spaces") {
  IdealSpace space;
  space.nvars = 4;
  space.max_degree = 4;
  space.max_generators = 6;
  space.squarefree_only = true;
  for (const auto& I : enumerate_space(space)) CHECK(I.is_squarefree());
}

TEST_CASE("sampling depends only on seed and index") {
  IdealSpace space;
  space.mode = SpaceMode::sampled;
  space.nvars = 4;
  space.max_degree = 3;
  space.samples = 40;
  space.seed = 77;
  const auto a = enumerate_space(space), b = enumerate_space(space);
  CHECK(a == b);
  CHECK(sample_ideal(space, 17) == a[17]);
  space.seed = 78;
  CHECK_FALSE(enumerate_space(space) == a);
}

TEST_CASE("equivalence records") {
  const auto opening = verify_equivalences(ideal("x1^2, x1*x2, x3^2, x2*x3", 3));
  CHECK(opening.conditions == std::array<bool, 5>{false, false, false, false, false});
  CHECK_FALSE(opening.violation);
  REQUIRE(opening.first_failure[1].has_value());
  CHECK(opening.first_failure[1]->degree() == 0);

  for (const auto& I : {ideal("x1*x2, x1*x3, x2*x3", 3), ideal("x1^2*x2", 2), ideal("x1^2, x1*x2, x2^2", 2)}) {
    const auto rec = verify_equivalences(I);
    CHECK(rec.conditions == std::array<bool, 5>{true, true, true, true, true});
    CHECK_FALSE(rec.violation);
    CHECK(rec.to_json().at("violation") == false);
  }
  CHECK_THROWS_AS(verify_equivalences(MonomialIdeal(3)), ZeroIdealError);
  CHECK_THROWS_AS(verify_equivalences(MonomialIdeal::unit(3)), DomainError);
}

TEST_CASE("equivalence failures point at a real colon") {
  for (const auto& I : testing::random_ideals(3, 3, 4, 60, 21)) {
    if (I.is_unit()) continue;
    const auto rec = verify_equivalences(I);
    CHECK_FALSE(rec.violation);
    if (rec.first_failure[4]) CHECK_FALSE(is_single_degree(colon(I, *rec.first_failure[4])));
    if (rec.first_failure[3]) CHECK_FALSE(has_linear_resolution(colon(I, *rec.first_failure[3])));
    if (rec.first_failure[1]) CHECK_FALSE(is_polymatroidal(colon(I, *rec.first_failure[1])).holds);
  }
}

TEST_CASE("squarefree records") {
  const auto tri = verify_squarefree(ideal("x1*x2, x1*x3, x2*x3", 3), 3);
  CHECK(tri.matroidal);
  CHECK(tri.localizations == std::array<bool, 4>{true, true, true, true});
  CHECK(tri.powers == std::array<bool, 4>{true, true, true, true});
  CHECK_FALSE(tri.violation);

  const auto ci = verify_squarefree(ideal("x1*x2, x3*x4", 4), 2);
  CHECK_FALSE(ci.matroidal);
  CHECK_FALSE(ci.localizations[2]);
  REQUIRE(ci.localization_failure[2].has_value());
  CHECK(ci.localization_failure[2]->empty());
  CHECK_FALSE(ci.violation);

  const auto x1 = verify_squarefree(ideal("x1", 3), 3);
  CHECK(x1.matroidal);
  CHECK_FALSE(x1.violation);
  CHECK_THROWS_AS(verify_squarefree(ideal("x1^2", 2), 2), DomainError);
  CHECK_THROWS_AS(verify_squarefree(ideal("x1", 2), 0), DomainError);
}

TEST_CASE("conjecture records") {
  const auto I = ideal("x1^3, x1^2*x2, x1^2*x3, x2*x3*x4, x1*x2*x3, x1*x3*x4, x1^2*x4", 4);
  const auto rec = evaluate_conjecture(I);
  CHECK(rec.status == ScanStatus::agree);
  CHECK_FALSE(rec.polymatroidal.holds);
  CHECK_FALSE(rec.all_localizations_linear);
  REQUIRE(rec.failing_localization.has_value());
  const auto loc = localize(I, *rec.failing_localization);
  CHECK_FALSE((is_single_degree(loc) && has_linear_resolution(loc)));
  for (int i = 1; i <= 4; ++i) CHECK(has_linear_resolution(localize(I, VarSubset::from_one_based(4, {i}))));
  CHECK(reverify_conjecture_item(rec.to_json(), 0));

  auto forged = rec.to_json();
  forged["witnesses"]["failing_localization"] = Json::array({1});
  CHECK_FALSE(reverify_conjecture_item(forged, 0));

  const auto pm = evaluate_conjecture(ideal("x1*x2, x1*x3, x2*x3", 3));
  CHECK(pm.status == ScanStatus::agree);
  CHECK(pm.all_localizations_linear);

  Budget tiny;
  tiny.max_lattice = 1;
  CHECK(evaluate_conjecture(ideal("x1^2, x1*x2, x2^2", 2), 0, tiny).status == ScanStatus::skipped);
}

TEST_CASE("scans are deterministic and find no reverse counterexamples") {
  IdealSpace space;
  space.nvars = 2;
  space.max_degree = 3;
  space.max_generators = 4;
  ScanOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const auto a = scan_conjecture(space, one), b = scan_conjecture(space, many);
  CHECK(a.to_json(false) == b.to_json(false));
  CHECK(a.summary.at("counts").at("counterexample") == 0);
  CHECK(a.summary.at("counts").at("forward-violation") == 0);
  CHECK(a.summary.at("counts").at("total") == enumerate_space(space).size());
  for (const auto& item : a.items) CHECK(reverify_conjecture_item(item, 0));

  IdealSpace sampled;
  sampled.mode = SpaceMode::sampled;
  sampled.nvars = 3;
  sampled.samples = 30;
  sampled.seed = 5;
  CHECK(scan_conjecture(sampled, one).to_json(false) == scan_conjecture(sampled, many).to_json(false));
  CHECK(scan_conjecture(sampled, one).to_json().contains("runtime"));
}

TEST_CASE("regression suite") {
  for (std::int64_t ch : {0, 2}) {
    const auto report = paper_suite(ch);
    CHECK(suite_passed(report));
    CHECK(report.summary.at("counts").at("fail") == 0);
    for (const auto& item : report.items) {
      CHECK(item.contains("name"));
      CHECK(item.at("status") != "fail");
    }
  }
  CHECK_THROWS_AS(paper_suite(4), DomainError);
}
