#include <doctest.h>

#include "support.hpp"

using namespace torelli;

TEST_CASE("depth of library maps") {
  const DepthReport id = filtration_depth(MappingClass::identity(2), 5);
  CHECK_FALSE(id.depth);
  CHECK(id.in_j(6));
  CHECK(to_string(id, 2).rfind("depth >= 6\n", 0) == 0);

  CHECK(filtration_depth(boundary_twist(1).action()).depth == 3);
  CHECK(filtration_depth(boundary_twist(3).action()).depth == 3);
  CHECK(filtration_depth(bscc_twist(2, 1).action()).depth == 3);
  CHECK(filtration_depth(bscc_twist(3, 2).action()).depth == 3);
  CHECK(filtration_depth(bp_map(2).action()).depth == 2);
  CHECK(filtration_depth(bp_map(3, "2").action()).depth == 2);

  // a twist about a nonseparating curve is outside the Torelli group
  const testing::Humphries h;
  CHECK(filtration_depth(h.ta1).depth == 1);
}

TEST_CASE("tau vanishes below the depth") {
  const MappingClass bd = boundary_twist(1).action();
  CHECK(tau(bd, 2).is_zero());
  const TauValue t3 = tau(bd, 3);
  CHECK_FALSE(t3.is_zero());
  CHECK(t3.k == 3);
  CHECK(t3.genus == 1);
  CHECK_THROWS_AS(tau(bd, 4), NotInJk);
  CHECK_THROWS_AS(tau(bd, 0), InvalidArgument);
  CHECK_THROWS_AS(tau(bp_map(2).action(), 3), NotInJk);
}

TEST_CASE("tau is additive on J(k)") {
  const MappingClass bp = bp_map(2).action();
  const MappingClass sep = bscc_twist(2, 1).action();
  const MappingClass bd = boundary_twist(2).action();
  CHECK(tau(compose(bp, bp), 2) == tau(bp, 2) + tau(bp, 2));
  CHECK(tau(compose(bp, sep), 2) == tau(bp, 2));
  CHECK(tau(compose(sep, bd), 3) == tau(sep, 3) + tau(bd, 3));
  CHECK(tau(compose(bp, inverse(bp)), 2).is_zero());
}

TEST_CASE("tau text formats") {
  const TauValue v = tau(bp_map(2).action(), 2);
  const std::string lyndon = to_string(v);
  CHECK(lyndon.rfind("tau k=2 genus=2\n[a1]\n", 0) == 0);
  CHECK(lyndon.find("L[") != std::string::npos);
  CHECK(to_string(v, true).find(" * t") != std::string::npos);
  const auto series = tau_series(v);
  REQUIRE(series.size() == 4);
  for (std::size_t i = 0; i < series.size(); ++i) CHECK(series[i] == v.components[i].to_series());
}

TEST_CASE("Morita containment") {
  for (const MappingClass& f : {bp_map(2).action(), bp_map(3, "2").action()}) {
    const MoritaResult r = morita_check(f, 2);
    CHECK(r.contained);
    CHECK(r.bracket.is_zero());
  }
  for (const MappingClass& f : {boundary_twist(2).action(), bscc_twist(2, 1).action()})
    CHECK(morita_check(f, 3).contained);

  // a tensor outside the image of tau is detected
  TauValue fake = TauValue::zero(2, 1);
  fake.components[0].add_term(LyndonWord({1, 2}), 1);
  H1LieTensor d = symplectic_dual(fake);
  CHECK_FALSE(bracket_map(d).is_zero());
}

TEST_CASE("bordism comparison") {
  const MappingClass bd = boundary_twist(1).action();
  const MappingClass id = MappingClass::identity(1);
  CHECK(bordant(bd, id, 2));
  CHECK_FALSE(bordant(bd, id, 3));
  CHECK(bordant(bd, bd, 3));
  CHECK_THROWS_AS(bordant(bd, id, 4), NotInJk);
  CHECK_THROWS_AS(bordant(bd, id, 1), InvalidArgument);
  CHECK_THROWS_AS(bordant(bd, MappingClass::identity(2), 2), GenusMismatch);
}

TEST_CASE("tau tower") {
  const TauTower t = tau_tower(boundary_twist(1).action(), 2);
  REQUIRE(t.levels.size() == 2);
  CHECK(t.first_nonzero == 3);
  const TauTower none = tau_tower(MappingClass::identity(1), 2, 4);
  CHECK(none.levels.size() == 3);
  CHECK_FALSE(none.first_nonzero);
}
