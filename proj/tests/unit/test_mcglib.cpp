#include <doctest.h>

#include <map>

#include "support.hpp"

using namespace torelli;
using torelli::testing::chain;
using torelli::testing::Humphries;
using torelli::testing::power;

TEST_CASE("surface model") {
  const SurfaceModel m = surface_model(2);
  CHECK(m.generator_names == std::vector<std::string>{"a1", "b1", "a2", "b2"});
  CHECK(m.boundary == boundary_word(2));
  CHECK(m.intersection_form[0][1] == 1);
  CHECK(m.intersection_form[1][0] == -1);
}

TEST_CASE("library entries are valid") {
  for (int g = 1; g <= 4; ++g)
    for (const GeneratorEntry& e : library(g)) {
      CAPTURE(e.name);
      CHECK(validate(e.action()).ok());
      CHECK_NOTHROW(validate_descriptor(*e.descriptor));
      CHECK(library_entry(g, e.name).action().same_action(e.action()));
    }
  CHECK(library(1).size() == 1);
  CHECK(library(2).size() == 3);
  CHECK(library(3).size() == 5);
  CHECK_THROWS_AS(library_entry(2, "BSCC:2"), UnknownGenerator);
  CHECK_THROWS_AS(library_entry(2, "BP:2"), UnknownGenerator);
  CHECK_THROWS_AS(library_entry(2, "T9"), UnknownGenerator);
  CHECK_THROWS_AS(bp_map(1), InvalidArgument);
}

TEST_CASE("separating twists") {
  for (int g = 2; g <= 3; ++g)
    for (int h = 1; h < g; ++h) {
      const GeneratorEntry e = bscc_twist(g, h);
      CHECK(tau(e.action(), 2).is_zero());
      const auto& kind = std::get<BsccKind>(e.descriptor->kind);
      CHECK(kind.pairs.size() == static_cast<std::size_t>(h));
      for (const QuadForm& q : enumerate_forms(g, false))
        CHECK(rho(q, TorelliWord{e.letter()}) == arf_on_pairs(q, kind.pairs));
    }
}

TEST_CASE("Humphries twists reproduce the library") {
  const Humphries h;
  for (const MappingClass& t : {h.ta1, h.tb1, h.ta2, h.tb2, h.tc}) {
    CHECK(validate(t).ok());
    CHECK(compose(t, inverse(t)).same_action(MappingClass::identity(2)));
  }
  // braid relations along the chain a1 - b1 - c - b2 - a2 ... and commuting pairs
  CHECK(chain({h.ta1, h.tb1, h.ta1}).same_action(chain({h.tb1, h.ta1, h.tb1})));
  CHECK(chain({h.tb1, h.tc, h.tb1}).same_action(chain({h.tc, h.tb1, h.tc})));
  CHECK(chain({h.tc, h.tb2, h.tc}).same_action(chain({h.tb2, h.tc, h.tb2})));
  CHECK(chain({h.tb2, h.ta2, h.tb2}).same_action(chain({h.ta2, h.tb2, h.ta2})));
  CHECK(compose(h.ta1, h.tc).same_action(compose(h.tc, h.ta1)));
  CHECK(compose(h.ta1, h.tb2).same_action(compose(h.tb2, h.ta1)));
  CHECK(compose(h.ta2, h.tc).same_action(compose(h.tc, h.ta2)));

  // chain relations: the 2-chain gives the separating twist, the 4-chain the boundary twist
  CHECK(power(compose(h.ta1, h.tb1), 6).same_action(bscc_twist(2, 1).action()));
  CHECK(power(chain({h.ta1, h.tb1, h.tc, h.tb2}), 10).same_action(boundary_twist(2).action()));

  // the shipped bounding pair map is T_a2^2 (T_a1 T_b1 T_c)^-4
  const MappingClass x = power(chain({h.ta1, h.tb1, h.tc}), 4);
  const MappingClass bp = chain({h.ta2, h.ta2, inverse(x)});
  CHECK(bp.same_action(bp_map(2).action()));
  REQUIRE(bp_map(2).action().inverse_images());
  CHECK(inverse(bp).same_action(inverse(bp_map(2).action())));
}

TEST_CASE("bounding pair maps") {
  for (int g = 2; g <= 4; ++g)
    for (int hnd = 1; hnd < g; ++hnd) {
      const GeneratorEntry e = hnd == 1 ? bp_map(g) : bp_map(g, std::to_string(hnd));
      CAPTURE(e.name);
      CHECK_FALSE(tau(e.action(), 2).is_zero());
      const auto& kind = std::get<BpKind>(e.descriptor->kind);
      CHECK(kind.curve_class == H1Vector::x(g, hnd + 1));
      for (const QuadForm& q : enumerate_forms(g, false)) {
        const bool expected = !q_eval(q, kind.curve_class) && q_eval(q, kind.pair.first) && q_eval(q, kind.pair.second);
        CHECK(rho(q, TorelliWord{e.letter()}) == expected);
      }
    }
  CHECK(bp_map(2).name == "BP:std");
  CHECK(bp_map(3, "2").name == "BP:2");
  CHECK_THROWS_AS(bp_map(3, "3"), UnknownGenerator);
  CHECK_THROWS_AS(bp_map(3, "wat"), UnknownGenerator);
}

TEST_CASE("map files") {
  const std::string text =
      "# boundary twist\n"
      "genus 1\n"
      "let z = a1 b1 a1' b1'\n"
      "map\n"
      "a1 -> z a1 z'\n"
      "b1 -> z b1 z'\n";
  const MappingClass f = parse_map_file(text);
  CHECK(f.same_action(boundary_twist(1).action()));
  CHECK_FALSE(f.inverse_images());

  const MappingClass bp = bp_map(2).action();
  const MappingClass round = parse_map_file(serialize_map(bp));
  CHECK(round.same_action(bp));
  CHECK(round.inverse_images() == bp.inverse_images());
  CHECK(serialize_map(round) == serialize_map(bp));

  CHECK_THROWS_AS(parse_map_file("genus 2\nmap\na1 -> a2\nb1 -> b1\na2 -> a2\nb2 -> b2\n"), ValidationFailed);
  CHECK_NOTHROW(parse_map_file("genus 2\nmap\na1 -> a2\nb1 -> b1\na2 -> a2\nb2 -> b2\n", false));
  try {
    parse_map_file("genus 1\nmap\na1 -> a1\nb1 -> b1 %\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_map_file("genus 1\nmap\na1 -> a1\n"), ParseError);
  CHECK_THROWS_AS(parse_map_file("map\na1 -> a1\n"), ParseError);
  CHECK_THROWS_AS(parse_map_file("genus 1\nmap\na1 -> a1\nb1 -> c7\n"), ParseError);
}

TEST_CASE("tor files") {
  std::map<std::string, std::string> files{{"bp.map", serialize_map(bp_map(2).action())}};
  const MapLoader loader = [&](const std::string& p) { return files.at(p); };

  const TorFile t = parse_tor_file("genus 2\ngen T1 bscc pairs (x1 y1)\nword T1 T1'\n", loader);
  CHECK(t.word.size() == 2);
  CHECK(t.word[1].exponent == -1);
  CHECK(t.action().same_action(MappingClass::identity(2)));

  const TorFile c = parse_tor_file(
      "genus 2\n"
      "gen T1 bscc pairs (x1 y1)\n"
      "gen T2 bp class x2 pair (x1 y1) action bp.map\n"
      "word T1 T2 T1' T2'\n",
      loader);
  CHECK(c.word.size() == 4);
  CHECK(c.action().same_action(composed_action(2, c.word)));
  const TorFile again = parse_tor_file(serialize_tor(c), loader);
  CHECK(serialize_tor(again) == serialize_tor(c));
  CHECK(again.action().same_action(c.action()));

  const TorFile builtin = parse_tor_file("genus 2\nword BSCC:1 BP:std' BDRY\n", loader);
  CHECK(builtin.word.size() == 3);
  CHECK(builtin.word[1].exponent == -1);

  CHECK_THROWS_AS(parse_tor_file("genus 2\nword T9\n", loader), UnknownGenerator);
  CHECK_THROWS_AS(parse_tor_file("genus 2\ngen T bscc pairs (x1 x2)\nword T\n", loader), InvalidDescriptor);
  CHECK_THROWS_AS(parse_tor_file("genus 2\ngen T bp class 0 pair (x1 y1) action bp.map\nword T\n", loader),
                  InvalidDescriptor);
  CHECK_THROWS_AS(parse_tor_file("genus 2\ngen T bscc pairs (x1 y1)\n", loader), ParseError);

  CHECK(detect_input_kind("# c\ngenus 2\nmap\n") == InputKind::Map);
  CHECK(detect_input_kind("genus 2\nword BDRY\n") == InputKind::Tor);
}
