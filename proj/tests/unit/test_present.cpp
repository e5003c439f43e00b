#include <doctest.h>

#include "support.hpp"

using namespace torelli;

TEST_CASE("mapping torus presentation") {
  const Presentation id = present_mapping_torus(MappingClass::identity(1));
  CHECK(id.generators == std::vector<std::string>{"a1", "b1", "gamma"});
  REQUIRE(id.relators.size() == 2);
  CHECK(to_string(id.relators[0]) == "a1 gamma a1' gamma'");
  CHECK(to_string(id.relators[1]) == "b1 gamma b1' gamma'");
  CHECK(present_mapping_torus(MappingClass::identity(3)).relators.size() == 6);

  const MappingClass bd = boundary_twist(1).action();
  const Presentation p = present_mapping_torus(bd);
  const Word z = boundary_word(1);
  for (int i = 1; i <= 2; ++i) {
    const Word x = with_rank(Word::generator(2, i), 3);
    const Word gamma = Word::generator(3, 3);
    const Word zr = with_rank(z, 3);
    CHECK(p.relators[static_cast<std::size_t>(i - 1)] == multiply(commutator(x, gamma), commutator(zr, x)));
  }
  CHECK(to_string(id) == "gens: a1 b1 gamma\nrel: a1 gamma a1' gamma'\nrel: b1 gamma b1' gamma'\n");
}

TEST_CASE("filled presentation") {
  const Presentation id = present_filled(MappingClass::identity(2));
  CHECK(id.generators.size() == 4);
  CHECK(id.relators.empty());

  const Presentation p = present_filled(boundary_twist(1).action());
  const Word z = boundary_word(1);
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == commutator(z, Word::generator(2, 1)));
  CHECK(p.relators[1] == commutator(z, Word::generator(2, 2)));

  // deleting gamma from the mapping torus relators gives the filled ones
  for (const GeneratorEntry& e : library(2)) {
    const Presentation full = present_mapping_torus(e.action());
    const Presentation filled = present_filled(e.action());
    std::vector<Word> stripped;
    for (const Word& r : full.relators) {
      std::vector<Letter> letters;
      for (Letter x : r.letters())
        if (std::abs(x) != 5) letters.push_back(x);
      const Word w = Word::reduce(4, letters);
      if (!w.is_identity()) stripped.push_back(w);
    }
    CHECK(stripped == filled.relators);
  }
}

TEST_CASE("filled relators detect depth") {
  for (const GeneratorEntry& e : library(2)) {
    const int depth = *filtration_depth(e.action()).depth;
    for (const Word& r : present_filled(e.action()).relators) CHECK(lcs_degree(r, 6).at_least(depth));
  }
}

TEST_CASE("block ranks") {
  const BlockRanks r = eta_block_ranks(2, 2);
  CHECK(r.h2 == 6);
  CHECK(r.h1 == 4);
  CHECK(r.h0 == 0);
  CHECK(eta_block_ranks(1, 2).h2 == 1);
  CHECK(eta_block_ranks(2, 3).h2 == 20);
  CHECK_THROWS_AS(eta_block_ranks(2, 1), InvalidArgument);
  CHECK(to_string(r) == "blocks genus=2 k=2\nH0: 0\nH1: 4\nH2: 6\nH3: NOT COMPUTED\n");
}
