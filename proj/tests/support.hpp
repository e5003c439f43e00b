#pragma once

#include <random>
#include <string>
#include <vector>

#include "torelli/torelli.hpp"

namespace torelli::testing {

inline Word random_word(std::mt19937_64& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> letters(static_cast<std::size_t>(len(rng)));
  for (auto& x : letters) x = sign(rng) ? gen(rng) : -gen(rng);
  return Word::reduce(rank, letters);
}

inline MappingClass map_from(int genus, const std::vector<std::string>& images,
                             const std::vector<std::string>& inverse_images = {}) {
  std::vector<Word> fw, bw;
  for (const auto& s : images) fw.push_back(parse_word(s, genus));
  for (const auto& s : inverse_images) bw.push_back(parse_word(s, genus));
  if (bw.empty()) return MappingClass(genus, fw);
  return MappingClass(genus, fw, bw);
}

inline MappingClass chain(std::initializer_list<MappingClass> maps) {
  auto it = maps.begin();
  MappingClass r = *it;
  for (++it; it != maps.end(); ++it) r = compose(r, *it);
  return r;
}

inline MappingClass power(const MappingClass& f, int n) {
  MappingClass r = MappingClass::identity(f.genus());
  for (int i = 0; i < n; ++i) r = compose(r, f);
  return r;
}

// Twists about the Humphries curves a1, b1, a2, b2 and the curve c linking
// handles 1 and 2, genus 2.
struct Humphries {
  MappingClass ta1 = map_from(2, {"a1", "b1 a1'", "a2", "b2"}, {"a1", "b1 a1", "a2", "b2"});
  MappingClass tb1 = map_from(2, {"a1 b1", "b1", "a2", "b2"}, {"a1 b1'", "b1", "a2", "b2"});
  MappingClass ta2 = map_from(2, {"a1", "b1", "a2", "b2 a2'"}, {"a1", "b1", "a2", "b2 a2"});
  MappingClass tb2 = map_from(2, {"a1", "b1", "a2 b2", "b2"}, {"a1", "b1", "a2 b2'", "b2"});
  MappingClass tc = map_from(
      2, {"a1", "b1 a1' b1' a2 b1", "b1 a1' b1' a2 b1 a1 b1'", "b2 a2' b1 a1 b1'"},
      {"a1", "a2' b1 a1", "a2' b1 a1 b1' a2 b1 a1' b1' a2", "b2 b1 a1' b1' a2"});
};

}  // namespace torelli::testing
