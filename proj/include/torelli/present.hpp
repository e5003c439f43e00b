#pragma once

// Presentations of the mapping torus T_{f,1}, its Dehn filling along the
// boundary circle, and the block structure of the spin-bordism group.

#include <string>
#include <vector>

#include "torelli/bigint.hpp"
#include "torelli/freegroup.hpp"

namespace torelli {

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

/// <a1..bg, gamma | [x_i, gamma] f(x_i) x_i^-1>, relators in generator order.
Presentation present_mapping_torus(const MappingClass& f);

/// <a1..bg | f(x_i) x_i^-1>, trivial relators omitted.
Presentation present_filled(const MappingClass& f);

/// `gens: a1 b1 ... [gamma]` then one `rel: <tokens>` line per relator.
std::string to_string(const Presentation& p);

/// Ranks of the blocks Omega_3^spin(F/F_k) is assembled from:
/// H_2(F/F_k; Z/2) ~ L_k (x) Z/2, H_1(F/F_k; Omega_2^spin) ~ (Z/2)^{2g},
/// H_0 block zero. The H_3 block is not computed.
struct BlockRanks {
  int genus = 0;
  int k = 0;
  BigInt h2;
  int h1 = 0;
  int h0 = 0;
};

BlockRanks eta_block_ranks(int genus, int k);
std::string to_string(const BlockRanks& r);

}  // namespace torelli
