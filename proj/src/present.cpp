#include "torelli/present.hpp"

#include <sstream>

#include "torelli/errors.hpp"
#include "torelli/freelie.hpp"

namespace torelli {

namespace {

std::vector<std::string> names(int rank) {
  std::vector<std::string> out;
  for (int i = 1; i <= rank; ++i) out.push_back(generator_name(i, rank));
  return out;
}

}  // namespace

Presentation present_mapping_torus(const MappingClass& f) {
  require_valid(f);
  const int rank = f.rank() + 1;
  const Word gamma = Word::generator(rank, rank);
  Presentation p{names(rank), {}};
  for (int i = 1; i <= f.rank(); ++i) {
    const Word x = Word::generator(rank, i);
    p.relators.push_back(multiply(multiply(commutator(x, gamma), with_rank(f.image(i), rank)), invert(x)));
  }
  return p;
}

Presentation present_filled(const MappingClass& f) {
  require_valid(f);
  Presentation p{names(f.rank()), {}};
  for (int i = 1; i <= f.rank(); ++i) {
    Word r = multiply(f.image(i), Word::generator(f.rank(), -i));
    if (!r.is_identity()) p.relators.push_back(std::move(r));
  }
  return p;
}

std::string to_string(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& g : p.generators) out << ' ' << g;
  out << '\n';
  for (const Word& r : p.relators) out << "rel: " << to_string(r) << '\n';
  return out.str();
}

BlockRanks eta_block_ranks(int genus, int k) {
  if (genus < 1) throw InvalidArgument("genus must be at least 1");
  if (k < 2) throw InvalidArgument("block ranks need k >= 2");
  return {genus, k, witt_dim(2 * genus, k), 2 * genus, 0};
}

std::string to_string(const BlockRanks& r) {
  std::ostringstream out;
  out << "blocks genus=" << r.genus << " k=" << r.k << '\n'
      << "H0: " << r.h0 << '\n'
      << "H1: " << r.h1 << '\n'
      << "H2: " << r.h2 << '\n'
      << "H3: NOT COMPUTED\n";
  return out.str();
}

}  // namespace torelli
