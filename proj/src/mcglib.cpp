#include "torelli/mcglib.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "parse_util.hpp"
#include "torelli/errors.hpp"

namespace torelli {

SurfaceModel surface_model(int genus) {
  SurfaceModel model;
  model.genus = genus;
  model.boundary = boundary_word(genus);
  for (int i = 1; i <= 2 * genus; ++i) model.generator_names.push_back(generator_name(i, 2 * genus));
  model.intersection_form.assign(static_cast<std::size_t>(2 * genus),
                                 std::vector<int>(static_cast<std::size_t>(2 * genus), 0));
  for (int i = 0; i < genus; ++i) {
    const auto x = static_cast<std::size_t>(2 * i);
    model.intersection_form[x][x + 1] = 1;
    model.intersection_form[x + 1][x] = -1;
  }
  return model;
}

namespace {

GeneratorEntry make_entry(std::string name, std::variant<BsccKind, BpKind> kind, std::vector<Word> images,
                          std::vector<Word> inverse_images, int genus) {
  MappingClass action(genus, std::move(images), std::move(inverse_images),
                      std::vector<DecompositionLetter>{{name, 1}});
  auto descriptor = std::make_shared<const TorelliGenDescriptor>(
      TorelliGenDescriptor{name, std::move(kind), std::move(action)});
  validate_descriptor(*descriptor);
  return {std::move(name), std::move(descriptor)};
}

// Conjugation of the first `count` generators by c, identity elsewhere.
GeneratorEntry conjugation_entry(std::string name, int genus, int count, const Word& c,
                                 std::variant<BsccKind, BpKind> kind) {
  const int rank = 2 * genus;
  std::vector<Word> images, inverse_images;
  for (int i = 1; i <= rank; ++i) {
    const Word x = Word::generator(rank, i);
    if (i <= count) {
      images.push_back(multiply(multiply(c, x), invert(c)));
      inverse_images.push_back(multiply(multiply(invert(c), x), c));
    } else {
      images.push_back(x);
      inverse_images.push_back(x);
    }
  }
  return make_entry(std::move(name), std::move(kind), std::move(images), std::move(inverse_images), genus);
}

std::vector<SymplecticPair> standard_pairs(int genus, int h) {
  std::vector<SymplecticPair> pairs;
  for (int i = 1; i <= h; ++i) pairs.emplace_back(H1Vector::x(genus, i), H1Vector::y(genus, i));
  return pairs;
}

// Bounding pair map on handles 1, 2 of a genus-2 surface, in the twist
// convention where the twist about c_1 conjugates by c_1. It is the
// product T_{a2}^2 (T_{a1} T_{b1} T_c)^-4 of chain-curve twists, using
// the 3-chain relation for the chain a1, b1, c (c linking the handles).
constexpr const char* kBpImages[] = {
    "a2' b1 a1 b1' a1 b1 a1' b1' a2",
    "a2' b1 a1 b1' a1' b1 a1 b1 a1' b1' a2",
    "a2' b1 a1 b1' a1' a2 a1 b1 a1' b1' a2",
    "b2 a2' a1 b1 a1' b1' a2",
};
constexpr const char* kBpInverseImages[] = {
    "a1 b1 a1' b1' a2 a1 a2' b1 a1 b1' a1'",
    "a1 b1 a1' b1' a2 b1 a2' b1 a1 b1' a1'",
    "a1 b1 a1' b1' a2 b1 a1 b1' a1'",
    "b2 b1 a1 b1' a1'",
};

std::vector<Word> shifted_table(const char* const (&table)[4], int genus, int h) {
  const int rank = 2 * genus;
  const int shift = 2 * (h - 1);
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  for (int i = 0; i < 4; ++i) {
    const Word base = parse_word(table[i], 2);
    std::vector<Letter> letters;
    for (Letter x : base.letters()) letters.push_back(x > 0 ? x + shift : x - shift);
    images[static_cast<std::size_t>(i + shift)] = Word::reduce(rank, letters);
  }
  return images;
}

}  // namespace

GeneratorEntry bscc_twist(int genus, int h) {
  if (h < 1 || h >= genus)
    throw InvalidArgument("separating twist needs 1 <= h < g (got h=" + std::to_string(h) + ")");
  const int rank = 2 * genus;
  Word c = Word::identity(rank);
  for (int i = 1; i <= h; ++i)
    c = multiply(c, commutator(Word::generator(rank, 2 * i - 1), Word::generator(rank, 2 * i)));
  return conjugation_entry("BSCC:" + std::to_string(h), genus, 2 * h, c, BsccKind{standard_pairs(genus, h)});
}

GeneratorEntry boundary_twist(int genus) {
  return conjugation_entry("BDRY", genus, 2 * genus, boundary_word(genus),
                           BsccKind{standard_pairs(genus, genus)});
}

GeneratorEntry bp_map(int genus, std::string_view handles) {
  if (genus < 2) throw InvalidArgument("bounding pair maps need genus >= 2");
  const int h = handles == "std" ? 1 : detail::parse_int(handles).value_or(0);
  if (h < 1 || h >= genus) throw UnknownGenerator("BP:" + std::string(handles));

  const std::string name = h == 1 ? "BP:std" : "BP:" + std::to_string(h);
  BpKind kind{H1Vector::x(genus, h + 1), {H1Vector::x(genus, h), H1Vector::y(genus, h)}};
  GeneratorEntry entry = make_entry(name, kind, shifted_table(kBpImages, genus, h),
                                    shifted_table(kBpInverseImages, genus, h), genus);
  // Shipped tables are gated on: Torelli (checked above) and tau_2 != 0.
  if (tau(entry.action(), 2).is_zero())
    throw ValidationFailed(name + ": bounding pair map with vanishing tau_2");
  return entry;
}

std::vector<GeneratorEntry> library(int genus) {
  std::vector<GeneratorEntry> out;
  for (int h = 1; h < genus; ++h) out.push_back(bscc_twist(genus, h));
  out.push_back(boundary_twist(genus));
  for (int h = 1; h < genus; ++h) out.push_back(bp_map(genus, h == 1 ? "std" : std::to_string(h)));
  return out;
}

GeneratorEntry library_entry(int genus, std::string_view name) {
  if (name == "BDRY") return boundary_twist(genus);
  if (name.starts_with("BP:")) return bp_map(genus, name.substr(3));
  if (name.starts_with("BSCC:")) {
    const int h = detail::parse_int(name.substr(5)).value_or(0);
    if (h < 1 || h >= genus) throw UnknownGenerator(std::string(name));
    return bscc_twist(genus, h);
  }
  throw UnknownGenerator(std::string(name));
}

// Line handling shared by both formats -----------------------------------------

namespace {

struct Line {
  int number;
  std::string text;  // comment stripped
  int indent;        // column of first non-space character (0-based)
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(pos, end - pos));
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first < line.size()) out.push_back({number, line, static_cast<int>(first)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string first_token(const std::string& s) {
  std::istringstream in(s);
  std::string t;
  in >> t;
  return t;
}

int parse_genus_line(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  std::istringstream in(lines[0].text);
  std::string keyword, extra;
  int genus = 0;
  if (!(in >> keyword) || keyword != "genus" || !(in >> genus) || (in >> extra))
    throw ParseError("expected 'genus <g>'", lines[0].number, lines[0].indent + 1);
  if (genus < 1) throw ParseError("genus must be at least 1", lines[0].number, lines[0].indent + 1);
  return genus;
}

int generator_index(const std::string& token, int genus) {
  if (token.size() < 2 || (token[0] != 'a' && token[0] != 'b')) return 0;
  for (std::size_t i = 1; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return 0;
  const int handle = detail::parse_int(std::string_view(token).substr(1)).value_or(0);
  if (handle < 1 || handle > genus) return 0;
  return token[0] == 'a' ? 2 * handle - 1 : 2 * handle;
}

}  // namespace

MappingClass parse_map_file(std::string_view text, bool check) {
  const auto lines = significant_lines(text);
  const int genus = parse_genus_line(lines);
  const int rank = 2 * genus;

  AliasTable aliases;
  std::vector<std::optional<Word>> images(static_cast<std::size_t>(rank));
  std::vector<std::optional<Word>> inverse_images(static_cast<std::size_t>(rank));
  enum class Section { Preamble, Map, Inverse } section = Section::Preamble;
  bool saw_inverse = false;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string head = first_token(line.text);
    if (head == "let") {
      if (section != Section::Preamble)
        throw ParseError("'let' must precede the map section", line.number, line.indent + 1);
      const auto eq = line.text.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'let <name> = <word>'", line.number, line.indent + 1);
      std::istringstream name_in(line.text.substr(0, eq));
      std::string let, name, extra;
      name_in >> let >> name;
      if (name.empty() || (name_in >> extra))
        throw ParseError("expected a single alias name", line.number, line.indent + 1);
      if (generator_index(name, genus) || name == "1" || name.find('\'') != std::string::npos)
        throw ParseError("alias '" + name + "' shadows a generator", line.number, line.indent + 1);
      aliases.insert_or_assign(name, parse_word(std::string_view(line.text).substr(eq + 1), genus, aliases,
                                                line.number, static_cast<int>(eq) + 1));
      continue;
    }
    if (head == "map" && line.text.find("->") == std::string::npos) {
      if (section != Section::Preamble) throw ParseError("duplicate 'map' header", line.number, line.indent + 1);
      section = Section::Map;
      continue;
    }
    if (head == "inverse" && line.text.find("->") == std::string::npos) {
      if (section != Section::Map) throw ParseError("'inverse' must follow the map section", line.number, line.indent + 1);
      section = Section::Inverse;
      saw_inverse = true;
      continue;
    }
    const auto arrow = line.text.find("->");
    if (arrow == std::string::npos || section == Section::Preamble)
      throw ParseError("unexpected line", line.number, line.indent + 1);
    const std::string gen = first_token(line.text.substr(0, arrow));
    const int index = generator_index(gen, genus);
    if (!index) throw ParseError("unknown generator '" + gen + "'", line.number, line.indent + 1);
    auto& slot = (section == Section::Map ? images : inverse_images)[static_cast<std::size_t>(index - 1)];
    if (slot) throw ParseError("generator '" + gen + "' defined twice", line.number, line.indent + 1);
    slot = parse_word(std::string_view(line.text).substr(arrow + 2), genus, aliases, line.number,
                      static_cast<int>(arrow) + 2);
  }

  const int last_line = lines.back().number;
  auto collect = [&](std::vector<std::optional<Word>>& slots, const char* what) {
    std::vector<Word> out;
    for (int i = 1; i <= rank; ++i) {
      auto& slot = slots[static_cast<std::size_t>(i - 1)];
      if (!slot)
        throw ParseError(std::string(what) + " section lacks generator " + generator_name(i, rank), last_line, 1);
      out.push_back(*slot);
    }
    return out;
  };
  if (section == Section::Preamble) throw ParseError("missing 'map' section", last_line, 1);
  std::vector<Word> image_words = collect(images, "map");
  std::optional<std::vector<Word>> inverse_words;
  if (saw_inverse) inverse_words = collect(inverse_images, "inverse");

  MappingClass f(genus, std::move(image_words), std::move(inverse_words));
  if (check) require_valid(f);
  return f;
}

std::string serialize_map(const MappingClass& f) {
  std::ostringstream out;
  out << "genus " << f.genus() << "\nmap\n";
  for (int i = 1; i <= f.rank(); ++i) out << generator_name(i, f.rank()) << " -> " << to_string(f.image(i)) << '\n';
  if (f.inverse_images()) {
    out << "inverse\n";
    for (int i = 1; i <= f.rank(); ++i)
      out << generator_name(i, f.rank()) << " -> " << to_string((*f.inverse_images())[static_cast<std::size_t>(i - 1)])
          << '\n';
  }
  return out.str();
}

// .tor files --------------------------------------------------------------------

MapLoader file_loader(std::string base_dir) {
  return [base = std::move(base_dir)](const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative() && !base.empty()) p = std::filesystem::path(base) / p;
    std::ifstream in(p);
    if (!in) throw InvalidArgument("cannot read action file '" + p.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
}

MappingClass TorFile::action() const { return composed_action(genus, word); }

namespace {

// Splits `(x1 y1)(x2 y2)` or `(x1 y1) (x2 y2)` into pairs of class strings.
std::vector<std::pair<std::string, std::string>> parse_pair_list(std::string_view text, const Line& line) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError("expected '('", line.number, static_cast<int>(pos) + 1);
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unclosed '('", line.number, static_cast<int>(pos) + 1);
    std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
    std::string a, b, extra;
    if (!(in >> a >> b) || (in >> extra))
      throw ParseError("a pair needs exactly two classes", line.number, static_cast<int>(pos) + 1);
    out.emplace_back(a, b);
    pos = close + 1;
  }
  return out;
}

bool is_standard_prefix(const std::vector<SymplecticPair>& pairs, int genus) {
  const auto standard = standard_pairs(genus, static_cast<int>(pairs.size()));
  return pairs == standard;
}

}  // namespace

TorFile parse_tor_file(std::string_view text, const MapLoader& loader) {
  const auto lines = significant_lines(text);
  TorFile file;
  file.genus = parse_genus_line(lines);
  const int g = file.genus;

  std::map<std::string, std::shared_ptr<const TorelliGenDescriptor>> declared;
  bool saw_word = false;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string head = first_token(line.text);
    if (saw_word) throw ParseError("'word' must be the final line", line.number, line.indent + 1);

    if (head == "gen") {
      std::istringstream in(line.text);
      std::string gen, name, kind;
      in >> gen >> name >> kind;
      if (name.empty() || kind.empty()) throw ParseError("expected 'gen <Name> <kind> ...'", line.number, line.indent + 1);
      if (name.find('\'') != std::string::npos || name.find(':') != std::string::npos || name == "BDRY")
        throw ParseError("invalid generator name '" + name + "'", line.number, line.indent + 1);
      if (declared.count(name)) throw ParseError("generator '" + name + "' declared twice", line.number, line.indent + 1);
      std::string rest;
      std::getline(in, rest);

      std::optional<std::string> action_path;
      if (auto at = rest.find(" action "); at != std::string::npos) {
        std::istringstream path_in(rest.substr(at + 8));
        std::string path, extra;
        if (!(path_in >> path) || (path_in >> extra))
          throw ParseError("expected 'action <map-file-path>'", line.number, line.indent + 1);
        action_path = path;
        rest.erase(at);
      }
      auto load_action = [&]() {
        const std::string map_text = loader(*action_path);
        MappingClass m = parse_map_file(map_text);
        if (m.genus() != g) throw InvalidDescriptor(name + ": action has genus " + std::to_string(m.genus()));
        return m.with_decomposition({{name, 1}});
      };

      std::istringstream rin(rest);
      std::string keyword;
      rin >> keyword;
      std::string tail;
      std::getline(rin, tail);
      TorelliGenDescriptor descriptor{name, BsccKind{}, MappingClass::identity(g)};
      if (kind == "bscc") {
        if (keyword != "pairs") throw ParseError("expected 'pairs' after bscc", line.number, line.indent + 1);
        BsccKind bscc;
        for (const auto& [a, b] : parse_pair_list(tail, line))
          bscc.pairs.emplace_back(parse_h1_vector(a, g), parse_h1_vector(b, g));
        require_symplectic(bscc.pairs);
        if (action_path) {
          descriptor.action = load_action();
        } else if (is_standard_prefix(bscc.pairs, g) && !bscc.pairs.empty()) {
          const int h = static_cast<int>(bscc.pairs.size());
          descriptor.action = (h == g ? boundary_twist(g) : bscc_twist(g, h)).action().with_decomposition({{name, 1}});
        } else {
          throw InvalidDescriptor(name + ": non-standard bscc pairs need an 'action' file");
        }
        descriptor.kind = std::move(bscc);
      } else if (kind == "bp") {
        if (keyword != "class") throw ParseError("expected 'class' after bp", line.number, line.indent + 1);
        const auto pair_at = tail.find("pair");
        if (pair_at == std::string::npos) throw ParseError("expected 'pair (<sum> <sum>)'", line.number, line.indent + 1);
        const H1Vector curve = parse_h1_vector(tail.substr(0, pair_at), g);
        const auto pairs = parse_pair_list(std::string_view(tail).substr(pair_at + 4), line);
        if (pairs.size() != 1) throw InvalidDescriptor(name + ": bp needs exactly one pair");
        if (!action_path) throw InvalidDescriptor(name + ": bp generators need an 'action' file");
        descriptor.kind = BpKind{curve, {parse_h1_vector(pairs[0].first, g), parse_h1_vector(pairs[0].second, g)}};
        descriptor.action = load_action();
      } else {
        throw ParseError("unknown generator kind '" + kind + "'", line.number, line.indent + 1);
      }
      validate_descriptor(descriptor);
      auto shared = std::make_shared<const TorelliGenDescriptor>(std::move(descriptor));
      declared.emplace(name, shared);
      file.declarations.push_back({shared, action_path});
      continue;
    }

    if (head == "word") {
      saw_word = true;
      std::istringstream in(line.text);
      std::string token;
      in >> token;  // "word"
      std::map<std::string, std::shared_ptr<const TorelliGenDescriptor>> builtins;
      while (in >> token) {
        int exponent = 1;
        std::string name = token;
        while (!name.empty() && name.back() == '\'') {
          exponent = -exponent;
          name.pop_back();
        }
        std::shared_ptr<const TorelliGenDescriptor> gen;
        if (auto it = declared.find(name); it != declared.end()) {
          gen = it->second;
        } else if (auto bt = builtins.find(name); bt != builtins.end()) {
          gen = bt->second;
        } else {
          gen = library_entry(g, name).descriptor;
          builtins.emplace(name, gen);
        }
        file.word.push_back({gen, exponent});
      }
      continue;
    }
    throw ParseError("unexpected line", line.number, line.indent + 1);
  }
  if (!saw_word) throw ParseError("missing 'word' line", lines.back().number, 1);
  return file;
}

std::string serialize_tor(const TorFile& file) {
  std::ostringstream out;
  out << "genus " << file.genus << '\n';
  for (const auto& decl : file.declarations) {
    const auto& d = *decl.generator;
    out << "gen " << d.name;
    if (const auto* bscc = std::get_if<BsccKind>(&d.kind)) {
      out << " bscc pairs ";
      for (const auto& [x, y] : bscc->pairs) out << '(' << to_string(x) << ' ' << to_string(y) << ')';
    } else {
      const auto& bp = std::get<BpKind>(d.kind);
      out << " bp class " << to_string(bp.curve_class) << " pair (" << to_string(bp.pair.first) << ' '
          << to_string(bp.pair.second) << ')';
    }
    if (decl.action_path) out << " action " << *decl.action_path;
    out << '\n';
  }
  out << "word";
  for (const auto& letter : file.word) out << ' ' << letter.generator->name << (letter.exponent < 0 ? "'" : "");
  out << '\n';
  return out.str();
}

InputKind detect_input_kind(std::string_view text) {
  for (const Line& line : significant_lines(text)) {
    const std::string head = first_token(line.text);
    if (head == "gen" || head == "word") return InputKind::Tor;
    if (head == "map") return InputKind::Map;
  }
  throw ParseError("cannot tell .map from .tor input (no 'map' or 'word' line)", 1, 1);
}

}  // namespace torelli
