#pragma once

// Built-in surface model, the library of Torelli generators, and the
// .map / .tor input formats.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torelli/freegroup.hpp"
#include "torelli/spinquad.hpp"

namespace torelli {

struct SurfaceModel {
  int genus = 0;
  std::vector<std::string> generator_names;  // a1 b1 ... ag bg
  Word boundary;                             // [a1,b1]...[ag,bg]
  std::vector<std::vector<int>> intersection_form;  // standard symplectic
};

SurfaceModel surface_model(int genus);

struct GeneratorEntry {
  std::string name;
  std::shared_ptr<const TorelliGenDescriptor> descriptor;

  const MappingClass& action() const { return descriptor->action; }
  TorelliLetter letter(int exponent = 1) const { return {descriptor, exponent}; }
};

/// Twist about c_h = [a1,b1]...[ah,bh]: conjugates a1..bh by c_h, fixes the
/// rest. Requires 1 <= h < g.
GeneratorEntry bscc_twist(int genus, int h);

/// Twist about the boundary-parallel curve: conjugation by zeta.
GeneratorEntry boundary_twist(int genus);

/// Genus-1 bounding pair map supported on handles h and h+1 (`std` means
/// h = 1): curves of class x_{h+1} cobounding the subsurface with
/// symplectic basis (x_h, y_h). Requires g >= 2.
GeneratorEntry bp_map(int genus, std::string_view handles = "std");

/// BSCC:1..g-1, BDRY, BP:std and BP:2..g-1.
std::vector<GeneratorEntry> library(int genus);

/// Resolves `BSCC:h`, `BP:std`, `BP:h`, `BDRY`. Throws UnknownGenerator.
GeneratorEntry library_entry(int genus, std::string_view name);

/// Parses and, unless `check` is false, validates a .map file.
MappingClass parse_map_file(std::string_view text, bool check = true);
std::string serialize_map(const MappingClass& f);

struct TorDeclaration {
  std::shared_ptr<const TorelliGenDescriptor> generator;
  std::optional<std::string> action_path;
};

struct TorFile {
  int genus = 0;
  std::vector<TorDeclaration> declarations;
  TorelliWord word;

  MappingClass action() const;
};

/// Returns the text of the .map file at `path`.
using MapLoader = std::function<std::string(const std::string& path)>;

/// Reads action files from disk relative to `base_dir` (empty: as given).
MapLoader file_loader(std::string base_dir = {});

TorFile parse_tor_file(std::string_view text, const MapLoader& loader = file_loader());
std::string serialize_tor(const TorFile& file);

enum class InputKind { Map, Tor };
InputKind detect_input_kind(std::string_view text);

}  // namespace torelli
