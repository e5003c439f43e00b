#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "torelli/torelli.hpp"

namespace torelli::cli {

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::optional<int> k;
  std::optional<int> max_k;
  std::optional<int> genus;
  std::optional<int> n;
  std::optional<int> arf;
  std::string form;
  bool all_forms = false;
  bool filled = false;
  std::string basis = "lyndon";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Input {
  std::optional<TorFile> tor;
  MappingClass action;
};

Input load_input(const std::string& path) {
  const std::string text = read_file(path);
  if (detect_input_kind(text) == InputKind::Map) return {std::nullopt, parse_map_file(text)};
  const std::string dir = std::filesystem::path(path).parent_path().string();
  TorFile tor = parse_tor_file(text, file_loader(dir));
  MappingClass action = tor.action();
  return {std::move(tor), std::move(action)};
}

const std::string& single_input(const Options& o) {
  if (o.inputs.size() != 1) throw InvalidArgument("this command takes exactly one -i input");
  return o.inputs.front();
}

const TorFile& require_tor(const Input& in) {
  if (!in.tor) throw InvalidArgument("this command needs a .tor input");
  return *in.tor;
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string("missing ") + flag);
  return *v;
}

int cmd_depth(const Options& o, std::ostream& out) {
  const Input in = load_input(single_input(o));
  const int cutoff = o.max_k.value_or(kDefaultDepthCutoff);
  out << to_string(filtration_depth(in.action, cutoff), in.action.genus());
  return 0;
}

int cmd_tau(const Options& o, std::ostream& out) {
  const Input in = load_input(single_input(o));
  out << to_string(tau(in.action, require(o.k, "-k")), o.basis == "monomial");
  return 0;
}

int cmd_tower(const Options& o, std::ostream& out) {
  const Input in = load_input(single_input(o));
  const TauTower tower = tau_tower(in.action, o.k.value_or(2), o.max_k.value_or(kDefaultTowerMax));
  for (const auto& level : tower.levels) out << to_string(level.value, o.basis == "monomial");
  if (tower.first_nonzero)
    out << "first nonzero: k=" << *tower.first_nonzero << '\n';
  else
    out << "first nonzero: none\n";
  return 0;
}

int cmd_bordant(const Options& o, std::ostream& out) {
  if (o.inputs.size() != 2) throw InvalidArgument("bordant takes exactly two -i inputs");
  const Input f = load_input(o.inputs[0]);
  const Input h = load_input(o.inputs[1]);
  const int k = require(o.k, "-k");
  out << "bordant k=" << k << ": " << (bordant(f.action, h.action, k) ? "true" : "false") << '\n';
  return 0;
}

int cmd_morita(const Options& o, std::ostream& out) {
  const Input in = load_input(single_input(o));
  const int k = require(o.k, "-k");
  const MoritaResult r = morita_check(in.action, k);
  out << "morita k=" << k << ": " << (r.contained ? "contained" : "NOT CONTAINED") << '\n'
      << "bracket:\n"
      << to_string(r.bracket);
  return 0;
}

int cmd_bc(const Options& o, std::ostream& out) {
  const Input in = load_input(single_input(o));
  const TorFile& tor = require_tor(in);
  std::vector<QuadForm> forms;
  if (o.all_forms)
    forms = enumerate_forms(tor.genus, false);
  else if (!o.form.empty())
    forms.push_back(parse_form_literal(o.form));
  else
    throw InvalidArgument("bc needs --form or --all-forms");
  for (const QuadForm& q : forms) {
    const bool bit = rho(q, tor.word);
    out << to_string(q) << " rho=" << (bit ? 1 : 0) << '\n';
  }
  return 0;
}

int cmd_eta2(const Options& o, std::ostream& out) {
  const Input in = load_input(single_input(o));
  const TorFile& tor = require_tor(in);
  const Eta2Value value = eta2(tor.genus, tor.word);
  out << to_string(value) << "trivial: " << (value.is_trivial() ? "true" : "false") << '\n';
  return 0;
}

int cmd_forms(const Options& o, std::ostream& out) {
  const int g = require(o.genus, "--genus");
  std::optional<bool> filter;
  if (o.arf) filter = *o.arf == 1;
  const auto forms = enumerate_forms(g, filter);
  out << "forms genus=" << g << " arf=" << (o.arf ? std::to_string(*o.arf) : "any") << " count=" << forms.size()
      << '\n';
  for (const QuadForm& q : forms) out << to_string(q) << '\n';
  return 0;
}

int cmd_lie(const Options& o, std::ostream& out) {
  const int n = o.n ? *o.n : 2 * require(o.genus, "--genus or -n");
  const int k = require(o.k, "-k");
  const auto basis = lyndon_basis(n, k);
  out << "lie n=" << n << " k=" << k << " dim=" << witt_dim(n, k) << '\n';
  for (const LyndonWord& w : basis) {
    out << "L[";
    for (std::size_t i = 0; i < w.indices().size(); ++i) out << (i ? " " : "") << w.indices()[i];
    out << "]\n";
    if (o.basis == "monomial") out << to_string(bracketing(w));
  }
  return 0;
}

int cmd_present(const Options& o, std::ostream& out) {
  const Input in = load_input(single_input(o));
  out << to_string(o.filled ? present_filled(in.action) : present_mapping_torus(in.action));
  return 0;
}

int cmd_blocks(const Options& o, std::ostream& out) {
  out << to_string(eta_block_ranks(require(o.genus, "--genus"), require(o.k, "-k")));
  return 0;
}

int cmd_gens(const Options& o, std::ostream& out) {
  const int g = require(o.genus, "--genus");
  for (const GeneratorEntry& e : library(g)) {
    const auto& d = *e.descriptor;
    out << "gen " << e.name;
    if (const auto* bscc = std::get_if<BsccKind>(&d.kind)) {
      out << " bscc pairs ";
      for (const auto& [x, y] : bscc->pairs) out << '(' << to_string(x) << ' ' << to_string(y) << ')';
    } else {
      const auto& bp = std::get<BpKind>(d.kind);
      out << " bp class " << to_string(bp.curve_class) << " pair (" << to_string(bp.pair.first) << ' '
          << to_string(bp.pair.second) << ')';
    }
    const DepthReport r = filtration_depth(d.action, kDefaultDepthCutoff);
    out << " depth " << (r.depth ? "= " + std::to_string(*r.depth) : ">= " + std::to_string(r.cutoff + 1)) << '\n';
    out << serialize_map(d.action);
  }
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string& path = single_input(o);
  const std::string text = read_file(path);
  MappingClass f = detect_input_kind(text) == InputKind::Map
                       ? parse_map_file(text, false)
                       : parse_tor_file(text, file_loader(std::filesystem::path(path).parent_path().string())).action();
  const ValidationReport report = validate(f);
  for (const auto& c : report.checks) out << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.detail << ")\n";
  if (!report.ok()) {
    err << "validation failed\nerror: VALIDATION_FAILED\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Johnson filtration invariants of surface mapping classes", "torelli"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* c) { c->add_option("-i,--input", o.inputs, ".map or .tor file")->required(); };
  auto add_k = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("-k", o.k, "filtration degree");
    if (required) opt->required();
  };
  auto add_basis = [&](CLI::App* c) {
    c->add_option("--basis", o.basis, "output basis")->check(CLI::IsMember({"lyndon", "monomial"}));
  };

  auto* depth = app.add_subcommand("depth", "Johnson filtration depth");
  add_input(depth);
  depth->add_option("--max-k", o.max_k, "Magnus truncation cutoff");

  auto* tau_cmd = app.add_subcommand("tau", "Johnson homomorphism tau_k");
  add_input(tau_cmd);
  add_k(tau_cmd, true);
  add_basis(tau_cmd);

  auto* tower = app.add_subcommand("tau-tower", "tau_k from -k up to the first nonzero level");
  add_input(tower);
  add_k(tower, false);
  tower->add_option("--max-k", o.max_k, "last level");
  add_basis(tower);

  auto* bord = app.add_subcommand("bordant", "equality of sigma_k for two mapping classes");
  add_input(bord);
  add_k(bord, true);

  auto* morita = app.add_subcommand("morita-check", "bracket of the symplectic dual of tau_k");
  add_input(morita);
  add_k(morita, true);

  auto* bc = app.add_subcommand("bc", "Birman-Craggs homomorphisms of a Torelli word");
  add_input(bc);
  bc->add_option("--form", o.form, "quadratic form literal");
  bc->add_flag("--all-forms", o.all_forms, "every form with Arf invariant 0");

  auto* eta = app.add_subcommand("eta2", "tau_2 together with every rho_q");
  add_input(eta);

  auto* forms = app.add_subcommand("forms", "enumerate quadratic forms");
  forms->add_option("--genus", o.genus)->required();
  forms->add_option("--arf", o.arf, "keep only forms with this Arf invariant")->check(CLI::Range(0, 1));

  auto* lie = app.add_subcommand("lie", "Lyndon basis and Witt dimension");
  lie->add_option("--genus", o.genus, "alphabet 2g");
  lie->add_option("-n", o.n, "alphabet size");
  add_k(lie, true);
  add_basis(lie);

  auto* present = app.add_subcommand("present", "mapping torus presentation");
  add_input(present);
  present->add_flag("--filled", o.filled, "Dehn filling along gamma");

  auto* blocks = app.add_subcommand("blocks", "spin bordism block ranks");
  blocks->add_option("--genus", o.genus)->required();
  add_k(blocks, true);

  auto* gens = app.add_subcommand("gens", "list the built-in generator library");
  gens->add_option("--genus", o.genus)->required();

  auto* val = app.add_subcommand("validate", "check mapping class invariants");
  add_input(val);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\nerror: USAGE\n";
    return 2;
  }

  try {
    if (depth->parsed()) return cmd_depth(o, out);
    if (tau_cmd->parsed()) return cmd_tau(o, out);
    if (tower->parsed()) return cmd_tower(o, out);
    if (bord->parsed()) return cmd_bordant(o, out);
    if (morita->parsed()) return cmd_morita(o, out);
    if (bc->parsed()) return cmd_bc(o, out);
    if (eta->parsed()) return cmd_eta2(o, out);
    if (forms->parsed()) return cmd_forms(o, out);
    if (lie->parsed()) return cmd_lie(o, out);
    if (present->parsed()) return cmd_present(o, out);
    if (blocks->parsed()) return cmd_blocks(o, out);
    if (gens->parsed()) return cmd_gens(o, out);
    if (val->parsed()) return cmd_validate(o, out, err);
  } catch (const Error& e) {
    err << e.what() << "\nerror: " << e.code() << '\n';
    return e.is_input_error() ? 2 : 1;
  } catch (const std::exception& e) {
    err << e.what() << "\nerror: INTERNAL\n";
    return 1;
  }
  err << "no command\nerror: USAGE\n";
  return 2;
}

}  // namespace torelli::cli
