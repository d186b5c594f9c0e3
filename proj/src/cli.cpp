#include "bihom/cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "bihom/catalog.hpp"
#include "bihom/construct.hpp"
#include "bihom/errors.hpp"
#include "bihom/io.hpp"
#include "bihom/registry.hpp"
#include "bihom/structures.hpp"

namespace bihom {

namespace {

struct ModeArgs {
  std::string mode = "symbolic";
  std::size_t samples = 5;
  std::uint64_t seed = 0;
  std::string report;
  bool json = false;
  bool serial = false;

  void attach(CLI::App* app) {
    app->add_option("--mode", mode, "symbolic or sampled")->check(CLI::IsMember({"symbolic", "sampled"}));
    app->add_option("--samples", samples, "parameter points in sampled mode");
    app->add_option("--seed", seed, "seed for sample points and exponent tuples");
    app->add_option("--report", report, "write the JSON report to this path");
    app->add_flag("--json", json, "print JSON instead of text");
    app->add_flag("--serial", serial, "evaluate without threads");
  }

  CheckMode build() const {
    CheckMode m = mode == "sampled" ? CheckMode::sampled(samples, seed) : CheckMode{};
    m.seed = seed;
    m.eval.parallel = !serial;
    return m;
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

int exit_code(Status s) { return s == Status::pass ? 0 : s == Status::fail ? 1 : 2; }

ExponentTuple parse_exponents(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 8) throw SyntaxError("exponent tuple needs 8 integers (m,n,l,s,p,q,k,t): '" + text + "'", 0);
  std::array<int, 8> v{};
  for (std::size_t i = 0; i < 8; ++i) {
    std::size_t used = 0;
    try {
      v[i] = std::stoi(parts[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != parts[i].size()) throw SyntaxError("bad exponent '" + parts[i] + "'", 0);
  }
  return ExponentTuple::from_values(v);
}

// "mul:a,b^-1" -> twist of mul by a in slot 1 and b^-1 in slot 2
TwistSpec parse_twist(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0) throw SyntaxError("twist must look like op:map,map ('" + text + "')", 0);
  TwistSpec spec;
  spec.op = text.substr(0, colon);
  for (const auto& s : split(text.substr(colon + 1), ',')) {
    TwistSlot slot;
    auto caret = s.find('^');
    slot.map = s.substr(0, caret);
    if (caret != std::string::npos) {
      std::size_t used = 0;
      std::string e = s.substr(caret + 1);
      try {
        slot.power = std::stoi(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != e.size()) throw SyntaxError("bad power in '" + s + "'", caret + 1);
    }
    if (slot.map.empty()) throw SyntaxError("empty map name in '" + text + "'", 0);
    spec.slots.push_back(slot);
  }
  return spec;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err, bool color) : out_(out), err_(err), color_(color) {}

  int emit(const Report& r, const AlgebraBundle& b, const ModeArgs& m) {
    if (!m.report.empty()) write_file(m.report, report_to_json(r, b));
    if (m.json)
      out_ << report_to_json(r, b);
    else
      out_ << report_to_text(r, b, color_);
    return exit_code(r.overall);
  }

  int check(const std::string& path, const std::string& structure, const ModeArgs& m) {
    AlgebraBundle b = load_bundle(path);
    return emit(check_structure(structure, b, m.build()), b, m);
  }

  int identities(const std::string& path, const std::string& set, const std::vector<std::string>& exps,
                 const std::string& map, const std::string& ops, const ModeArgs& m) {
    AlgebraBundle b = load_bundle(path);
    CheckMode mode = m.build();
    for (const auto& e : exps) mode.exponents.push_back(parse_exponents(e));
    Report r;
    if (set == "tbp-consequences") {
      r = check_tbp_consequences(b, mode);
    } else if (set == "shift-family") {
      r = check_shift_family(b, mode);
    } else if (set == "shift-fixed") {
      StructureDef def = Registry::builtin().get("shift-family");
      def.templates.clear();
      def.name = "shift-fixed";
      r = check_structure(def, b, mode);
    } else if (set == "overlap") {
      r = check_overlap_tbp_bp(b, mode);
    } else if (set == "ternary-overlap") {
      r = check_ternary_overlap(b, mode);
    } else if (set == "involution-condition") {
      r = check_structure("involution-tbp3", b, mode);
    } else if (set == "np-compat-equivalence") {
      r = check_novikov_compat_equivalence(b, mode);
    } else if (set == "derivation") {
      r = check_derivation(b, map.empty() ? "D" : map, split(ops.empty() ? "mul" : ops, ','), true, mode);
    } else if (set == "involution") {
      r = check_involution(b, map.empty() ? "f" : map, mode);
    } else {
      err_ << "error: unknown identity set '" << set << "'\n";
      return 2;
    }
    return emit(r, b, m);
  }

  int construct(const std::string& kind, const std::string& input, const std::string& output, bool relaxed,
                const std::string& map, const std::vector<std::string>& twists, const std::string& vars,
                std::size_t bound, const std::vector<std::string>& fields) {
    ConstructOptions opt;
    opt.strict = !relaxed;
    AlgebraBundle r;
    if (kind == "truncated") {
      if (vars.empty() || bound == 0) throw SyntaxError("truncated needs --vars and --bound", 0);
      Truncated t = truncated_polynomials(split(vars, ','), bound);
      r = t.bundle;
      for (const auto& f : fields) {
        auto eq = f.find('=');
        if (eq == std::string::npos) throw SyntaxError("field must look like NAME=c1,c2,...", 0);
        r.maps[f.substr(0, eq)] = t.vector_field(split(f.substr(eq + 1), ','));
      }
    } else {
      if (input.empty()) throw SyntaxError("construct " + kind + " needs an input bundle", 0);
      AlgebraBundle b = load_bundle(input);
      if (kind == "derivation-tbp") {
        r = derivation_tbp(b, opt);
      } else if (kind == "pre-lie") {
        r = pre_lie_from_derivation(b, opt);
      } else if (kind == "np-commutator") {
        r = np_commutator(b, opt);
      } else if (kind == "ternary-d") {
        r = ternary_from_derivation(b, map.empty() ? "D" : map, opt);
      } else if (kind == "ternary-f") {
        r = ternary_from_involution(b, map.empty() ? "f" : map, opt);
      } else if (kind == "ternary-m") {
        r = ternary_from_product(b, opt);
      } else if (kind == "twist") {
        std::vector<TwistSpec> specs;
        for (const auto& t : twists) specs.push_back(parse_twist(t));
        if (specs.empty()) throw SyntaxError("twist needs at least one --twist op:map,...", 0);
        r = yau_twist(b, specs, opt);
      } else {
        err_ << "error: unknown construction '" << kind << "'\n";
        return 2;
      }
    }
    save_bundle(r, output);
    out_ << "wrote " << output << " (" << r.id << ", dim " << r.dim() << ")\n";
    if (r.provenance)
      for (const auto& w : r.provenance->warnings) err_ << "warning: " << w << "\n";
    return 0;
  }

  int tensor(const std::string& pa, const std::string& pb, const std::string& kind, const std::string& output,
             const std::string& rename) {
    AlgebraBundle A = load_bundle(pa);
    AlgebraBundle B = load_bundle(pb);
    if (!rename.empty()) {
      std::map<std::string, std::string> renames;
      for (const auto& r : split(rename, ',')) {
        auto eq = r.find('=');
        if (eq == std::string::npos) throw SyntaxError("rename must look like old=new", 0);
        renames[r.substr(0, eq)] = r.substr(eq + 1);
      }
      B = rename_params(B, renames);
    }
    std::vector<std::string> params = A.ring.params;
    for (const auto& p : B.ring.params)
      if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
    A = extend_ring(A, params);
    B = extend_ring(B, params);
    AlgebraBundle r = tensor_bundle(A, B, kind == "bp-tbp" ? TensorKind::bp_tbp : TensorKind::pre_lie_poisson);
    save_bundle(r, output);
    out_ << "wrote " << output << " (" << r.id << ", dim " << r.dim() << ")\n";
    if (r.provenance)
      for (const auto& w : r.provenance->warnings) err_ << "warning: " << w << "\n";
    return 0;
  }

  int catalog_list() {
    for (const auto& e : catalog_entries()) {
      std::string ops;
      for (const auto& [name, op] : e.ops)
        if (!op.is_zero()) ops += (ops.empty() ? "" : ",") + name;
      out_ << e.catalog->entry << "\tcase " << e.catalog->case_label << "\t" << e.catalog->status << "\tparams "
           << e.ring.params.size() << "\tnonzero ops " << (ops.empty() ? "-" : ops) << "\n";
    }
    return 0;
  }

  int catalog_show(int n) {
    out_ << bundle_to_string(catalog_entry(n));
    return 0;
  }

  int catalog_verify(const std::string& entries, const ModeArgs& m) {
    CatalogSummary s = verify_all(parse_entry_range(entries), m.build());
    if (!m.report.empty()) write_file(m.report, s.json());
    out_ << (m.json ? s.json() : s.table());
    return s.asserted_ok() ? 0 : 1;
  }

  int dsl_check(const std::string& idl, const std::string& path, const ModeArgs& m) {
    auto defs = parse_idl(read_file(idl));
    AlgebraBundle b = load_bundle(path);
    Status overall = Status::pass;
    std::string json = "[";
    for (std::size_t i = 0; i < defs.size(); ++i) {
      Report r = check_structure(defs[i], b, m.build());
      overall = combine(overall, r.overall);
      if (m.json || !m.report.empty()) json += (i ? "," : "") + report_to_json(r, b);
      if (!m.json) out_ << report_to_text(r, b, color_);
    }
    json += "]\n";
    if (!m.report.empty()) write_file(m.report, json);
    if (m.json) out_ << json;
    return exit_code(overall);
  }

  int dsl_parse(const std::string& idl) {
    for (const auto& d : parse_idl(read_file(idl))) {
      out_ << "structure " << d.name << "\n";
      for (const auto& p : d.predicates) out_ << "  predicate " << p.id() << "\n";
      for (const auto& id : d.identities)
        out_ << "  identity " << id.id << (id.regular_only ? " (regular)" : "") << ": " << print_identity(id.ast)
             << "\n";
      for (const auto& t : d.templates) out_ << "  template " << t.id << "\n";
    }
    return 0;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  bool color_;
};

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checker for BiHom-type algebra structures on structure-constant bundles", "bihom"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("bihom ") + kToolVersion);
  bool no_color = false;
  app.add_flag("--no-color", no_color, "disable ANSI colors");

  ModeArgs check_mode, id_mode, cat_mode, dsl_mode;
  std::string bundle, structure;
  auto* check = app.add_subcommand("check", "check a bundle against a registered structure");
  check->add_option("bundle", bundle)->required();
  check->add_option("--structure,-s", structure, "structure name, or tbp-nlie:N")->required();
  check_mode.attach(check);

  std::string set, map, ops;
  std::vector<std::string> exponents;
  auto* ids = app.add_subcommand("identities", "check a named family of identities");
  ids->add_option("bundle", bundle)->required();
  ids->add_option("--set", set, "tbp-consequences, shift-family, shift-fixed, overlap, ternary-overlap, "
                                "involution-condition, np-compat-equivalence, derivation, involution")
      ->required();
  ids->add_option("--exponents", exponents, "m,n,l,s,p,q,k,t (repeatable; use --exponents=-1,... for negatives)");
  ids->add_option("--map", map, "map for the derivation and involution sets");
  ids->add_option("--ops", ops, "ops for the derivation set, comma separated");
  id_mode.attach(ids);

  std::string kind, input, output, vars;
  bool relaxed = false;
  std::size_t bound = 0;
  std::vector<std::string> twists, fields;
  auto* cons = app.add_subcommand("construct", "build a new bundle from an input bundle");
  cons->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"derivation-tbp", "pre-lie", "np-commutator", "ternary-d", "ternary-f", "ternary-m",
                             "twist", "truncated"}));
  cons->add_option("input", input);
  cons->add_option("-o,--output", output)->required();
  cons->add_flag("--relaxed", relaxed, "record failed hypotheses as warnings instead of refusing");
  cons->add_option("--map", map, "derivation (ternary-d) or involution (ternary-f) map name");
  cons->add_option("--twist", twists, "op:map,map with optional powers, e.g. mul:a,b^-1");
  cons->add_option("--vars", vars, "truncated: variable names, comma separated");
  cons->add_option("--bound", bound, "truncated: monomials of this total degree and above vanish");
  cons->add_option("--field", fields, "truncated: NAME=c1,c2,... adds the derivation sum c_i d/dx_i as a map");

  std::string second, tkind, rename;
  auto* ten = app.add_subcommand("tensor", "tensor product of two bundles");
  ten->add_option("A", bundle)->required();
  ten->add_option("B", second)->required();
  ten->add_option("--kind", tkind)->required()->check(CLI::IsMember({"bp-tbp", "pre-lie-poisson"}));
  ten->add_option("-o,--output", output)->required();
  ten->add_option("--rename-second", rename, "rename parameters of B, e.g. k1=k3,k2=k4");

  int entry = 0;
  std::string entries;
  auto* cat = app.add_subcommand("catalog", "the shipped two-dimensional examples");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list entries");
  auto* cat_show = cat->add_subcommand("show", "print an entry as a bundle file");
  cat_show->add_option("n", entry)->required();
  auto* cat_verify = cat->add_subcommand("verify", "verify entries and print the per-axiom summary");
  cat_verify->add_option("--entries", entries, "e.g. 26, 24-26 or 1,3,5-7 (default all)");
  cat_mode.attach(cat_verify);

  std::string idl;
  auto* dsl = app.add_subcommand("dsl", "identity files");
  dsl->require_subcommand(1);
  auto* dsl_check = dsl->add_subcommand("check", "check every structure of an .idl file against a bundle");
  dsl_check->add_option("idl", idl)->required();
  dsl_check->add_option("bundle", bundle)->required();
  dsl_mode.attach(dsl_check);
  auto* dsl_parse = dsl->add_subcommand("parse", "parse an .idl file and print it normalized");
  dsl_parse->add_option("idl", idl)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  bool color = !no_color && std::getenv("NO_COLOR") == nullptr && &out == &std::cout && isatty(STDOUT_FILENO);
  Runner run(out, err, color);
  try {
    if (check->parsed()) return run.check(bundle, structure, check_mode);
    if (ids->parsed()) return run.identities(bundle, set, exponents, map, ops, id_mode);
    if (cons->parsed()) return run.construct(kind, input, output, relaxed, map, twists, vars, bound, fields);
    if (ten->parsed()) return run.tensor(bundle, second, tkind, output, rename);
    if (cat_list->parsed()) return run.catalog_list();
    if (cat_show->parsed()) return run.catalog_show(entry);
    if (cat_verify->parsed()) return run.catalog_verify(entries, cat_mode);
    if (dsl_check->parsed()) return run.dsl_check(idl, bundle, dsl_mode);
    if (dsl_parse->parsed()) return run.dsl_parse(idl);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int cli_main(int argc, char** argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace bihom
