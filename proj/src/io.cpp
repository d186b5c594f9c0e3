#include "bihom/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "bihom/errors.hpp"

namespace bihom {

using ojson = nlohmann::ordered_json;

namespace {

void allow_keys(const ojson& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + " must be an object");
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) throw SchemaError("unknown field '" + k + "' in " + where);
}

const ojson& field(const ojson& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError("missing field '" + key + "' in " + where);
  return *it;
}

std::string as_string(const ojson& v, const std::string& where) {
  if (!v.is_string()) throw SchemaError(where + " must be a string");
  return v.get<std::string>();
}

long as_int(const ojson& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where + " must be an integer");
  return v.get<long>();
}

Scalar coeff(const ojson& v, const std::vector<std::string>& params, const std::string& where) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  return parse_scalar(as_string(v, where), params);
}

std::size_t index(const ojson& v, std::size_t dim, const std::string& where) {
  long i = as_int(v, where);
  if (i < 0 || static_cast<std::size_t>(i) >= dim)
    throw IndexOutOfRange(where + ": index " + std::to_string(i) + " outside [0, " + std::to_string(dim) + ")");
  return static_cast<std::size_t>(i);
}

// entries: [[i1..ir, k, "c"], ...]
MultiOp parse_entries(const ojson& entries, std::size_t dim, std::size_t arity, const std::vector<std::string>& params,
                      const std::string& where, std::vector<MultiOp::Index>* slots = nullptr) {
  if (!entries.is_array()) throw SchemaError(where + " entries must be an array");
  MultiOp op(dim, arity);
  std::set<std::pair<MultiOp::Index, std::size_t>> seen;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != arity + 2)
      throw SchemaError(where + ": each entry needs " + std::to_string(arity) + " indices, an output index and a coefficient");
    MultiOp::Index idx;
    for (std::size_t p = 0; p < arity; ++p) idx.push_back(index(e[p], dim, where));
    std::size_t k = index(e[arity], dim, where);
    if (!seen.insert({idx, k}).second) throw SchemaError(where + ": duplicate entry");
    op.add(idx, k, coeff(e[arity + 1], params, where));
    if (slots) slots->push_back(idx);
  }
  return op;
}

ojson entries_json(const MultiOp& op, const std::vector<std::string>& params) {
  ojson arr = ojson::array();
  for (const auto& [idx, v] : op.entries())
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      ojson e = ojson::array();
      for (auto i : idx) e.push_back(i);
      e.push_back(k);
      e.push_back(v[k].str(params));
      arr.push_back(e);
    }
  return arr;
}

std::string q(const std::string& s) { return ojson(s).dump(); }

std::string compact(const ojson& j) { return j.dump(-1, ' ', false); }

std::string join_lines(const std::vector<std::string>& items, const std::string& indent) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += indent + items[i] + (i + 1 < items.size() ? ",\n" : "\n");
  return s;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

std::string point_str(const Point& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].first + "=" + p[i].second.str();
  return s + "}";
}

}  // namespace

AlgebraBundle parse_bundle(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  allow_keys(doc, {"schema", "id", "dim", "basis", "ring", "ops", "maps", "provenance", "catalog"}, "bundle");
  std::string schema = as_string(field(doc, "schema", "bundle"), "schema");
  if (schema != kBundleSchema) throw SchemaError("unsupported schema '" + schema + "'");

  AlgebraBundle b;
  if (doc.contains("id")) b.id = as_string(doc["id"], "id");
  long dim = as_int(field(doc, "dim", "bundle"), "dim");
  if (dim <= 0) throw SchemaError("dim must be positive");
  const auto n = static_cast<std::size_t>(dim);
  const ojson& basis = field(doc, "basis", "bundle");
  if (!basis.is_array() || basis.size() != n) throw SchemaError("basis must list dim labels");
  std::vector<std::string> labels;
  for (const auto& l : basis) labels.push_back(as_string(l, "basis label"));
  try {
    b.space = BasisSpace(labels);
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }

  const ojson& ring = field(doc, "ring", "bundle");
  allow_keys(ring, {"params", "constraints"}, "ring");
  if (ring.contains("params")) {
    if (!ring["params"].is_array()) throw SchemaError("ring.params must be an array");
    for (const auto& p : ring["params"]) b.ring.params.push_back(as_string(p, "parameter"));
    std::set<std::string> uniq(b.ring.params.begin(), b.ring.params.end());
    if (uniq.size() != b.ring.params.size()) throw SchemaError("duplicate parameter name");
  }
  if (ring.contains("constraints")) {
    if (!ring["constraints"].is_array()) throw SchemaError("ring.constraints must be an array");
    for (const auto& c : ring["constraints"]) b.ring.constraints.push_back(coeff(c, b.ring.params, "constraint"));
  }

  const ojson& ops = field(doc, "ops", "bundle");
  if (!ops.is_object()) throw SchemaError("ops must be an object");
  for (const auto& [name, spec] : ops.items()) {
    std::string where = "op '" + name + "'";
    allow_keys(spec, {"arity", "entries"}, where);
    long arity = as_int(field(spec, "arity", where), where + " arity");
    if (arity < 1) throw SchemaError(where + ": arity must be at least 1");
    b.ops.emplace(name, parse_entries(field(spec, "entries", where), n, static_cast<std::size_t>(arity),
                                      b.ring.params, where));
  }

  const ojson& maps = field(doc, "maps", "bundle");
  if (!maps.is_object()) throw SchemaError("maps must be an object");
  for (const auto& [name, rows] : maps.items()) {
    std::string where = "map '" + name + "'";
    if (!rows.is_array() || rows.size() != n) throw SchemaError(where + " must have dim rows");
    LinMap m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n) throw SchemaError(where + " must have dim columns");
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = coeff(rows[i][j], b.ring.params, where);
    }
    b.maps.emplace(name, std::move(m));
  }

  if (doc.contains("provenance")) {
    const ojson& p = doc["provenance"];
    allow_keys(p, {"construction", "inputs", "parameters", "warnings"}, "provenance");
    Provenance pv;
    if (p.contains("construction")) pv.construction = as_string(p["construction"], "construction");
    if (p.contains("inputs"))
      for (const auto& s : p["inputs"]) pv.inputs.push_back(as_string(s, "input"));
    if (p.contains("parameters")) {
      if (!p["parameters"].is_object()) throw SchemaError("provenance.parameters must be an object");
      for (const auto& [k, v] : p["parameters"].items()) pv.parameters.emplace_back(k, as_string(v, k));
    }
    if (p.contains("warnings"))
      for (const auto& s : p["warnings"]) pv.warnings.push_back(as_string(s, "warning"));
    b.provenance = std::move(pv);
  }

  if (doc.contains("catalog")) {
    const ojson& c = doc["catalog"];
    allow_keys(c, {"entry", "case", "status", "completion", "branches", "note"}, "catalog");
    CatalogInfo info;
    info.entry = static_cast<int>(as_int(field(c, "entry", "catalog"), "entry"));
    if (c.contains("case")) info.case_label = as_string(c["case"], "case");
    info.status = c.contains("status") ? as_string(c["status"], "status") : "report-only";
    if (info.status != "asserted-pass" && info.status != "report-only")
      throw SchemaError("catalog status must be asserted-pass or report-only");
    if (c.contains("completion")) {
      if (!c["completion"].is_object()) throw SchemaError("catalog.completion must be an object");
      for (const auto& [name, comp] : c["completion"].items()) {
        std::string where = "completion of '" + name + "'";
        allow_keys(comp, {"slots", "entries"}, where);
        auto it = b.ops.find(name);
        if (it == b.ops.end()) throw SchemaError(where + ": no such op");
        Completion cm;
        for (const auto& s : field(comp, "slots", where)) {
          if (!s.is_array() || s.size() != it->second.arity()) throw SchemaError(where + ": bad slot");
          MultiOp::Index idx;
          for (const auto& i : s) idx.push_back(index(i, n, where));
          cm.slots.push_back(idx);
        }
        std::vector<MultiOp::Index> used;
        cm.values = parse_entries(field(comp, "entries", where), n, it->second.arity(), b.ring.params, where, &used);
        for (const auto& u : used)
          if (std::find(cm.slots.begin(), cm.slots.end(), u) == cm.slots.end())
            throw SchemaError(where + ": entry outside the completed slots");
        info.completion.emplace(name, std::move(cm));
      }
    }
    if (c.contains("branches"))
      for (const auto& br : c["branches"]) {
        if (!br.is_object()) throw SchemaError("catalog branch must be an object");
        Branch branch;
        for (const auto& [k, v] : br.items()) {
          if (std::find(b.ring.params.begin(), b.ring.params.end(), k) == b.ring.params.end())
            throw UnknownParameter("branch assigns unknown parameter '" + k + "'");
          branch.assign.emplace_back(k, coeff(v, b.ring.params, "branch"));
        }
        info.branches.push_back(std::move(branch));
      }
    if (c.contains("note")) info.note = as_string(c["note"], "note");
    b.catalog = std::move(info);
  }
  b.validate();
  return b;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write '" + path + "'");
  out << text;
}

AlgebraBundle load_bundle(const std::string& path) { return parse_bundle(read_file(path)); }

void save_bundle(const AlgebraBundle& b, const std::string& path) { write_file(path, bundle_to_string(b)); }

std::string bundle_to_string(const AlgebraBundle& b) {
  const auto& P = b.ring.params;
  std::ostringstream o;
  o << "{\n";
  o << "  \"schema\": " << q(kBundleSchema) << ",\n";
  o << "  \"id\": " << q(b.id) << ",\n";
  o << "  \"dim\": " << b.dim() << ",\n";
  o << "  \"basis\": " << compact(ojson(b.space.labels)) << ",\n";
  ojson cons = ojson::array();
  for (const auto& c : b.ring.constraints) cons.push_back(c.str(P));
  o << "  \"ring\": {\"params\": " << compact(ojson(P)) << ", \"constraints\": " << compact(cons) << "},\n";

  o << "  \"ops\": {";
  {
    std::vector<std::string> items;
    for (const auto& [name, op] : b.ops) {
      ojson es = entries_json(op, P);
      std::string s = q(name) + ": {\"arity\": " + std::to_string(op.arity()) + ", \"entries\": [";
      if (es.empty()) {
        s += "]}";
      } else {
        std::vector<std::string> lines;
        for (const auto& e : es) lines.push_back(compact(e));
        s += "\n" + join_lines(lines, "      ") + "    ]}";
      }
      items.push_back(s);
    }
    o << (items.empty() ? "},\n" : "\n" + join_lines(items, "    ") + "  },\n");
  }

  o << "  \"maps\": {";
  {
    std::vector<std::string> items;
    for (const auto& [name, m] : b.maps) {
      ojson rows = ojson::array();
      for (std::size_t i = 0; i < m.dim(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str(P));
        rows.push_back(row);
      }
      items.push_back(q(name) + ": " + compact(rows));
    }
    o << (items.empty() ? "}" : "\n" + join_lines(items, "    ") + "  }");
  }

  if (b.provenance) {
    const auto& p = *b.provenance;
    ojson params = ojson::object();
    for (const auto& [k, v] : p.parameters) params[k] = v;
    o << ",\n  \"provenance\": {\"construction\": " << q(p.construction)
      << ", \"inputs\": " << compact(ojson(p.inputs)) << ", \"parameters\": " << compact(params)
      << ", \"warnings\": " << compact(ojson(p.warnings)) << "}";
  }

  if (b.catalog) {
    const auto& c = *b.catalog;
    o << ",\n  \"catalog\": {\n";
    o << "    \"entry\": " << c.entry << ",\n";
    o << "    \"case\": " << q(c.case_label) << ",\n";
    o << "    \"status\": " << q(c.status) << ",\n";
    ojson comp = ojson::object();
    for (const auto& [name, cm] : c.completion) {
      ojson slots = ojson::array();
      for (const auto& s : cm.slots) slots.push_back(s);
      comp[name] = {{"slots", slots}, {"entries", entries_json(cm.values, P)}};
    }
    o << "    \"completion\": " << compact(comp) << ",\n";
    ojson branches = ojson::array();
    for (const auto& br : c.branches) {
      ojson one = ojson::object();
      for (const auto& [k, v] : br.assign) one[k] = v.str(P);
      branches.push_back(one);
    }
    o << "    \"branches\": " << compact(branches) << ",\n";
    o << "    \"note\": " << q(c.note) << "\n  }";
  }
  o << "\n}\n";
  return o.str();
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string bundle_hash(const AlgebraBundle& b) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bundle_to_string(b))));
  return buf;
}

namespace {

ojson point_json(const Point& p) {
  ojson o = ojson::object();
  for (const auto& [k, v] : p) o[k] = v.str();
  return o;
}

std::string tuple_str(const std::vector<std::size_t>& t, const AlgebraBundle& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + b.space.labels.at(t[i]);
  return s + ")";
}

}  // namespace

std::string report_to_json(const Report& r, const AlgebraBundle& b) {
  ojson o;
  o["schema"] = kReportSchema;
  o["tool"] = std::string("bihom ") + kToolVersion;
  o["bundle"] = {{"id", b.id}, {"hash", bundle_hash(b)}};
  o["structure"] = r.structure;
  bool sampled = r.mode.kind == CheckMode::Kind::sampled;
  o["mode"] = sampled ? "sampled" : "symbolic";
  o["seed"] = r.mode.seed;
  if (sampled) {
    o["samples"] = r.mode.samples;
    ojson pts = ojson::array();
    for (const auto& pt : r.points) pts.push_back(point_json(make_point(r.params, pt)));
    o["points"] = pts;
  }
  o["overall"] = status_name(r.overall);
  ojson vs = ojson::array();
  for (const auto& v : r.verdicts) {
    ojson j;
    j["id"] = v.id;
    j["status"] = status_name(v.status);
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.counterexample) {
      const auto& c = *v.counterexample;
      ojson cx;
      cx["tuple"] = c.tuple;
      cx["basis"] = tuple_str(c.tuple, b);
      if (c.point) cx["point"] = point_json(*c.point);
      if (!c.branch.empty()) cx["branch"] = c.branch;
      ojson res = ojson::array();
      for (const auto& s : c.residual) res.push_back(s.str(r.params));
      cx["residual"] = res;
      cx["residual_text"] = vector_str(c.residual, b.space.labels, r.params);
      j["counterexample"] = cx;
    }
    vs.push_back(j);
  }
  o["verdicts"] = vs;
  o["notes"] = r.notes;
  return o.dump(2) + "\n";
}

std::string verdict_line(const Verdict& v, const AlgebraBundle& b, bool color) {
  const char* tag = v.status == Status::pass ? "pass" : v.status == Status::fail ? "FAIL" : "n/a ";
  const char* on = "";
  const char* off = "";
  if (color) {
    on = v.status == Status::pass ? "\033[32m" : v.status == Status::fail ? "\033[31m" : "\033[33m";
    off = "\033[0m";
  }
  std::string s = std::string(on) + tag + off + "  " + v.id;
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    s += "  at " + tuple_str(c.tuple, b);
    if (c.point) s += " " + point_str(*c.point);
    if (!c.branch.empty()) s += " [" + c.branch + "]";
    s += ": residual " + vector_str(c.residual, b.space.labels, b.ring.params);
  }
  if (!v.reason.empty()) s += "  (" + v.reason + ")";
  return s;
}

std::string report_to_text(const Report& r, const AlgebraBundle& b, bool color) {
  std::ostringstream o;
  bool sampled = r.mode.kind == CheckMode::Kind::sampled;
  o << b.id << ": " << r.structure << " (" << (sampled ? "sampled" : "symbolic");
  if (sampled) o << ", " << r.points.size() << (r.points.size() == 1 ? " point" : " points") << ", seed " << r.mode.seed;
  o << ")\n";
  for (const auto& v : r.verdicts) o << "  " << verdict_line(v, b, color) << "\n";
  for (const auto& n : r.notes) o << "  note: " << n << "\n";
  o << "overall: " << status_name(r.overall) << "\n";
  return o.str();
}

}  // namespace bihom
