#include "bihom/catalog.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <sstream>

#include "json.hpp"

#include "bihom/embedded.hpp"
#include "bihom/errors.hpp"
#include "bihom/io.hpp"

namespace bihom {

namespace {

constexpr int kEntries = 26;

struct Column {
  const char* id;
  const char* header;
};

const std::vector<Column>& columns() {
  static const std::vector<Column> cols = {
      {"commute(a,b)", "comm(a,b)"},
      {"multiplicative(a,mul)", "a:mul"},
      {"multiplicative(b,mul)", "b:mul"},
      {"multiplicative(a,br)", "a:br"},
      {"multiplicative(b,br)", "b:br"},
      {"bihom-commutativity", "bh-comm"},
      {"bihom-associativity", "bh-assoc"},
      {"bihom-skew", "skew"},
      {"bihom-jacobi", "jacobi"},
      {"tbp-compat", "tbp"},
  };
  return cols;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

const char* cell(Status s) { return s == Status::pass ? "pass" : s == Status::fail ? "FAIL" : "n/a"; }

}  // namespace

const std::vector<AlgebraBundle>& catalog_entries() {
  static const std::vector<AlgebraBundle> entries = [] {
    std::vector<AlgebraBundle> out;
    for (const auto& f : embedded_catalog()) out.push_back(parse_bundle(f.text));
    std::sort(out.begin(), out.end(),
              [](const AlgebraBundle& x, const AlgebraBundle& y) { return x.catalog->entry < y.catalog->entry; });
    return out;
  }();
  return entries;
}

const AlgebraBundle& catalog_entry(int n) {
  for (const auto& e : catalog_entries())
    if (e.catalog->entry == n) return e;
  throw UnknownEntry("no catalog entry " + std::to_string(n) + " (entries are 1.." + std::to_string(kEntries) + ")");
}

MultiOp given_bracket(const AlgebraBundle& entry) {
  const MultiOp& br = entry.op("br");
  if (!entry.catalog) return br;
  auto it = entry.catalog->completion.find("br");
  if (it == entry.catalog->completion.end()) return br;
  MultiOp out(br.dim(), br.arity());
  for (const auto& [idx, v] : br.entries())
    if (std::find(it->second.slots.begin(), it->second.slots.end(), idx) == it->second.slots.end()) out.set(idx, v);
  return out;
}

AlgebraBundle zero_completed(const AlgebraBundle& entry) {
  AlgebraBundle r = entry;
  r.ops["br"] = given_bracket(entry);
  r.id = entry.id + "-zero-completion";
  if (r.catalog) r.catalog->completion.clear();
  return r;
}

MultiOp complete_by_skew(const MultiOp& given, const std::vector<MultiOp::Index>& slots, const LinMap& a,
                         const LinMap& b) {
  const std::size_t n = given.dim();
  if (given.arity() != 2) throw ArityMismatch("skew completion needs a binary bracket");
  if (a.dim() != n || b.dim() != n) throw SpaceMismatch("structure maps do not match the bracket dimension");
  auto rat = [](const Scalar& s) -> Rational {
    if (!s.is_rational()) throw RingMismatch("skew completion needs parameter-free data; specialize first");
    return s.rational();
  };
  for (const auto& s : slots)
    if (!is_zero(given.get(s))) throw SchemaError("completion slot is also listed");

  auto slot_of = [&](std::size_t p, std::size_t q) -> long {
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (slots[s][0] == p && slots[s][1] == q) return static_cast<long>(s);
    return -1;
  };

  const std::size_t unknowns = slots.size() * n;
  struct Row {
    std::vector<Rational> c;
    Rational rhs;
    std::string label;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Row row{std::vector<Rational>(unknowns), Rational(0),
                "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") component " + std::to_string(k + 1)};
        // br(b e_i, a e_j) + br(b e_j, a e_i)
        for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}})
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              Rational w = rat(b.at(p, x)) * rat(a.at(q, y));
              if (w.is_zero()) continue;
              long s = slot_of(p, q);
              if (s >= 0)
                row.c[static_cast<std::size_t>(s) * n + k] += w;
              else
                row.rhs -= w * rat(given.get({p, q})[k]);
            }
        rows.push_back(std::move(row));
      }

  // Gauss-Jordan over Q.
  std::vector<long> pivot_row(unknowns, -1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p].c[col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = Rational(1) / rows[r].c[col];
    for (auto& v : rows[r].c) v *= inv;
    rows[r].rhs *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o].c[col].is_zero()) continue;
      Rational f = rows[o].c[col];
      for (std::size_t c = col; c < unknowns; ++c) rows[o].c[c] -= f * rows[r].c[c];
      rows[o].rhs -= f * rows[r].rhs;
    }
    pivot_row[col] = static_cast<long>(r);
    ++r;
  }
  for (std::size_t o = r; o < rows.size(); ++o)
    if (!rows[o].rhs.is_zero()) throw Inconsistent("skew completion has no solution: " + rows[o].label);

  MultiOp out = given;
  for (std::size_t col = 0; col < unknowns; ++col) {
    if (pivot_row[col] < 0) continue;  // free unknown, left zero
    const Rational& v = rows[static_cast<std::size_t>(pivot_row[col])].rhs;
    if (!v.is_zero()) out.add(slots[col / n], col % n, Scalar(v));
  }
  return out;
}

const std::vector<std::string>& catalog_columns() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& c : columns()) v.push_back(c.id);
    return v;
  }();
  return ids;
}

StructureDef catalog_structure() {
  StructureDef def;
  def.name = "catalog";
  def.ops = {"mul", "br"};
  def.maps = {"a", "b"};
  for (const auto& c : catalog_columns()) {
    if (c.find('(') != std::string::npos)
      def.predicates.push_back(Predicate::parse(c));
    else
      def.identities.push_back(Registry::builtin().identity(c));
  }
  return def;
}

Report verify_entry(int n, const CheckMode& mode) {
  const AlgebraBundle& e = catalog_entry(n);
  Report r = check_structure(catalog_structure(), e, mode);
  if (!e.catalog->note.empty()) r.notes.push_back(e.catalog->note);
  return r;
}

bool CatalogSummary::asserted_ok() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (catalog_entry(entries[i]).catalog->status == "asserted-pass" && reports[i].overall != Status::pass)
      return false;
  return true;
}

std::string CatalogSummary::table() const {
  std::ostringstream o;
  o << pad("entry", 6) << pad("case", 5) << pad("status", 14);
  for (const auto& c : columns()) o << pad(c.header, std::max<std::size_t>(std::string(c.header).size() + 1, 5));
  o << "overall\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& info = *catalog_entry(entries[i]).catalog;
    const Report& r = reports[i];
    o << pad(std::to_string(entries[i]), 6) << pad(info.case_label, 5) << pad(info.status, 14);
    for (const auto& c : columns()) {
      const Verdict* v = r.find(c.id);
      o << pad(v ? cell(v->status) : "-", std::max<std::size_t>(std::string(c.header).size() + 1, 5));
    }
    o << cell(r.overall) << "\n";
  }

  bool any = false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const AlgebraBundle& b = catalog_entry(entries[i]);
    for (const auto& v : reports[i].verdicts) {
      if (v.status == Status::pass) continue;
      if (!any) o << "\ndiscrepancies:\n";
      any = true;
      o << "  " << pad(std::to_string(entries[i]), 4) << verdict_line(v, b) << "\n";
    }
  }
  std::size_t asserted = 0;
  for (int n : entries)
    if (catalog_entry(n).catalog->status == "asserted-pass") ++asserted;
  o << "\n" << entries.size() << " entries, " << asserted << " asserted-pass: "
    << (asserted_ok() ? "all asserted entries pass" : "ASSERTED ENTRY FAILED") << "\n";
  return o.str();
}

std::string CatalogSummary::json() const {
  using ojson = nlohmann::ordered_json;
  ojson o;
  o["schema"] = "bihom-catalog/1";
  o["tool"] = std::string("bihom ") + kToolVersion;
  bool sampled = mode.kind == CheckMode::Kind::sampled;
  o["mode"] = sampled ? "sampled" : "symbolic";
  o["seed"] = mode.seed;
  if (sampled) o["samples"] = mode.samples;
  o["columns"] = catalog_columns();
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const AlgebraBundle& b = catalog_entry(entries[i]);
    ojson row;
    row["entry"] = entries[i];
    row["case"] = b.catalog->case_label;
    row["status"] = b.catalog->status;
    ojson cells = ojson::object();
    for (const auto& c : catalog_columns()) {
      const Verdict* v = reports[i].find(c);
      cells[c] = v ? status_name(v->status) : "missing";
    }
    row["cells"] = cells;
    row["overall"] = status_name(reports[i].overall);
    row["report"] = ojson::parse(report_to_json(reports[i], b));
    rows.push_back(row);
  }
  o["rows"] = rows;
  o["asserted_ok"] = asserted_ok();
  return o.dump(2) + "\n";
}

CatalogSummary verify_all(const std::vector<int>& entries, const CheckMode& mode) {
  CatalogSummary s;
  s.entries = entries;
  s.mode = mode;
  for (int n : entries) (void)catalog_entry(n);
  (void)Registry::builtin();
  s.reports.resize(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  const long count = static_cast<long>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      s.reports[static_cast<std::size_t>(i)] = verify_entry(entries[static_cast<std::size_t>(i)], mode);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return s;
}

std::vector<int> parse_entry_range(const std::string& text) {
  std::set<int> out;
  if (text.empty()) {
    for (int n = 1; n <= kEntries; ++n) out.insert(n);
    return {out.begin(), out.end()};
  }
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw SyntaxError("bad entry number '" + s + "' in range '" + text + "'", 0);
    if (v < 1 || v > kEntries) throw UnknownEntry("no catalog entry " + s);
    return v;
  };
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto dash = part.find('-', 1);
    if (dash == std::string::npos) {
      out.insert(number(part));
    } else {
      int lo = number(part.substr(0, dash));
      int hi = number(part.substr(dash + 1));
      if (lo > hi) throw SyntaxError("empty entry range '" + part + "'", 0);
      for (int n = lo; n <= hi; ++n) out.insert(n);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace bihom
