#include "pnr/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pnr/error.hpp"

namespace pnr {

namespace {

std::size_t idx(Element x) { return static_cast<std::size_t>(x); }

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.emplace_back(line);
      start = end + 1;
    }
    while (!lines_.empty() && lines_.back().empty()) lines_.pop_back();
  }

  bool done() const { return pos_ >= lines_.size(); }
  std::string_view peek() const { return done() ? std::string_view{} : lines_[pos_]; }
  int line_number() const { return static_cast<int>(pos_) + 1; }

  std::string next() {
    if (done()) fail("unexpected end of document");
    return lines_[pos_++];
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_number()) + ": " + what);
  }

  // "<keyword> rest" -> rest
  std::string expect(std::string_view keyword) {
    std::string line = next();
    --pos_;
    if (line == keyword) {
      ++pos_;
      return {};
    }
    if (line.size() <= keyword.size() || line.compare(0, keyword.size(), keyword) != 0 || line[keyword.size()] != ' ')
      fail("expected '" + std::string(keyword) + "'");
    ++pos_;
    return line.substr(keyword.size() + 1);
  }

  std::vector<Element> ints(const std::string& text, int bound) const {
    std::istringstream in(text);
    std::vector<Element> out;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        fail("not an integer: '" + tok + "'");
      }
      if (used != tok.size()) fail("not an integer: '" + tok + "'");
      if (v < 0 || (bound > 0 && v >= bound)) fail("index out of range: " + tok);
      out.push_back(static_cast<Element>(v));
    }
    return out;
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

CayleyTable read_table(LineReader& in, int n) {
  CayleyTable t(n);
  for (Element a = 0; a < n; ++a) {
    auto row = in.ints(in.next(), n);
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("line " + std::to_string(in.line_number() - 1) + ": expected " + std::to_string(n) +
                       " entries");
    }
    for (Element b = 0; b < n; ++b) t(a, b) = row[idx(b)];
  }
  return t;
}

void write_row(std::ostringstream& out, std::span<const Element> row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
  out << '\n';
}

nlohmann::ordered_json table_json(const CayleyTable& t) {
  auto rows = nlohmann::ordered_json::array();
  for (Element a = 0; a < t.size(); ++a) {
    auto r = t.row(a);
    rows.push_back(std::vector<Element>(r.begin(), r.end()));
  }
  return rows;
}

}  // namespace

NearringDocument parse_document(std::string_view text) {
  LineReader in(text);
  NearringDocument doc;
  auto version = in.ints(in.expect("pnr-nearring"), 0);
  if (version.size() != 1 || version[0] != kDocumentVersion) in.fail("unsupported document version");
  doc.version = version[0];
  auto order = in.ints(in.expect("order"), 0);
  if (order.size() != 1 || order[0] < 1) in.fail("bad order");
  const int n = order[0];
  doc.group_name = in.expect("group");
  in.expect("add");
  doc.add = read_table(in, n);
  in.expect("mul");
  doc.mul = read_table(in, n);
  if (in.peek().starts_with("phi")) {
    DocumentProvenance p;
    auto g = in.ints(in.expect("phi"), 0);
    if (g.size() != 1) in.fail("bad generator count");
    for (int i = 0; i < g[0]; ++i) {
      auto perm = in.ints(in.next(), n);
      if (static_cast<int>(perm.size()) != n) in.fail("generator needs " + std::to_string(n) + " entries");
      p.phi_generators.push_back(std::move(perm));
    }
    p.choice.reps = in.ints(in.expect("reps"), n);
    p.choice.zero_reps = in.ints(in.expect("zero"), n);
    doc.provenance = std::move(p);
  }
  in.expect("end");
  if (!in.done()) in.fail("trailing content");
  return doc;
}

std::string write_document(const NearringDocument& doc) {
  std::ostringstream out;
  out << "pnr-nearring " << doc.version << '\n';
  out << "order " << doc.order() << '\n';
  out << "group " << doc.group_name << '\n';
  out << "add\n";
  for (Element a = 0; a < doc.order(); ++a) write_row(out, doc.add.row(a));
  out << "mul\n";
  for (Element a = 0; a < doc.order(); ++a) write_row(out, doc.mul.row(a));
  if (doc.provenance) {
    out << "phi " << doc.provenance->phi_generators.size() << '\n';
    for (const auto& g : doc.provenance->phi_generators) write_row(out, g);
    out << "reps";
    for (Element r : doc.provenance->choice.reps) out << ' ' << r;
    out << "\nzero";
    for (Element r : doc.provenance->choice.zero_reps) out << ' ' << r;
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

NearringDocument read_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path);
  out << text;
  if (!out) throw ArgumentError("write failed: " + path);
}

PlanarNearring to_nearring(const NearringDocument& doc) {
  if (doc.mul.size() != doc.add.size()) throw ValidationError("table sizes differ");
  FiniteGroup g(doc.group_name, doc.add);
  if (!doc.provenance) return PlanarNearring(std::move(g), doc.mul);
  AutomorphismGroup phi = automorphisms_generated_by(g, doc.provenance->phi_generators);
  PlanarNearring n = construct(FerreroPair(g, std::move(phi)), doc.provenance->choice);
  if (n.mul_table() != doc.mul) throw ValidationError("multiplication table disagrees with its provenance");
  return n;
}

std::vector<Permutation> minimal_generators(const AutomorphismGroup& phi) {
  std::vector<Permutation> gens;
  std::set<Permutation> reached{phi[phi.identity_index()]};
  for (const auto& p : phi.elements()) {
    if (reached.count(p)) continue;
    gens.push_back(p);
    auto closure = AutomorphismGroup::generated_by(phi.degree(), gens);
    reached = {closure.elements().begin(), closure.elements().end()};
  }
  return gens;
}

NearringDocument to_document(const PlanarNearring& n) {
  NearringDocument doc;
  doc.group_name = n.additive().name();
  doc.add = n.additive().table();
  doc.mul = n.mul_table();
  if (n.has_provenance()) {
    const Provenance& p = n.provenance();
    doc.provenance = DocumentProvenance{minimal_generators(p.phi), p.choice};
  }
  return doc;
}

std::string write_manifest(const std::vector<IsoClass>& classes, int max_order, EnumerationFilter filter,
                           bool include_tables) {
  using nlohmann::ordered_json;
  ordered_json m;
  m["format"] = "pnr-manifest";
  m["version"] = 1;
  m["max_order"] = max_order;
  m["filter"] = to_string(filter);
  m["count"] = classes.size();
  auto records = ordered_json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const IsoClass& c = classes[i];
    ordered_json r;
    r["index"] = i;
    r["order"] = c.canonical.order();
    r["group"] = c.group_name;
    r["fingerprint"] = c.fingerprint.digest();
    r["phi_order"] = c.phi_order;
    r["distributive_size"] = c.distributive_size;
    r["gc_case"] = c.gc_case;
    r["members_found"] = c.members_found;
    if (c.canonical.has_provenance()) {
      const Provenance& p = c.canonical.provenance();
      ordered_json prov;
      prov["phi_generators"] = minimal_generators(p.phi);
      prov["reps"] = p.choice.reps;
      prov["zero"] = p.choice.zero_reps;
      r["provenance"] = std::move(prov);
    }
    if (include_tables) {
      r["add"] = table_json(c.canonical.additive().table());
      r["mul"] = table_json(c.canonical.mul_table());
    }
    records.push_back(std::move(r));
  }
  m["classes"] = std::move(records);
  return m.dump(2) + "\n";
}

}  // namespace pnr
