// pnr: construct, analyze and enumerate finite planar nearrings.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "pnr/analysis.hpp"
#include "pnr/design.hpp"
#include "pnr/enumeration.hpp"
#include "pnr/error.hpp"
#include "pnr/io.hpp"
#include "pnr/nearvector.hpp"

using namespace pnr;

namespace {

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kTheorem = 3 };

std::string set_str(std::span<const Element> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<Element> parse_list(const std::string& text, char sep = ',') {
  std::vector<Element> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, sep)) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ArgumentError("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw ArgumentError("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

// "neg", "mul:u,v,..." (cyclic groups only) or "gen:p;q;..." with p a comma list.
AutomorphismGroup parse_phi(const FiniteGroup& g, const std::string& text) {
  std::vector<Permutation> gens;
  if (text == "neg") {
    gens.push_back(negation_map(g));
  } else if (text.starts_with("mul:")) {
    if (catalog_group(g.order(), "C" + std::to_string(g.order())).table() != g.table())
      throw ArgumentError("mul: needs a cyclic group");
    for (Element u : parse_list(text.substr(4))) {
      Permutation p(static_cast<std::size_t>(g.order()));
      for (Element x = 0; x < g.order(); ++x)
        p[static_cast<std::size_t>(x)] = static_cast<Element>((static_cast<long long>(x) * u % g.order() + g.order()) % g.order());
      gens.push_back(std::move(p));
    }
  } else if (text.starts_with("gen:")) {
    std::stringstream in(text.substr(4));
    std::string perm;
    while (std::getline(in, perm, ';')) gens.push_back(parse_list(perm));
    for (const auto& p : gens)
      if (static_cast<int>(p.size()) != g.order()) throw ArgumentError("generator length must equal the group order");
  } else {
    throw ArgumentError("unknown --phi '" + text + "' (neg | mul:u,... | gen:p;q;...)");
  }
  return automorphisms_generated_by(g, gens);
}

void print_summary(const PlanarNearring& n) {
  const ElementSet d = distributive_elements(n);
  const GCReport gc = generalized_centre(n);
  std::cout << "order " << n.order() << '\n';
  std::cout << "group " << n.additive().name() << '\n';
  if (n.has_provenance()) std::cout << "phi_order " << n.provenance().phi.size() << '\n';
  std::cout << "planar " << (is_planar(n).planar ? "yes" : "no") << '\n';
  std::cout << "D(N) " << set_str(d) << '\n';
  std::cout << "GC(N) " << set_str(gc.gc) << " case " << gc.case_tag << '\n';
}

void print_lemmas(const LemmaReport& r) {
  for (const auto& item : r.items) {
    std::cout << "lemma " << item.key << ' ' << to_string(item.status) << "  " << item.title;
    if (!item.detail.empty()) std::cout << "  [" << item.detail << ']';
    std::cout << '\n';
  }
}

struct ConstructArgs {
  std::string group, phi = "neg", reps, zero, out;
  int zp2 = 0, field = 0;
  bool dickson9 = false;
};

int cmd_construct(const ConstructArgs& a) {
  std::optional<PlanarNearring> n;
  if (a.zp2) {
    n = zp2_family(a.zp2);
  } else if (a.field) {
    n = as_nearring(make_field(a.field));
  } else if (a.dickson9) {
    n = as_nearring(make_dickson_nearfield_9());
  } else {
    if (a.group.empty()) throw ArgumentError("construct needs --group, --zp2, --field or --dickson9");
    FiniteGroup g = catalog_group(a.group);
    AutomorphismGroup phi = parse_phi(g, a.phi);
    RepChoice rc;
    if (a.reps.empty()) {
      for (const auto& o : orbits(phi, g))
        if (o.representative != 0) rc.reps.push_back(o.representative);
    } else {
      rc.reps = parse_list(a.reps);
    }
    rc.zero_reps = parse_list(a.zero);
    n = construct(FerreroPair(std::move(g), std::move(phi)), rc);
  }
  print_summary(*n);
  if (!a.out.empty()) write_text_file(a.out, write_document(to_document(*n)));
  return kOk;
}

int cmd_analyze(const std::string& path) {
  const PlanarNearring n = to_nearring(read_document_file(path));
  const ElementSet zm = zero_multipliers(n);
  const ElementSet d = distributive_elements(n);
  std::cout << "order " << n.order() << '\n';
  std::cout << "group " << n.additive().name() << '\n';
  const PlanarityResult pl = is_planar(n);
  std::cout << "planar " << (pl.planar ? "yes" : "no") << " classes " << pl.classes << '\n';
  std::cout << "D(N) " << set_str(d) << '\n';
  std::cout << "zero_multipliers " << set_str(zm) << '\n';
  std::cout << "zero_multipliers_ideal " << to_string(is_ideal(n, zm).kind) << '\n';
  std::cout << "D(N)_ideal " << to_string(is_ideal(n, d).kind) << '\n';
  std::cout << "right_identities " << set_str(right_identities(n)) << '\n';
  const GCReport gc = generalized_centre(n);
  std::cout << "GC(N) " << set_str(gc.gc) << " case " << gc.case_tag << '\n';
  if (gc.bounds)
    std::cout << "GC_bounds " << set_str(gc.bounds->first) << " <= GC <= " << set_str(gc.bounds->second) << '\n';
  const SemidirectResult sd = semidirect_decomposition(n);
  if (sd.decomposition) {
    const auto& s = *sd.decomposition;
    std::cout << "semidirect K " << set_str(s.kernel) << " (order " << s.kernel.size() << ") F "
              << set_str(s.complement) << " (order " << s.complement.size() << ", "
              << (s.field.is_field() ? "field" : "nearfield") << ")\n";
  } else {
    std::cout << "semidirect none (" << sd.reason << ")\n";
  }
  const LemmaReport r = verify_lemma_suite(n);
  print_lemmas(r);
  return r.any_failure() ? kTheorem : kOk;
}

int cmd_verify(const std::string& path) {
  const LemmaReport r = verify_lemma_suite(to_nearring(read_document_file(path)));
  print_lemmas(r);
  std::cout << (r.any_failure() ? "FAIL" : "PASS") << '\n';
  return r.any_failure() ? kTheorem : kOk;
}

int cmd_enumerate(int max_order, const std::string& filter, const std::string& out, bool tables, int jobs) {
  if (max_order < 2) throw ArgumentError("--max-order must be at least 2");
  const EnumerationFilter f = parse_filter(filter);
  const auto classes = enumerate_planar_nearrings(max_order, f, jobs);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    std::cout << i << "  order " << c.canonical.order() << "  " << c.group_name << "  |Phi| " << c.phi_order
              << "  |D| " << c.distributive_size << "  case " << c.gc_case << "  " << c.fingerprint.digest() << '\n';
  }
  std::cout << classes.size() << " classes\n";
  if (!out.empty()) write_text_file(out, write_manifest(classes, max_order, f, tables));
  return kOk;
}

int cmd_bibd(const std::string& path, const std::string& out) {
  const BlockDesign d = block_design(to_nearring(read_document_file(path)));
  const std::string text = export_design(d);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
    std::cout << "v " << d.v << " b " << d.b() << " k " << d.k << " r " << d.r << '\n';
    if (d.lambda) std::cout << "balanced lambda " << *d.lambda << '\n';
    else if (d.imbalance)
      std::cout << "unbalanced pair " << d.imbalance->x << ',' << d.imbalance->y << " count " << d.imbalance->count
                << " vs " << d.imbalance->reference << '\n';
  }
  if (d.degenerate) std::cerr << "note: degenerate design (k = v)\n";
  if (d.repeated_blocks) std::cerr << "note: repeated translates removed\n";
  return kOk;
}

struct NearvectorArgs {
  int field = 0;
  bool dickson9 = false;
  std::vector<std::string> twists;
  int coordinate = 1;
  std::string zero, out;
};

int cmd_nearvector(const NearvectorArgs& a) {
  if (!a.field == !a.dickson9) throw ArgumentError("nearvector needs exactly one of --field, --dickson9");
  const Nearfield f = a.dickson9 ? make_dickson_nearfield_9() : make_field(a.field);
  std::vector<Twist> twists;
  for (const auto& t : a.twists) twists.push_back(Twist::parse(t));
  if (twists.empty()) throw ArgumentError("nearvector needs at least one --twist");
  const NearvectorSpace v = make_nearvector_space(f, twists);
  const int c = a.coordinate - 1;
  if (c < 0 || c >= v.dimension()) throw ArgumentError("--coordinate out of range (1-based)");
  const std::vector<Element> zero = parse_list(a.zero);

  std::cout << "field " << f.name() << " order " << f.order() << " kern " << set_str(kern(f)) << '\n';
  std::cout << "dimension " << v.dimension() << " |V| " << v.size() << '\n';
  std::cout << "Q(V) " << set_str(quasi_kernel(v)) << '\n';
  const ConjectureReport r = check_conjecture(v, c, zero);
  std::cout << "D(V) " << set_str(r.distributive) << " size " << r.distributive.size() << '\n';
  for (const auto& b : r.blocks) {
    std::cout << "block";
    for (int i : b.components) std::cout << ' ' << i + 1;
    std::cout << "  D^V_i " << set_str(b.intersection) << "  K^n " << (b.matches_kern_power ? "match" : "differs")
              << "  twisted " << (b.matches_twisted_kern_power ? "match" : "differs") << '\n';
  }
  std::cout << "splits " << (r.splits ? "yes" : "no") << '\n';
  std::cout << "plain_reading " << (r.plain_reading_holds ? "holds" : "fails") << '\n';
  std::cout << "twisted_reading " << (r.twisted_reading_holds ? "holds" : "fails") << '\n';
  if (!a.out.empty()) write_text_file(a.out, write_document(to_document(derived_planar_nearring(v, c, zero))));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite planar nearrings"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs,-j", jobs, "worker threads for enumeration")->check(CLI::PositiveNumber);

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "build a nearring from a Ferrero pair");
  construct_cmd->add_option("--group", ca.group, "catalog group, e.g. C9, C3xC5");
  construct_cmd->add_option("--phi", ca.phi, "neg | mul:u,... | gen:p;q;...");
  construct_cmd->add_option("--reps", ca.reps, "orbit representatives, comma separated");
  construct_cmd->add_option("--zero", ca.zero, "zero-multiplier representatives");
  construct_cmd->add_option("--zp2", ca.zp2, "member of the Z_{p^2} family");
  construct_cmd->add_option("--field", ca.field, "finite field of this order");
  construct_cmd->add_flag("--dickson9", ca.dickson9, "Dickson nearfield of order 9");
  construct_cmd->add_option("-o,--output", ca.out, "document path");

  std::string input, output, filter = "all";
  bool tables = false;
  int max_order = 15;
  auto* analyze_cmd = app.add_subcommand("analyze", "full structural report");
  analyze_cmd->add_option("input", input)->required();
  auto* verify_cmd = app.add_subcommand("verify", "lemma suite only");
  verify_cmd->add_option("input", input)->required();
  auto* bibd_cmd = app.add_subcommand("bibd", "export the block design");
  bibd_cmd->add_option("input", input)->required();
  bibd_cmd->add_option("-o,--output", output);
  auto* enumerate_cmd = app.add_subcommand("enumerate", "planar nearrings up to isomorphism");
  enumerate_cmd->add_option("--max-order", max_order)->required();
  enumerate_cmd->add_option("--filter", filter, "all | nontrivial-distributive");
  enumerate_cmd->add_option("-o,--manifest", output);
  enumerate_cmd->add_flag("--tables", tables, "include full tables in the manifest");

  NearvectorArgs na;
  auto* nv_cmd = app.add_subcommand("nearvector", "nearvector space and conjecture report");
  nv_cmd->add_option("--field", na.field);
  nv_cmd->add_flag("--dickson9", na.dickson9);
  nv_cmd->add_option("--twist", na.twists, "id | pow:k | map:i0,i1,...  (once per component)");
  nv_cmd->add_option("--coordinate", na.coordinate, "projection coordinate, 1-based");
  nv_cmd->add_option("--zero", na.zero, "zero-multiplier representatives inside the kernel");
  nv_cmd->add_option("-o,--output", na.out, "derived nearring document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*construct_cmd) return cmd_construct(ca);
    if (*analyze_cmd) return cmd_analyze(input);
    if (*verify_cmd) return cmd_verify(input);
    if (*bibd_cmd) return cmd_bibd(input, output);
    if (*enumerate_cmd) return cmd_enumerate(max_order, filter, output, tables, jobs);
    if (*nv_cmd) return cmd_nearvector(na);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return kTheorem;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CatalogMiss& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kUsage;
}
