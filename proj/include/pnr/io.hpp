#pragma once

// Text serialization of nearrings and JSON manifests of enumeration runs.
//
// Document format, one item per line:
//
//     pnr-nearring 1
//     order <n>
//     group <name>
//     add
//     <n rows of n indices>
//     mul
//     <n rows of n indices>
//     phi <g>                  (optional provenance block)
//     <g rows: generator permutations>
//     reps <r1> <r2> ...
//     zero <m1> ...
//     end

#include <optional>
#include <string>
#include <vector>

#include "pnr/enumeration.hpp"
#include "pnr/ferrero.hpp"

namespace pnr {

inline constexpr int kDocumentVersion = 1;

struct DocumentProvenance {
  std::vector<Permutation> phi_generators;
  RepChoice choice;

  bool operator==(const DocumentProvenance&) const = default;
};

struct NearringDocument {
  int version = kDocumentVersion;
  std::string group_name;
  CayleyTable add;
  CayleyTable mul;
  std::optional<DocumentProvenance> provenance;

  int order() const { return add.size(); }
  bool operator==(const NearringDocument&) const = default;
};

/// Throws ParseError with a line number.
NearringDocument parse_document(std::string_view text);
std::string write_document(const NearringDocument& doc);

NearringDocument read_document_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Rebuilds the nearring. With provenance, the Ferrero construction must
/// reproduce the stored product table (ValidationError otherwise).
PlanarNearring to_nearring(const NearringDocument& doc);
NearringDocument to_document(const PlanarNearring& n);

/// Greedy generating set of phi: elements in stored order, each kept if it is
/// not yet in the closure of those kept before.
std::vector<Permutation> minimal_generators(const AutomorphismGroup& phi);

/// Deterministic JSON: one record per class, tables included on request.
std::string write_manifest(const std::vector<IsoClass>& classes, int max_order, EnumerationFilter filter,
                           bool include_tables);

}  // namespace pnr
