#pragma once

// MapDocument: the JSON file format for maps, and JSON/CSV report builders.
//
//   {
//     "kind": "frame" | "macfarlane" | "pluecker",
//     "n": 5, "m": 2,
//     "entries": ...,
//     "indices": [[1,2],[2,3],...],   // pluecker only, optional, 1-based
//     "metadata": { ... }
//   }
//
// A polynomial is a list of [re, im] decimal-string pairs, lowest degree
// first. Frame entries are n rows of m polynomials, Macfarlane entries are
// n-m rows of m polynomials, Pluecker entries are C(n,m) polynomials in
// lexicographic tuple order unless "indices" says otherwise.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grasscurv/curvature.hpp"
#include "grasscurv/grassmann.hpp"
#include "grasscurv/search.hpp"

namespace grasscurv {

enum class MapKind { Frame, Macfarlane, Pluecker };

const char* to_string(MapKind kind) noexcept;

struct MapDocument {
  MapKind kind = MapKind::Frame;
  int n = 2;
  int m = 1;
  /// Row-major for frame/macfarlane; canonical tuple order for pluecker.
  std::vector<HoloPoly> entries;
  nlohmann::json metadata = nlohmann::json::object();
};

/// Throws Error(ParseError) with line/column for malformed JSON and
/// Error(InvalidInput) for schema violations.
MapDocument parse_map_document(std::string_view text);
nlohmann::json to_json(const MapDocument& doc);
std::string serialize(const MapDocument& doc);

MapDocument to_document(const GrassmannFrame& frame);
MapDocument to_document(const MacfarlaneMap& map);
/// Emitted with explicit "indices"; for m = 2 they follow the display order
/// 12, (2i, 1i) for i = 3..n, then ij for 3 <= i < j.
MapDocument to_document(const PlueckerVector& pv);

/// Display order of G(2,n) Pluecker coordinates (0-based tuples).
std::vector<IndexTuple> display_order_g2(int n);

GrassmannFrame document_frame(const MapDocument& doc);
PlueckerVector document_pluecker(const MapDocument& doc);
BiPoly document_gram_det(const MapDocument& doc);

MapDocument document_duality(const MapDocument& doc);
MapDocument document_embed(const MapDocument& doc);

/// Shortest decimal string that round-trips the double.
std::string decimal_string(double v);
/// Value rounded to 12 significant digits; non-finite values become null.
nlohmann::json round12(double v);

nlohmann::json report_json(const MapDocument& doc, const CurvatureReport& report, const BiPoly& det_m);
std::string curvature_csv(const std::vector<ScanPoint>& scan);
nlohmann::json branch_json(const BranchTrace& trace);
nlohmann::json row_json(const ClassifyRow& row, bool with_branches);
nlohmann::json classify_json(int n, int r_max, const ClassifyOptions& opts, const std::vector<ClassifyRow>& rows);

}  // namespace grasscurv
