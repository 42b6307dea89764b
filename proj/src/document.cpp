#include "grasscurv/document.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <set>

namespace grasscurv {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

double parse_decimal(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) schema(where + ": coefficient must be a decimal string");
  const auto& s = v.get_ref<const std::string&>();
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) schema(where + ": '" + s + "' is not a decimal number");
  return out;
}

HoloPoly parse_poly(const json& v, const std::string& where) {
  if (!v.is_array()) schema(where + ": polynomial must be a list of [re, im] pairs");
  std::vector<cplx> c;
  c.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const json& pair = v[k];
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!pair.is_array() || pair.size() != 2) schema(at + ": expected [re, im]");
    c.emplace_back(parse_decimal(pair[0], at), parse_decimal(pair[1], at));
  }
  if (c.size() > static_cast<std::size_t>(kDegreeCap) + 1) throw Error(ErrorCode::DegreeOverflow, where + ": degree exceeds the cap");
  return HoloPoly(std::move(c));
}

json poly_json(const HoloPoly& p) {
  json out = json::array();
  for (const cplx& c : p.coeffs()) out.push_back(json::array({decimal_string(c.real()), decimal_string(c.imag())}));
  return out;
}

int get_int(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) schema(std::string("missing field '") + key + "'");
  if (!it->is_number_integer()) schema(std::string("field '") + key + "' must be an integer");
  return it->get<int>();
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

MacfarlaneMap document_macfarlane(const MapDocument& doc) {
  switch (doc.kind) {
    case MapKind::Macfarlane:
      return MacfarlaneMap(doc.n, doc.m, doc.entries);
    case MapKind::Frame:
      return to_macfarlane(GrassmannFrame(doc.n, doc.m, doc.entries));
    case MapKind::Pluecker:
      return macfarlane_from_pluecker(PlueckerVector(doc.n, doc.m, doc.entries));
  }
  schema("unknown map kind");
}

MapDocument with_kind(const MacfarlaneMap& map, MapKind kind) {
  switch (kind) {
    case MapKind::Macfarlane:
      return to_document(map);
    case MapKind::Frame:
      return to_document(map.to_frame());
    case MapKind::Pluecker:
      return to_document(pluecker_minors(map.to_frame()));
  }
  schema("unknown map kind");
}

json indices_json(const std::vector<IndexTuple>& tuples) {
  json out = json::array();
  for (const auto& t : tuples) {
    json one = json::array();
    for (int i : t) one.push_back(i + 1);
    out.push_back(std::move(one));
  }
  return out;
}

const char* kNonProof = "no solution found above floor (numerical evidence, not a proof)";

}  // namespace

const char* to_string(MapKind kind) noexcept {
  switch (kind) {
    case MapKind::Frame: return "frame";
    case MapKind::Macfarlane: return "macfarlane";
    case MapKind::Pluecker: return "pluecker";
  }
  return "?";
}

MapDocument parse_map_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    if (const auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
  if (!root.is_object()) schema("document must be a JSON object");

  MapDocument doc;
  const auto kind = root.find("kind");
  if (kind == root.end() || !kind->is_string()) schema("missing string field 'kind'");
  const auto& k = kind->get_ref<const std::string&>();
  if (k == "frame") doc.kind = MapKind::Frame;
  else if (k == "macfarlane") doc.kind = MapKind::Macfarlane;
  else if (k == "pluecker") doc.kind = MapKind::Pluecker;
  else schema("unknown kind '" + k + "'");

  doc.n = get_int(root, "n");
  doc.m = get_int(root, "m");
  if (doc.m < 1 || doc.n <= doc.m || doc.n > 24) schema("need 1 <= m < n <= 24");

  if (const auto md = root.find("metadata"); md != root.end()) {
    if (!md->is_object()) schema("'metadata' must be an object");
    doc.metadata = *md;
  }

  const auto entries = root.find("entries");
  if (entries == root.end() || !entries->is_array()) schema("missing list field 'entries'");

  if (doc.kind == MapKind::Pluecker) {
    const auto tuples = index_tuples(doc.n, doc.m);
    if (entries->size() != tuples.size())
      schema("pluecker entries: expected " + std::to_string(tuples.size()) + " coordinates, got " + std::to_string(entries->size()));
    std::vector<HoloPoly> canon(tuples.size());
    std::vector<IndexTuple> order = tuples;
    if (const auto idx = root.find("indices"); idx != root.end()) {
      if (!idx->is_array() || idx->size() != tuples.size()) schema("'indices' must list every coordinate once");
      order.clear();
      for (const json& t : *idx) {
        if (!t.is_array() || t.size() != static_cast<std::size_t>(doc.m)) schema("'indices' entries must have m indices");
        IndexTuple tup;
        for (const json& i : t) {
          if (!i.is_number_integer()) schema("'indices' must be integers");
          const int v = i.get<int>();
          if (v < 1 || v > doc.n) schema("'indices' out of range 1..n");
          tup.push_back(v - 1);
        }
        if (!std::is_sorted(tup.begin(), tup.end()) || std::adjacent_find(tup.begin(), tup.end()) != tup.end())
          schema("'indices' tuples must be strictly increasing");
        order.push_back(std::move(tup));
      }
      if (std::set<IndexTuple>(order.begin(), order.end()).size() != order.size()) schema("'indices' repeats a tuple");
    }
    for (std::size_t q = 0; q < order.size(); ++q) {
      const auto pos = static_cast<std::size_t>(std::lower_bound(tuples.begin(), tuples.end(), order[q]) - tuples.begin());
      canon[pos] = parse_poly((*entries)[q], "entries[" + std::to_string(q) + "]");
    }
    doc.entries = std::move(canon);
    return doc;
  }

  const int rows = doc.kind == MapKind::Frame ? doc.n : doc.n - doc.m;
  if (entries->size() != static_cast<std::size_t>(rows))
    schema(std::string(to_string(doc.kind)) + " entries: expected " + std::to_string(rows) + " rows, got " + std::to_string(entries->size()));
  for (int i = 0; i < rows; ++i) {
    const json& row = (*entries)[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(doc.m))
      schema("entries[" + std::to_string(i) + "]: expected " + std::to_string(doc.m) + " polynomials");
    for (int j = 0; j < doc.m; ++j)
      doc.entries.push_back(parse_poly(row[static_cast<std::size_t>(j)], "entries[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
  }
  return doc;
}

json to_json(const MapDocument& doc) {
  json out;
  out["kind"] = to_string(doc.kind);
  out["n"] = doc.n;
  out["m"] = doc.m;
  out["metadata"] = doc.metadata;
  json entries = json::array();
  if (doc.kind == MapKind::Pluecker) {
    const auto tuples = index_tuples(doc.n, doc.m);
    const auto order = doc.m == 2 ? display_order_g2(doc.n) : tuples;
    for (const auto& t : order) {
      const auto pos = static_cast<std::size_t>(std::lower_bound(tuples.begin(), tuples.end(), t) - tuples.begin());
      entries.push_back(poly_json(doc.entries.at(pos)));
    }
    out["indices"] = indices_json(order);
  } else {
    const int rows = doc.kind == MapKind::Frame ? doc.n : doc.n - doc.m;
    for (int i = 0; i < rows; ++i) {
      json row = json::array();
      for (int j = 0; j < doc.m; ++j) row.push_back(poly_json(doc.entries.at(static_cast<std::size_t>(i * doc.m + j))));
      entries.push_back(std::move(row));
    }
  }
  out["entries"] = std::move(entries);
  return out;
}

std::string serialize(const MapDocument& doc) { return to_json(doc).dump(2); }

MapDocument to_document(const GrassmannFrame& frame) {
  return {MapKind::Frame, frame.n(), frame.m(), {frame.entries().begin(), frame.entries().end()}, json::object()};
}

MapDocument to_document(const MacfarlaneMap& map) {
  return {MapKind::Macfarlane, map.n(), map.m(), {map.k_entries().begin(), map.k_entries().end()}, json::object()};
}

MapDocument to_document(const PlueckerVector& pv) {
  return {MapKind::Pluecker, pv.n(), pv.m(), {pv.entries().begin(), pv.entries().end()}, json::object()};
}

std::vector<IndexTuple> display_order_g2(int n) {
  std::vector<IndexTuple> out{{0, 1}};
  for (int i = 2; i < n; ++i) {
    out.push_back({1, i});
    out.push_back({0, i});
  }
  for (int i = 2; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

GrassmannFrame document_frame(const MapDocument& doc) {
  switch (doc.kind) {
    case MapKind::Frame:
      return GrassmannFrame(doc.n, doc.m, doc.entries);
    case MapKind::Macfarlane:
      return MacfarlaneMap(doc.n, doc.m, doc.entries).to_frame();
    case MapKind::Pluecker:
      return macfarlane_from_pluecker(PlueckerVector(doc.n, doc.m, doc.entries)).to_frame();
  }
  schema("unknown map kind");
}

PlueckerVector document_pluecker(const MapDocument& doc) {
  if (doc.kind == MapKind::Pluecker) return PlueckerVector(doc.n, doc.m, doc.entries);
  return pluecker_minors(document_frame(doc));
}

BiPoly document_gram_det(const MapDocument& doc) {
  switch (doc.kind) {
    case MapKind::Frame:
      return gram_det(GrassmannFrame(doc.n, doc.m, doc.entries));
    case MapKind::Macfarlane:
      return macfarlane_gram_det(MacfarlaneMap(doc.n, doc.m, doc.entries));
    case MapKind::Pluecker:
      return gram_det(PlueckerVector(doc.n, doc.m, doc.entries));
  }
  schema("unknown map kind");
}

MapDocument document_duality(const MapDocument& doc) {
  MapDocument out = with_kind(duality_transpose(document_macfarlane(doc)), doc.kind);
  out.metadata = doc.metadata;
  out.metadata["transform"] = "duality";
  return out;
}

MapDocument document_embed(const MapDocument& doc) {
  MapDocument out;
  switch (doc.kind) {
    case MapKind::Frame:
      out = to_document(embed_pad(GrassmannFrame(doc.n, doc.m, doc.entries)));
      break;
    case MapKind::Macfarlane:
      out = to_document(embed_pad(MacfarlaneMap(doc.n, doc.m, doc.entries)));
      break;
    case MapKind::Pluecker:
      out = to_document(embed_pad(PlueckerVector(doc.n, doc.m, doc.entries)));
      break;
  }
  out.metadata = doc.metadata;
  out.metadata["transform"] = "embed";
  return out;
}

std::string decimal_string(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

json round12(double v) {
  if (!std::isfinite(v)) return nullptr;
  if (v == 0.0) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

json report_json(const MapDocument& doc, const CurvatureReport& report, const BiPoly& det_m) {
  json out;
  out["kind"] = to_string(doc.kind);
  out["n"] = doc.n;
  out["m"] = doc.m;
  out["metadata"] = doc.metadata;
  out["tol"] = round12(report.tol);
  out["constant"] = report.constant;
  out["r"] = report.r ? json(*report.r) : json(nullptr);
  out["kappa"] = report.kappa ? round12(*report.kappa) : json(nullptr);

  const auto match = binomial_match(det_m, report.tol);
  if (!report.constant) {
    if (!match) out["failed"] = "det M is not c (1+|x|^2)^r";
    else if (match->r < 1) out["failed"] = "det M is constant; the map is degenerate";
    else out["failed"] = "curvature differs from 4/r";
  }
  out["scale"] = match ? round12(match->c) : json(nullptr);

  json terms = json::array();
  for (const auto& [key, c] : det_m.terms())
    terms.push_back(json::array({key.first, key.second, round12(c.real()), round12(c.imag())}));
  out["det_m"] = std::move(terms);

  json scan = json::array();
  for (const auto& p : report.scan) {
    json s;
    s["x_re"] = round12(p.x.real());
    s["x_im"] = round12(p.x.imag());
    s["L"] = round12(p.density);
    s["K"] = round12(p.curvature);
    scan.push_back(std::move(s));
  }
  out["scan"] = std::move(scan);
  return out;
}

std::string curvature_csv(const std::vector<ScanPoint>& scan) {
  std::string out = "x_re,x_im,L,K\n";
  char buf[160];
  for (const auto& p : scan) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", p.x.real(), p.x.imag(), p.density, p.curvature);
    out += buf;
  }
  return out;
}

json branch_json(const BranchTrace& trace) {
  const auto& b = trace.branch;
  json zeros_a = json::array(), zeros_b = json::array();
  for (std::size_t i = 0; i < b.alpha_zero.size(); ++i)
    if (b.alpha_zero[i]) zeros_a.push_back(i + 1);
  for (std::size_t i = 0; i < b.beta_zero.size(); ++i)
    if (b.beta_zero[i]) zeros_b.push_back(i + 1);
  json out;
  out["label"] = b.label();
  out["r"] = b.r;
  out["s1"] = b.s1;
  out["alpha_zero"] = std::move(zeros_a);
  out["beta_zero"] = std::move(zeros_b);
  out["status"] = to_string(trace.status);
  out["floor"] = round12(trace.floor);
  out["restarts"] = trace.restarts;
  return out;
}

json row_json(const ClassifyRow& row, bool with_branches) {
  json out;
  out["r"] = row.r;
  out["kappa"] = round12(row.kappa);
  out["status"] = to_string(row.status);
  out["source"] = row.source;
  out["residual"] = round12(row.residual);
  if (row.status != SolveStatus::Solved)
    out["verdict"] = row.branches.empty() ? "no admissible exponent branch" : kNonProof;
  if (row.witness) {
    MapDocument doc = to_document(*row.witness);
    doc.metadata["r"] = row.r;
    doc.metadata["source"] = row.source;
    if (row.witness_branch) doc.metadata["branch"] = row.witness_branch->label();
    out["witness"] = to_json(doc);
  }
  if (row.witness_branch) out["witness_branch"] = row.witness_branch->label();
  if (!row.point.empty()) {
    json p;
    for (const auto& [name, v] : row.point) p[name] = round12(v);
    out["point"] = std::move(p);
  }
  out["branch_count"] = row.branches.size();
  if (with_branches) {
    json br = json::array();
    for (const auto& t : row.branches) br.push_back(branch_json(t));
    out["branches"] = std::move(br);
  }
  return out;
}

json classify_json(int n, int r_max, const ClassifyOptions& opts, const std::vector<ClassifyRow>& rows) {
  json out;
  out["n"] = n;
  out["m"] = 2;
  out["rmax"] = r_max;
  out["seed"] = opts.seed;
  out["restarts"] = opts.restarts;
  out["note"] = "residual floors are numerical evidence of infeasibility, not proofs";
  json table = json::array();
  for (const auto& row : rows) table.push_back(row_json(row, true));
  out["rows"] = std::move(table);
  return out;
}

}  // namespace grasscurv
