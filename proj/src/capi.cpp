#include "grasscurv/grasscurv.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "grasscurv/document.hpp"
#include "grasscurv/veronese.hpp"

struct gc_map {
  grasscurv::MapDocument doc;
};

namespace {

thread_local std::string last_error;

gc_status status_of(grasscurv::ErrorCode code) {
  using grasscurv::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError: return GC_ERR_PARSE;
    case ErrorCode::InvalidInput:
    case ErrorCode::BadDimension:
    case ErrorCode::BadExponents:
    case ErrorCode::PowerMismatch: return GC_ERR_INPUT;
    case ErrorCode::ZeroPolynomial:
    case ErrorCode::PoleAtPoint:
    case ErrorCode::DegreeOverflow: return GC_ERR_NUMERIC;
    case ErrorCode::DegenerateAtPoint:
    case ErrorCode::DegenerateMetric: return GC_ERR_DEGENERATE;
    case ErrorCode::UnsupportedRank: return GC_ERR_UNSUPPORTED;
  }
  return GC_ERR_INTERNAL;
}

template <class F>
gc_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return GC_OK;
  } catch (const grasscurv::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return GC_ERR_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) throw grasscurv::Error(grasscurv::ErrorCode::InvalidInput, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* gc_version(void) { return "0.1.0"; }

const char* gc_last_error(void) { return last_error.c_str(); }

void gc_string_free(char* s) { std::free(s); }

gc_status gc_map_parse(const char* json, gc_map** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new gc_map{grasscurv::parse_map_document(json)};
  });
}

gc_status gc_map_veronese(int n, int m, int macfarlane, gc_map** out) {
  return guarded([&] {
    need(out, "out");
    const grasscurv::VeroneseSpec spec{n, m};
    grasscurv::MapDocument doc = macfarlane ? grasscurv::to_document(grasscurv::veronese_macfarlane(spec))
                                            : grasscurv::to_document(grasscurv::veronese_frame(spec));
    doc.metadata["name"] = "veronese";
    doc.metadata["r"] = spec.r_max();
    *out = new gc_map{std::move(doc)};
  });
}

void gc_map_free(gc_map* map) { delete map; }

gc_status gc_map_shape(const gc_map* map, int* n, int* m) {
  return guarded([&] {
    need(map, "map");
    if (n) *n = map->doc.n;
    if (m) *m = map->doc.m;
  });
}

gc_status gc_map_to_json(const gc_map* map, char** json) {
  return guarded([&] {
    need(map, "map");
    need(json, "json");
    *json = dup(grasscurv::serialize(map->doc));
  });
}

gc_status gc_map_duality(const gc_map* map, gc_map** out) {
  return guarded([&] {
    need(map, "map");
    need(out, "out");
    *out = new gc_map{grasscurv::document_duality(map->doc)};
  });
}

gc_status gc_map_embed(const gc_map* map, gc_map** out) {
  return guarded([&] {
    need(map, "map");
    need(out, "out");
    *out = new gc_map{grasscurv::document_embed(map->doc)};
  });
}

gc_status gc_map_check(const gc_map* map, double tol, uint64_t seed, int* is_constant, char** report) {
  return guarded([&] {
    need(map, "map");
    if (!(tol > 0.0)) throw grasscurv::Error(grasscurv::ErrorCode::InvalidInput, "tolerance must be positive");
    const grasscurv::BiPoly det = grasscurv::document_gram_det(map->doc);
    const grasscurv::CurvatureReport rep = grasscurv::constant_curvature_check(det, tol, seed);
    if (is_constant) *is_constant = rep.constant ? 1 : 0;
    if (report) *report = dup(grasscurv::report_json(map->doc, rep, det).dump(2));
  });
}

gc_status gc_map_curvature_csv(const gc_map* map, double a, double b, int steps, char** csv) {
  return guarded([&] {
    need(map, "map");
    need(csv, "csv");
    if (steps > 10000) throw grasscurv::Error(grasscurv::ErrorCode::InvalidInput, "at most 10000 steps per axis");
    *csv = dup(grasscurv::curvature_csv(grasscurv::scan_grid(grasscurv::document_gram_det(map->doc), a, b, steps)));
  });
}

gc_status gc_map_el_residual(const gc_map* map, double re, double im, double h, double* residual) {
  return guarded([&] {
    need(map, "map");
    need(residual, "residual");
    *residual = grasscurv::euler_lagrange_residual(grasscurv::document_frame(map->doc), {re, im}, h);
  });
}

gc_status gc_solve(int n, int r, uint64_t seed, int restarts, int* solved, char** report) {
  return guarded([&] {
    if (n < 4 || r < 1) throw grasscurv::Error(grasscurv::ErrorCode::InvalidInput, "solve needs n >= 4 and r >= 1");
    const grasscurv::ClassifyOptions opts{restarts, seed};
    const grasscurv::ClassifyRow row = grasscurv::solve_rank(n, r, opts);
    if (solved) *solved = row.status == grasscurv::SolveStatus::Solved ? 1 : 0;
    if (report) {
      nlohmann::json out = grasscurv::row_json(row, true);
      out["n"] = n;
      out["m"] = 2;
      out["seed"] = seed;
      out["restarts"] = restarts;
      *report = dup(out.dump(2));
    }
  });
}

gc_status gc_classify(int n, int rmax, uint64_t seed, int restarts, char** report) {
  return guarded([&] {
    need(report, "report");
    if (n < 3 || rmax < 1) throw grasscurv::Error(grasscurv::ErrorCode::InvalidInput, "classify needs n >= 3 and rmax >= 1");
    const grasscurv::ClassifyOptions opts{restarts, seed};
    const auto rows = grasscurv::classify(n, 1, rmax, opts);
    *report = dup(grasscurv::classify_json(n, rmax, opts, rows).dump(2));
  });
}

}  // extern "C"
