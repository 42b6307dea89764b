#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "grasscurv/document.hpp"
#include "grasscurv/veronese.hpp"

using namespace grasscurv;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

std::string error_text(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("decimal strings round-trip") {
  CHECK(decimal_string(0.1) == "0.1");
  CHECK(decimal_string(-2.5e-3) == "-0.0025");
  CHECK(decimal_string(0.0) == "0");
  CHECK(decimal_string(1.0) == "1");
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, 1e3);
  for (int t = 0; t < 200; ++t) {
    const double v = g(rng);
    CHECK(std::stod(decimal_string(v)) == v);
  }
}

TEST_CASE("round12") {
  CHECK(round12(2.0 / 3.0).get<double>() == 0.666666666667);
  CHECK(round12(1.0).dump() == "1.0");
  CHECK(round12(std::numeric_limits<double>::quiet_NaN()).is_null());
  CHECK(round12(std::numeric_limits<double>::infinity()).is_null());
}

TEST_CASE("parse and serialize round trip losslessly") {
  const std::string text = R"({
    "kind": "macfarlane", "n": 4, "m": 2,
    "entries": [
      [[["0", "0"], ["0", "0"], ["-1.7320508075688772", "0"]], [["0", "0"], ["2", "0"]]],
      [[["0", "0"], ["0", "0"], ["0", "0"], ["-2", "0.125"]], [["0.1", "-0.3"]]]
    ],
    "metadata": {"name": "test"}
  })";
  const MapDocument doc = parse_map_document(text);
  CHECK(doc.kind == MapKind::Macfarlane);
  CHECK(doc.entries.size() == 4);
  CHECK(doc.entries[2].coeff(3) == cplx(-2, 0.125));
  CHECK(doc.entries[3].coeff(0) == cplx(0.1, -0.3));
  CHECK(doc.metadata["name"] == "test");
  const std::string out = serialize(doc);
  const MapDocument again = parse_map_document(out);
  CHECK(again.entries == doc.entries);
  CHECK(serialize(again) == out);
  CHECK(out.find("\"-1.7320508075688772\"") != std::string::npos);
  CHECK(out.find("\"0.1\"") != std::string::npos);
}

TEST_CASE("documents of the library types") {
  const MapDocument f = to_document(veronese_frame({5, 2}));
  CHECK(f.kind == MapKind::Frame);
  CHECK(parse_map_document(serialize(f)).entries == f.entries);
  CHECK(document_frame(f) == veronese_frame({5, 2}));

  const MapDocument k = to_document(veronese_macfarlane({5, 2}));
  CHECK(binomial_match(document_gram_det(k), 1e-12)->r == 6);
  CHECK(binomial_match(document_gram_det(f), 1e-12)->r == 6);
}

TEST_CASE("display order of Pluecker coordinates") {
  const auto d4 = display_order_g2(4);
  CHECK(d4 == std::vector<IndexTuple>{{0, 1}, {1, 2}, {0, 2}, {1, 3}, {0, 3}, {2, 3}});
  const auto d5 = display_order_g2(5);
  REQUIRE(d5.size() == 10);
  CHECK(d5[5] == IndexTuple{1, 4});
  CHECK(d5[6] == IndexTuple{0, 4});
  CHECK(d5[7] == IndexTuple{2, 3});
  CHECK(d5[9] == IndexTuple{3, 4});
}

TEST_CASE("Pluecker documents with and without indices") {
  const auto w = fixtures::reference_witnesses()[0];
  const MapDocument doc = to_document(w.pv);
  const nlohmann::json j = to_json(doc);
  CHECK(j["indices"][1] == nlohmann::json::array({2, 3}));
  CHECK(j["indices"][2] == nlohmann::json::array({1, 3}));
  const MapDocument back = parse_map_document(j.dump());
  CHECK(back.entries == doc.entries);

  nlohmann::json lex = j;
  lex.erase("indices");
  lex["entries"] = nlohmann::json::array();
  for (const auto& p : w.pv.entries()) {
    nlohmann::json poly = nlohmann::json::array();
    for (const cplx c : p.coeffs()) poly.push_back({decimal_string(c.real()), decimal_string(c.imag())});
    lex["entries"].push_back(poly);
  }
  CHECK(parse_map_document(lex.dump()).entries == doc.entries);

  nlohmann::json dup = j;
  dup["indices"][1] = {1, 2};
  CHECK(code_of([&] { parse_map_document(dup.dump()); }) == ErrorCode::InvalidInput);
}

TEST_CASE("parse errors carry line and column") {
  const std::string bad = "{\n  \"kind\": \"frame\",\n  \"n\": 3,,\n}";
  CHECK(code_of([&] { parse_map_document(bad); }) == ErrorCode::ParseError);
  const std::string msg = error_text([&] { parse_map_document(bad); });
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find("column 10") != std::string::npos);
}

TEST_CASE("schema violations") {
  auto bad = [](const std::string& s) { return code_of([&] { parse_map_document(s); }); };
  CHECK(bad("[]") == ErrorCode::InvalidInput);
  CHECK(bad(R"({"kind":"curve","n":3,"m":1,"entries":[]})") == ErrorCode::InvalidInput);
  CHECK(bad(R"({"kind":"frame","n":3,"m":1,"entries":[[[]],[[]]]})") == ErrorCode::InvalidInput);
  CHECK(bad(R"({"kind":"frame","n":2,"m":1,"entries":[[[["1","0"]]],[[["x","0"]]]]})") == ErrorCode::InvalidInput);
  CHECK(bad(R"({"kind":"frame","n":2,"m":1,"entries":[[[["1"]]],[[["1","0"]]]]})") == ErrorCode::InvalidInput);
  CHECK(bad(R"({"kind":"frame","n":2,"m":2,"entries":[]})") == ErrorCode::InvalidInput);
  CHECK(bad(R"({"kind":"pluecker","n":4,"m":2,"entries":[[],[]]})") == ErrorCode::InvalidInput);
  CHECK(bad(R"({"kind":"frame","n":2,"m":1,"entries":[[[["1","0"]]],[[["1","0"]]]],"metadata":3})") == ErrorCode::InvalidInput);
  CHECK(bad(R"({"kind":"frame","n":"2","m":1,"entries":[]})") == ErrorCode::InvalidInput);
}

TEST_CASE("duality and embedding documents") {
  const MapDocument k = to_document(veronese_macfarlane({5, 2}));
  const MapDocument d = document_duality(k);
  CHECK(d.kind == MapKind::Macfarlane);
  CHECK(d.m == 3);
  CHECK(d.metadata["transform"] == "duality");
  CHECK((document_gram_det(d) - document_gram_det(k)).max_abs_coeff() < 1e-12);

  const auto w = fixtures::reference_witnesses()[1];
  const MapDocument p = to_document(w.pv);
  const MapDocument pd = document_duality(p);
  CHECK(pd.kind == MapKind::Pluecker);
  CHECK((document_gram_det(pd) - document_gram_det(p)).max_abs_coeff() < 1e-12);

  const MapDocument e = document_embed(p);
  CHECK(e.n == 5);
  CHECK(document_gram_det(e) == document_gram_det(p));
  const MapDocument fe = document_embed(to_document(veronese_frame({4, 2})));
  CHECK(fe.kind == MapKind::Frame);
  CHECK(fe.n == 5);
}

TEST_CASE("reports") {
  const MapDocument doc = to_document(veronese_frame({4, 2}));
  const BiPoly det = document_gram_det(doc);
  const nlohmann::json rep = report_json(doc, constant_curvature_check(det, 1e-9), det);
  CHECK(rep["constant"] == true);
  CHECK(rep["r"] == 4);
  CHECK(rep["kappa"].get<double>() == 1.0);
  CHECK(rep["scan"].size() == 25);
  CHECK_FALSE(rep.contains("failed"));
  // keys come out sorted
  std::vector<std::string> keys;
  for (const auto& [key, v] : rep.items()) keys.push_back(key);
  CHECK(std::is_sorted(keys.begin(), keys.end()));

  BiPoly flat = BiPoly::constant(1.0);
  flat.add_term(1, 1, 2.0);
  const nlohmann::json bad = report_json(doc, constant_curvature_check(flat, 1e-9), flat);
  CHECK(bad["constant"] == false);
  CHECK(bad["r"].is_null());
  CHECK(bad["failed"].get<std::string>().find("(1+|x|^2)^r") != std::string::npos);

  const std::string csv = curvature_csv(scan_grid(det, -1, 1, 2));
  CHECK(csv.rfind("x_re,x_im,L,K\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.find("-1,-1,") != std::string::npos);
}

TEST_CASE("classification JSON") {
  ClassifyOptions opts{20, 42};
  const auto rows = classify(4, 4, 5, opts);
  const nlohmann::json j = classify_json(4, 5, opts, rows);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["status"] == "solved");
  CHECK(j["rows"][0].contains("witness"));
  CHECK(j["rows"][1]["status"] == "residual_floor");
  CHECK(j["rows"][1]["verdict"].get<std::string>().find("not a proof") != std::string::npos);
  CHECK(j["rows"][1]["branches"][0]["restarts"] == 20);
  // witness re-parses
  const MapDocument w = parse_map_document(j["rows"][0]["witness"].dump());
  CHECK(constant_curvature_check(document_gram_det(w), 1e-8).constant);
}
