// Command-line front end over the C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "grasscurv/grasscurv.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(gc_status s) {
  return (s == GC_ERR_INPUT || s == GC_ERR_PARSE) ? kExitInput : kExitFailure;
}

void check(gc_status s) {
  if (s != GC_OK) throw CliError{exit_code_for(s), gc_last_error()};
}

class Map {
 public:
  Map() = default;
  Map(const Map&) = delete;
  Map& operator=(const Map&) = delete;
  ~Map() { gc_map_free(p_); }

  gc_map** out() { return &p_; }
  const gc_map* get() const { return p_; }

 private:
  gc_map* p_ = nullptr;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  gc_string_free(s);
  return out;
}

void load(const std::string& path, Map& map) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitInput, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const gc_status s = gc_map_parse(text.c_str(), map.out());
  if (s != GC_OK) throw CliError{exit_code_for(s), path + ": " + gc_last_error()};
}

void emit(const Map& map) {
  char* json = nullptr;
  check(gc_map_to_json(map.get(), &json));
  std::cout << take(json) << '\n';
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GRASSCURV_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw CliError{kExitInput, "GRASSCURV_SEED must be a non-negative integer"};
    return v;
  }
  return 42;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-curvature holomorphic maps of the sphere into Grassmannians"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gc_version());

  int n = 0, m = 1, r = 0, rmax = 0, restarts = 100, steps = 0;
  std::string param = "frame", file;
  double tol = 1e-9;
  bool expect_constant = false;
  std::uint64_t seed = 0;
  std::vector<double> grid;

  auto* veronese = app.add_subcommand("veronese", "emit the Veronese map into G(m,n)");
  veronese->add_option("--n", n, "ambient dimension")->required();
  veronese->add_option("--m", m, "subspace dimension")->required();
  veronese->add_option("--parametrization", param, "frame or macfarlane")
      ->check(CLI::IsMember({"frame", "macfarlane"}));

  auto* chk = app.add_subcommand("check", "constant-curvature report for a map file");
  chk->add_option("FILE", file, "map document, '-' for stdin")->required();
  chk->add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber);
  chk->add_flag("--expect-constant", expect_constant, "exit 1 unless the map has constant curvature");
  auto* chk_seed = chk->add_option("--seed", seed, "seed for the sample points");

  auto* curv = app.add_subcommand("curvature", "CSV of L and K over a grid");
  curv->add_option("FILE", file, "map document, '-' for stdin")->required();
  curv->add_option("--grid", grid, "A B STEPS: grid [A,B]^2 with STEPS points per axis")->expected(3)->required();

  auto* solve = app.add_subcommand("solve", "ansatz search in G(2,n) for one r");
  solve->add_option("--n", n, "ambient dimension")->required();
  solve->add_option("--r", r, "degree of det M")->required();
  auto* solve_seed = solve->add_option("--seed", seed, "search seed");
  solve->add_option("--restarts", restarts, "restarts per branch")->check(CLI::PositiveNumber);

  auto* cls = app.add_subcommand("classify", "classification table for r = 1..rmax in G(2,n)");
  cls->add_option("--n", n, "ambient dimension")->required();
  cls->add_option("--rmax", rmax, "largest r")->required();
  auto* cls_seed = cls->add_option("--seed", seed, "search seed");
  cls->add_option("--restarts", restarts, "restarts per branch")->check(CLI::PositiveNumber);

  auto* dual = app.add_subcommand("duality", "K -> K^T, G(m,n) -> G(n-m,n)");
  dual->add_option("FILE", file, "map document, '-' for stdin")->required();

  auto* emb = app.add_subcommand("embed", "pad with a zero row, G(m,n) -> G(m,n+1)");
  emb->add_option("FILE", file, "map document, '-' for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    const auto pick_seed = [&](const CLI::Option* opt) { return opt->count() ? seed : default_seed(); };

    if (veronese->parsed()) {
      Map map;
      check(gc_map_veronese(n, m, param == "macfarlane", map.out()));
      emit(map);
    } else if (chk->parsed()) {
      Map map;
      load(file, map);
      int constant = 0;
      char* report = nullptr;
      check(gc_map_check(map.get(), tol, pick_seed(chk_seed), &constant, &report));
      std::cout << take(report) << '\n';
      if (expect_constant && !constant) {
        std::cerr << "check: map does not have constant curvature\n";
        return kExitFailure;
      }
    } else if (curv->parsed()) {
      const double s = grid.at(2);
      if (s < 1 || s != static_cast<int>(s)) throw CliError{kExitInput, "--grid STEPS must be a positive integer"};
      steps = static_cast<int>(s);
      Map map;
      load(file, map);
      char* csv = nullptr;
      check(gc_map_curvature_csv(map.get(), grid.at(0), grid.at(1), steps, &csv));
      std::cout << take(csv);
    } else if (solve->parsed()) {
      int solved = 0;
      char* report = nullptr;
      check(gc_solve(n, r, pick_seed(solve_seed), restarts, &solved, &report));
      std::cout << take(report) << '\n';
      if (!solved) {
        std::cerr << "solve: no certified solution (residual floor reported)\n";
        return kExitFailure;
      }
    } else if (cls->parsed()) {
      char* report = nullptr;
      check(gc_classify(n, rmax, pick_seed(cls_seed), restarts, &report));
      std::cout << take(report) << '\n';
    } else if (dual->parsed() || emb->parsed()) {
      Map in, out;
      load(file, in);
      check(dual->parsed() ? gc_map_duality(in.get(), out.out()) : gc_map_embed(in.get(), out.out()));
      emit(out);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  }
  return 0;
}
