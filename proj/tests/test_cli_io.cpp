#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "idemfract/config.hpp"
#include "idemfract/emit.hpp"
#include "idemfract/error.hpp"
#include "idemfract/fuzzy.hpp"
#include "idemfract/pipeline.hpp"
#include "test_support.hpp"

using namespace idemfract;
namespace fs = std::filesystem;

namespace {

std::string config_error(const std::string& text) {
  try {
    (void)parse_config(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigInvalid);
    return e.what();
  }
  FAIL("config was accepted: " << text);
  return {};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("idemfract_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = parse_config(R"({
    "space": {"dimension": 2, "M": 64},
    "system": {"family": "checker-2d", "weights": "neg-square", "n": 6},
    "iteration": {"N": 12, "tolerance": 0.5, "initial_support": [0, 5]},
    "higuchi": {"k_max": [4, 8]},
    "outputs": {"image_path": "x.pgm", "image_format": "P5"},
    "oracle": {"depth": 3, "budget": 1000}
  })");
  CHECK(cfg.dimension == 2);
  CHECK(cfg.subdivisions == 64);
  CHECK(cfg.system.n == 6);
  CHECK(cfg.iteration.max_iterations == 12);
  CHECK(cfg.iteration.tolerance == 0.5);
  CHECK(cfg.iteration.initial_support == std::vector<std::size_t>{0, 5});
  CHECK(cfg.k_max == std::vector<std::size_t>{4, 8});
  CHECK(cfg.outputs.binary_image);
  CHECK(cfg.oracle_depth == 3);
  CHECK(cfg.oracle_budget == 1000);
}

TEST_CASE("explicit systems in config") {
  const auto cfg = parse_config(R"({
    "space": {"dimension": 1, "M": 8},
    "system": {"family": "explicit", "n": 2, "weights": [0, "-inf"],
               "maps": [{"slope": 0.5, "offset": 0}, {"slope": 0.5, "offset": 0.5}]}
  })");
  const auto sys = cfg.system.build();
  CHECK(sys.max_order() == 2u);
  CHECK(is_bottom(sys.weight(2)));

  const auto cfg2 = parse_config(R"({
    "space": {"dimension": 2, "M": 8},
    "system": {"family": "explicit", "n": 1, "weights": [0],
               "maps": [{"matrix": [[0.5, 0], [0, 0.5]], "offset": [0.25, 0.25]}]}
  })");
  CHECK(cfg2.system.build().map(1)(Point{1.0, 1.0}) == Point{0.75, 0.75});
}

TEST_CASE("config errors name the offending field") {
  const std::string sys = R"("system": {"family": "dyadic-shift-1d", "weights": "neg-square", "n": 3})";
  CHECK(config_error("{").find("json") != std::string::npos);
  CHECK(config_error(R"({"space": {"dimension": 3, "M": 8}, )" + sys + "}").find("space.dimension") !=
        std::string::npos);
  CHECK(config_error(R"({"space": {"dimension": 1, "M": 1}, )" + sys + "}").find("space.M") != std::string::npos);
  CHECK(config_error(R"({"space": {"dimension": 1, "M": 8}, )" + sys + R"(, "iteration": {"N": 0}})")
            .find("iteration.N") != std::string::npos);
  CHECK(config_error(R"({"space": {"dimension": 1, "M": 8}, )" + sys + R"(, "higuchi": {"k_max": 6}})")
            .find("higuchi.k_max") != std::string::npos);
  CHECK(config_error(R"({"space": {"dimension": 1, "M": 8}, "system": {"family": "dyadic-shift-1d", "n": 0}})")
            .find("system") != std::string::npos);
  CHECK(config_error(R"({"space": {"dimension": 1, "M": 8}, )" + sys + R"(, "outputs": {"image_format": "P6"}})")
            .find("outputs.image_format") != std::string::npos);
  CHECK(config_error(R"({"space": {"dimension": 1, "M": 8}, )" + sys + R"(, "outputs": {"image_format": 5}})")
            .find("outputs.image_format") != std::string::npos);
  CHECK(config_error(R"({"space": {"dimension": 1, "M": 8}, )" + sys + R"(, "iteration": {"initial_support": [9]}})")
            .find("iteration.initial_support") != std::string::npos);
}

TEST_CASE("unknown families are rejected while parsing") {
  const auto msg = config_error(R"({"space": {"dimension": 1, "M": 8},
    "system": {"family": "koch", "weights": "neg-square", "n": 2}})");
  CHECK(msg.find("system.family") != std::string::npos);
  CHECK(config_error(R"({"space": {"dimension": 2, "M": 8},
    "system": {"family": "checker-2d", "weights": "neg-cube", "n": 2}})")
            .find("system.weights") != std::string::npos);
  CHECK(exit_code(ErrorCode::ConfigInvalid) == 2);
  CHECK(exit_code(ErrorCode::UnknownFamily) == 2);
}

TEST_CASE("real formatting round-trips") {
  testing::Lcg rng(5);
  for (int t = 0; t < 1000; ++t) {
    const double v = rng.uniform(-50.0, 0.0) * std::pow(10.0, rng.uniform(-10.0, 3.0));
    CHECK(parse_real(format_real(v)) == v);
  }
  CHECK(format_real(kBottom) == "-inf");
  CHECK(is_bottom(parse_real("-inf")));
  CHECK(format_real(0.0) == "0");
  CHECK_THROWS_AS((void)parse_real("abc"), Error);
}

TEST_CASE("density CSV round-trip") {
  testing::Lcg rng(6);
  for (int dim : {1, 2}) {
    const UniformGrid g(dim, 9);
    const auto d = renormalize(testing::random_density(rng, g.shape(), 0.3));
    std::stringstream s;
    write_density_csv(s, d, g);
    const auto loaded = read_density_csv(s);
    CHECK(loaded.grid.dimension() == dim);
    CHECK(loaded.grid.subdivisions() == 9);
    CHECK(loaded.density == d);
  }
}

TEST_CASE("density CSV layout") {
  const UniformGrid g(2, 2);
  DiscreteDensity d(g.shape());
  d[5] = 0.0;  // i = 2, j = 1
  std::stringstream s;
  write_density_csv(s, d, g);
  std::string header, first;
  std::getline(s, header);
  std::getline(s, first);
  CHECK(header == "i,j,x1,x2,lambda,u");
  CHECK(first == "0,0,0,0,-inf,0");
  std::string line;
  for (int r = 1; r <= 5; ++r) std::getline(s, first);
  CHECK(first == "2,1,1,0.5,0,1");
}

TEST_CASE("PGM writer and reader") {
  const UniformGrid g(2, 3);
  FuzzyField f{g.shape(), std::vector<double>(16, 0.0)};
  f.values[3] = 1.0;  // x1 = 1, x2 = 0: bottom-right pixel
  f.values[12] = 0.5; // x1 = 0, x2 = 1: top-left pixel
  for (bool binary : {false, true}) {
    std::stringstream s;
    write_pgm(s, f, binary);
    const auto img = read_pgm(s);
    REQUIRE(img.side == 4);
    CHECK(img.at(3, 3) == 1.0);
    CHECK(img.at(0, 0) == 128.0 / 255.0);
    CHECK(img.at(0, 3) == 0.0);
  }
  std::stringstream ascii;
  write_pgm(ascii, FuzzyField{UniformGrid(2, 99).shape(), std::vector<double>(10000, 0.5)});
  for (std::string line; std::getline(ascii, line);) CHECK(line.size() <= 70);

  std::stringstream wide("P2\n3 2\n255\n0 0 0 0 0 0\n");
  CHECK_THROWS_AS((void)read_pgm(wide), Error);
}

TEST_CASE("series files") {
  const auto dir = scratch_dir("series");
  {
    std::ofstream(dir / "plain.txt") << "1\n2.5\n\n4\n";
    const auto s = read_series_file((dir / "plain.txt").string());
    CHECK(s.dimension == 1);
    CHECK(s.series == std::vector<double>{1.0, 2.5, 4.0});
  }
  {
    const UniformGrid g(1, 4);
    std::ofstream out(dir / "fuzzy.csv");
    write_fuzzy_csv(out, FuzzyField{g.shape(), {0.0, 0.25, 1.0, 0.5, 0.0}}, g);
  }
  const auto s = read_series_file((dir / "fuzzy.csv").string());
  CHECK(s.series == std::vector<double>{0.0, 0.25, 1.0, 0.5, 0.0});
  CHECK_THROWS_AS((void)read_series_file((dir / "missing.txt").string()), Error);
  fs::remove_all(dir);
}

TEST_CASE("attractor pipeline outputs") {
  const auto dir = scratch_dir("pipeline");
  const std::string text = R"({
    "space": {"dimension": 1, "M": 200},
    "system": {"family": "dyadic-shift-1d", "weights": "neg-geometric", "n": 12},
    "iteration": {"N": 30},
    "higuchi": {"k_max": [10, 40]},
    "outputs": {"density_path": ")" + (dir / "d.csv").string() + R"(",
                "fuzzy_path": ")" + (dir / "u.csv").string() + R"(",
                "fit_path": ")" + (dir / "fit.csv").string() + R"("}
  })";
  const auto cfg = parse_config(text);
  std::ostringstream log;
  const auto run = run_attractor(cfg, log);
  CHECK(log.str().find("converged=") != std::string::npos);
  CHECK(run.delta == doctest::Approx(2 * 0.0025 / 0.5));

  std::ifstream in(dir / "d.csv");
  const auto loaded = read_density_csv(in);
  CHECK(loaded.density == run.density);

  const auto u = read_series_file((dir / "u.csv").string());
  CHECK(u.series.size() == 201);
  CHECK(*std::max_element(u.series.begin(), u.series.end()) == 1.0);

  const auto results = run_hfd(cfg, std::nullopt, log);
  REQUIRE(results.size() == 2);
  CHECK(results[1].dimension == hfd_1d(fuzzify(run.density).values, 40));
  const auto fit = slurp(dir / "fit.csv");
  CHECK(fit.rfind("# dimension=", 0) == 0);
  CHECK(fit.find("k,measure,abscissa,ordinate,used,cumulative_dimension") != std::string::npos);

  // The CSV reproduces the in-memory dimension exactly.
  CHECK(run_hfd_file((dir / "u.csv").string(), 40, "", log).dimension == results[1].dimension);
  fs::remove_all(dir);
}

TEST_CASE("PGM quantization barely moves the 2D dimension") {
  const auto cfg = parse_config(R"({
    "space": {"dimension": 2, "M": 128},
    "system": {"family": "checker-2d", "weights": "neg-square", "n": 10},
    "iteration": {"N": 15}
  })");
  const auto run = compute_attractor(cfg);
  const auto u = fuzzify(run.density);
  std::stringstream pgm;
  write_pgm(pgm, u);
  const auto img = read_pgm(pgm);
  // The image is flipped vertically, which the four-edge measure ignores.
  const double from_density = hfd_2d(Series2D{129, u.values}, 33);
  CHECK(std::abs(hfd_2d(img, 33) - from_density) < 0.02);
}

TEST_CASE("oracle check through the pipeline") {
  const auto cfg = load_config(IDEMFRACT_SOURCE_DIR "/configs/oracle_small.json");
  std::ostringstream log;
  const auto report = run_oracle_check(cfg, log);
  CHECK(report.passed);
  CHECK(report.max_discrepancy == 0.0);
}

TEST_CASE("runs are deterministic") {
  const auto dir = scratch_dir("determinism");
  auto cfg = parse_config(R"({
    "space": {"dimension": 2, "M": 64},
    "system": {"family": "maple-leaf-2d", "weights": "neg-geometric", "n": 6},
    "iteration": {"N": 10}
  })");
  std::ostringstream log;
  for (const char* tag : {"a", "b"}) {
    cfg.outputs.density_path = (dir / (std::string(tag) + ".csv")).string();
    cfg.outputs.image_path = (dir / (std::string(tag) + ".pgm")).string();
    cfg.iteration.threads = tag[0] == 'a' ? 1 : 4;
    (void)run_attractor(cfg, log);
  }
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(slurp(dir / "a.pgm") == slurp(dir / "b.pgm"));
  fs::remove_all(dir);
}
