#include <stdexcept>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "crsense/sweep.hpp"
#include "doctest.h"

using namespace crsense;

namespace {

// Deliberately tiny sweep so the whole file runs in seconds.
SweepSpec tiny_spec() {
  SweepSpec spec;
  spec.kind = SweepKind::vary_n;
  spec.base.m = 5;
  spec.base.n = 4;
  spec.base.l_max = 2;
  spec.grid = {2, 4};
  spec.runs = 5;
  spec.base_seed = 2024;
  return spec;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("sweep kind names round-trip") {
  for (SweepKind k : {SweepKind::vary_n, SweepKind::vary_lmax, SweepKind::vary_gamma})
    CHECK(parse_sweep_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_sweep_kind("vary-q"), std::invalid_argument);
}

TEST_CASE("default grids match the figure settings") {
  CHECK(default_grid(SweepKind::vary_n) == std::vector<double>{4, 8, 12, 16, 20});
  CHECK(default_grid(SweepKind::vary_lmax) == std::vector<double>{1, 2, 3, 4, 5});
  CHECK(default_grid(SweepKind::vary_gamma) == std::vector<double>{1, 2, 3, 4, 5});
}

TEST_CASE("run_sweep: row shape and invariants") {
  const auto rows = run_sweep(tiny_spec());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].swept_value == 2);
  CHECK(rows[1].swept_value == 4);
  for (const SweepRow& r : rows) {
    CHECK(r.mwm_mean >= 0.0);
    CHECK(r.mwm_mean <= r.upper_bound + 1e-9);
    CHECK(r.greedy_mean <= r.upper_bound + 1e-9);
    CHECK(r.random_mean <= r.upper_bound + 1e-9);
    CHECK(r.mu_mean >= 1.0 - 1e-12);
    CHECK(r.mu_mean <= 2.0 + 1e-12);
  }
}

TEST_CASE("run_sweep: reproducible bit-exactly for a fixed seed") {
  SweepSpec spec = tiny_spec();
  spec.runs = 1;
  const std::string a = csv_string(run_sweep(spec));
  const std::string b = csv_string(run_sweep(spec));
  CHECK(a == b);
}

TEST_CASE("csv: header plus one line per row, deterministic") {
  const auto rows = run_sweep(tiny_spec());
  const std::string csv = csv_string(rows);
  CHECK(csv.rfind("swept_value,mwm_mean,mwm_std,greedy_mean,greedy_std,"
                  "random_mean,random_std,upper_bound,mu_mean\n", 0) == 0);
  size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == rows.size() + 1);
  CHECK(csv == csv_string(run_sweep(tiny_spec())));
}

TEST_CASE("emit writes csv and plot; plot contains all four series") {
  const auto rows = run_sweep(tiny_spec());
  const auto dir = std::filesystem::temp_directory_path() / "crsense_sweep_test";
  std::filesystem::remove_all(dir);
  emit(rows, SweepKind::vary_n, dir.string());

  const auto csv_path = dir / "vary-n.csv";
  const auto svg_path = dir / "vary-n.svg";
  REQUIRE(std::filesystem::exists(csv_path));
  REQUIRE(std::filesystem::exists(svg_path));
  CHECK(slurp(csv_path) == csv_string(rows));

  const std::string svg = slurp(svg_path);
  for (const char* label : {"MWM", "greedy", "random", "upper bound"})
    CHECK(svg.find(label) != std::string::npos);
  // one polyline per series
  size_t count = 0, pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++count;
    pos += 9;
  }
  CHECK(count == 4);
  std::filesystem::remove_all(dir);
}

TEST_CASE("run_sweep: invalid specs are rejected") {
  SweepSpec spec = tiny_spec();
  spec.runs = 0;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
  spec = tiny_spec();
  spec.grid = {40};  // l_max would exceed m in a vary-lmax sweep
  spec.kind = SweepKind::vary_lmax;
  CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
}
