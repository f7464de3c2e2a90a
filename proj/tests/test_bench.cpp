#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "test_support.hpp"

using namespace tridet;
using namespace tridet::testing;

namespace {

BenchOptions quick() {
  BenchOptions o;
  o.trials = 3;
  o.warmup = 0;
  return o;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("algorithm names") {
  for (auto a : {BenchAlgorithm::Detgtri, BenchAlgorithm::TwoTerm, BenchAlgorithm::ThreeTerm,
                 BenchAlgorithm::Hybrid, BenchAlgorithm::HybridScaled, BenchAlgorithm::Dense}) {
    CHECK(parse_bench_algorithm(to_string(a)) == a);
  }
  CHECK_FALSE(parse_bench_algorithm("fast"));
}

TEST_CASE("single cell with three trials") {
  const std::vector<BenchCell> plan = {{Family::Ex33, 50, BenchAlgorithm::Hybrid}};
  const auto recs = run_bench(plan, quick());
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].trials == 3);
  CHECK(recs[0].median_seconds >= 0.0);
  CHECK(recs[0].result_sign == 0);  // 50 mod 6 = 2
  CHECK(recs[0].diagnostic.empty());
  CHECK(matches_closed_form(recs[0]) == true);
}

TEST_CASE("option validation") {
  const std::vector<BenchCell> plan = {{Family::Ex32, 10, BenchAlgorithm::Hybrid}};
  BenchOptions o = quick();
  o.trials = 2;
  CHECK_THROWS_AS(run_bench(plan, o), std::invalid_argument);
  o = quick();
  o.warmup = -1;
  CHECK_THROWS_AS(run_bench(plan, o), std::invalid_argument);
}

TEST_CASE("results agree across algorithms and with closed forms") {
  const std::vector<Family> fams = {Family::Ex32, Family::Ex33, Family::Ex34, Family::Ex35};
  const std::vector<std::size_t> sizes = {7, 40, 101};
  const std::vector<BenchAlgorithm> algs = {BenchAlgorithm::Detgtri, BenchAlgorithm::ThreeTerm,
                                            BenchAlgorithm::Hybrid, BenchAlgorithm::HybridScaled};
  const auto plan = make_plan(fams, sizes, algs);
  CHECK(plan.size() == fams.size() * sizes.size() * algs.size());
  const auto recs = sorted_records(run_bench(plan, quick()));
  for (std::size_t i = 0; i < recs.size(); i += algs.size()) {
    const auto& ref = recs[i];  // detgtri, exact
    for (std::size_t j = i; j < i + algs.size(); ++j) {
      const auto& r = recs[j];
      REQUIRE(r.family == ref.family);
      REQUIRE(r.n == ref.n);
      // Plain three-term cancels catastrophically on the alternating family
      // at even n (factorial-sized minors summing to 0).
      if (r.algorithm == BenchAlgorithm::ThreeTerm && r.family == Family::Ex34 && r.n % 2 == 0) continue;
      CHECK(r.result_sign == ref.result_sign);
      if (ref.result_sign != 0) {
        CHECK(std::fabs(r.result_logmag - ref.result_logmag) <= 1e-9 * std::max(1.0, std::fabs(ref.result_logmag)));
      }
      const auto ok = matches_closed_form(r);
      if (has_closed_form(r.family)) {
        CHECK(ok == true);
      } else {
        CHECK_FALSE(ok);
      }
    }
  }
}

TEST_CASE("dense stand-in column") {
  const std::vector<BenchCell> plan = {{Family::Ex32, 200, BenchAlgorithm::Dense},
                                       {Family::Ex34, 51, BenchAlgorithm::Dense}};
  for (const auto& r : run_bench(plan, quick())) {
    CHECK(r.diagnostic.empty());
    CHECK(matches_closed_form(r) == true);
  }
}

TEST_CASE("plain overflow falls back to the scaled kernel") {
  const std::vector<BenchCell> plan = {{Family::Ex34, 1001, BenchAlgorithm::Hybrid},
                                       {Family::Ex34, 1001, BenchAlgorithm::ThreeTerm}};
  for (const auto& r : run_bench(plan, quick())) {
    CHECK(r.diagnostic.find("overflow") != std::string::npos);
    CHECK(matches_closed_form(r) == true);
  }
  const std::vector<BenchCell> zp = {{Family::Ex33, 9, BenchAlgorithm::TwoTerm}};
  const auto r = run_bench(zp, quick()).at(0);
  CHECK(r.diagnostic.find("zero pivot") != std::string::npos);
  CHECK(matches_closed_form(r) == true);
}

TEST_CASE("closed-form check detects a wrong record") {
  BenchRecord r;
  r.family = Family::Ex32;
  r.n = 9;
  r.result_sign = 1;
  r.result_logmag = std::log(10.0);
  CHECK(matches_closed_form(r) == true);
  r.result_logmag = std::log(10.0) * (1 + 1e-6);
  CHECK(matches_closed_form(r) == false);
  r.result_logmag = std::log(10.0);
  r.result_sign = -1;
  CHECK(matches_closed_form(r) == false);
}

TEST_CASE("CSV layout") {
  const std::vector<BenchCell> one = {{Family::Ex32, 9, BenchAlgorithm::Hybrid}};
  const auto recs = run_bench(one, quick());
  const auto lines = lines_of(to_csv(recs));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "family,n,algorithm,trials,median_seconds,result_sign,result_logmag");
  CHECK(lines[1].rfind("ex32,9,hybrid,3,", 0) == 0);
  CHECK(lines[1].find(",1," + format_scalar(std::log(10.0))) != std::string::npos);

  CHECK_THROWS_AS(to_csv(std::vector<BenchRecord>{}), std::invalid_argument);
  CHECK_THROWS(emit_csv(std::vector<BenchRecord>{}, "unused.csv"));
}

TEST_CASE("table-style plan writes nine sorted rows") {
  const std::vector<Family> fams = {Family::Ex33};
  const std::vector<std::size_t> sizes = {300, 100, 200};
  const std::vector<BenchAlgorithm> algs = {BenchAlgorithm::Hybrid, BenchAlgorithm::ThreeTerm,
                                            BenchAlgorithm::Detgtri};
  const auto recs = run_bench(make_plan(fams, sizes, algs), quick());

  const auto path = std::filesystem::temp_directory_path() / "tridet_bench_test.csv";
  emit_csv(recs, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::filesystem::remove(path);
  const auto lines = lines_of(buf.str());
  REQUIRE(lines.size() == 10);
  CHECK(lines[1].rfind("ex33,100,detgtri,", 0) == 0);
  CHECK(lines[2].rfind("ex33,100,three_term,", 0) == 0);
  CHECK(lines[3].rfind("ex33,100,hybrid,", 0) == 0);
  CHECK(lines[9].rfind("ex33,300,hybrid,", 0) == 0);

  CHECK_THROWS_AS(emit_csv(recs, "/nonexistent-dir/x.csv"), std::runtime_error);
}

TEST_CASE("repetition calibration keeps medians per single run") {
  const std::vector<BenchCell> plan = {{Family::Ex32, 1000, BenchAlgorithm::Hybrid}};
  BenchOptions o = quick();
  o.min_run_seconds = 0.002;
  const auto r = run_bench(plan, o).at(0);
  CHECK(r.median_seconds > 0.0);
  CHECK(r.median_seconds < 0.002);
}
