#include "tridet/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <tuple>

#include "tridet/exact.hpp"
#include "tridet/matrix_io.hpp"
#include "tridet/oracle.hpp"
#include "tridet/recurrences.hpp"
#include "tridet/symbolic.hpp"

namespace tridet {
namespace {

using Clock = std::chrono::steady_clock;

struct Evaluation {
  SignedLogValue value;
  std::string diagnostic;
};

Evaluation evaluate(const TridiagonalMatrix& m, BenchAlgorithm alg) {
  try {
    switch (alg) {
      case BenchAlgorithm::Detgtri:
        return {signed_log(det_detgtri(m).value), {}};
      case BenchAlgorithm::TwoTerm:
        return {det_two_term(m).signed_log(), {}};
      case BenchAlgorithm::ThreeTerm:
        return {det_three_term(m).signed_log(), {}};
      case BenchAlgorithm::Hybrid:
        return {det_hybrid(m).signed_log(), {}};
      case BenchAlgorithm::HybridScaled:
        return {det_hybrid_scaled(m).signed_log(), {}};
      case BenchAlgorithm::Dense: {
        const double v = dense_det_float(to_dense(m));
        if (!std::isfinite(v)) throw OverflowError("dense elimination overflowed");
        return {SignedLogValue::from_scalar(v), {}};
      }
    }
  } catch (const OverflowError& e) {
    return {SignedLogValue::zero(), std::string("overflow: ") + e.what()};
  } catch (const ZeroPivotError& e) {
    return {SignedLogValue::zero(), std::string("zero pivot: ") + e.what()};
  }
  throw std::invalid_argument("unknown benchmark algorithm");
}

double time_run(const TridiagonalMatrix& m, BenchAlgorithm alg, std::size_t reps, Evaluation& out) {
  const auto start = Clock::now();
  for (std::size_t r = 0; r < reps; ++r) out = evaluate(m, alg);
  const auto stop = Clock::now();
  return std::chrono::duration<double>(stop - start).count() / static_cast<double>(reps);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::string_view to_string(BenchAlgorithm alg) {
  switch (alg) {
    case BenchAlgorithm::Detgtri:
      return "detgtri";
    case BenchAlgorithm::TwoTerm:
      return "two_term";
    case BenchAlgorithm::ThreeTerm:
      return "three_term";
    case BenchAlgorithm::Hybrid:
      return "hybrid";
    case BenchAlgorithm::HybridScaled:
      return "hybrid_scaled";
    case BenchAlgorithm::Dense:
      return "dense";
  }
  return "unknown";
}

std::optional<BenchAlgorithm> parse_bench_algorithm(std::string_view name) {
  for (auto alg : {BenchAlgorithm::Detgtri, BenchAlgorithm::TwoTerm, BenchAlgorithm::ThreeTerm,
                   BenchAlgorithm::Hybrid, BenchAlgorithm::HybridScaled, BenchAlgorithm::Dense}) {
    if (name == to_string(alg)) return alg;
  }
  return std::nullopt;
}

std::vector<BenchCell> make_plan(std::span<const Family> families, std::span<const std::size_t> sizes,
                                 std::span<const BenchAlgorithm> algorithms) {
  std::vector<BenchCell> plan;
  for (Family f : families) {
    for (std::size_t n : sizes) {
      for (BenchAlgorithm a : algorithms) plan.push_back({f, n, a});
    }
  }
  return plan;
}

std::vector<BenchRecord> run_bench(std::span<const BenchCell> plan, const BenchOptions& options) {
  if (options.trials < 3) throw std::invalid_argument("benchmark needs at least 3 trials");
  if (options.warmup < 0) throw std::invalid_argument("warmup must be nonnegative");

  std::vector<BenchRecord> records;
  records.reserve(plan.size());
  for (const BenchCell& cell : plan) {
    const TridiagonalMatrix m = gen_example(cell.family, cell.n);

    Evaluation result;
    std::size_t reps = 1;
    for (int w = 0; w < options.warmup; ++w) time_run(m, cell.algorithm, 1, result);
    if (options.min_run_seconds > 0.0) {
      const double once = time_run(m, cell.algorithm, 1, result);
      if (once < options.min_run_seconds) {
        reps = static_cast<std::size_t>(std::ceil(options.min_run_seconds / std::max(once, 1e-9)));
      }
    }

    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(options.trials));
    for (int t = 0; t < options.trials; ++t) times.push_back(time_run(m, cell.algorithm, reps, result));

    BenchRecord rec;
    rec.family = cell.family;
    rec.n = cell.n;
    rec.algorithm = cell.algorithm;
    rec.trials = options.trials;
    rec.median_seconds = median(std::move(times));
    rec.diagnostic = result.diagnostic;
    if (!result.diagnostic.empty()) {
      result.value = det_hybrid_scaled(m).signed_log();
      rec.diagnostic += "; result from hybrid_scaled";
    }
    rec.result_sign = result.value.sign();
    rec.result_logmag = result.value.logmag();
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<BenchRecord> sorted_records(std::span<const BenchRecord> records) {
  std::vector<BenchRecord> out(records.begin(), records.end());
  std::stable_sort(out.begin(), out.end(), [](const BenchRecord& x, const BenchRecord& y) {
    return std::tie(x.family, x.n, x.algorithm) < std::tie(y.family, y.n, y.algorithm);
  });
  return out;
}

std::string to_csv(std::span<const BenchRecord> records) {
  if (records.empty()) throw std::invalid_argument("no benchmark records to write");
  std::string out = "family,n,algorithm,trials,median_seconds,result_sign,result_logmag\n";
  for (const auto& r : sorted_records(records)) {
    out += std::string(to_string(r.family)) + ',' + std::to_string(r.n) + ',' +
           std::string(to_string(r.algorithm)) + ',' + std::to_string(r.trials) + ',' +
           format_scalar(r.median_seconds) + ',' + std::to_string(r.result_sign) + ',' +
           format_scalar(r.result_logmag) + '\n';
  }
  return out;
}

void emit_csv(std::span<const BenchRecord> records, const std::filesystem::path& path) {
  const std::string text = to_csv(records);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::optional<bool> matches_closed_form(const BenchRecord& record, double rel_tol) {
  if (!has_closed_form(record.family)) return std::nullopt;
  const SignedLogValue expected = signed_log(closed_form_det(record.family, record.n));
  if (expected.sign() != record.result_sign) return false;
  if (expected.sign() == 0) return true;
  const double scale = std::max(1.0, std::fabs(expected.logmag()));
  return std::fabs(expected.logmag() - record.result_logmag) <= rel_tol * scale;
}

}  // namespace tridet
