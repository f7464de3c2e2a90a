#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tridet/core.hpp"
#include "tridet/generators.hpp"

namespace tridet {

/// `Dense` is the O(n^3) elimination oracle, standing in for a general dense
/// determinant routine.
enum class BenchAlgorithm { Detgtri, TwoTerm, ThreeTerm, Hybrid, HybridScaled, Dense };

std::string_view to_string(BenchAlgorithm alg);
std::optional<BenchAlgorithm> parse_bench_algorithm(std::string_view name);

struct BenchCell {
  Family family;
  std::size_t n;
  BenchAlgorithm algorithm;
};

struct BenchRecord {
  Family family = Family::Ex33;
  std::size_t n = 0;
  BenchAlgorithm algorithm = BenchAlgorithm::Hybrid;
  int trials = 0;
  double median_seconds = 0.0;
  double result_logmag = 0.0;
  int result_sign = 0;
  /// Set when the plain kernel could not produce the value (overflow or a
  /// vanishing pivot); the result then comes from the scaled hybrid.
  std::string diagnostic;
};

struct BenchOptions {
  int trials = 5;
  int warmup = 2;
  /// When positive, each timed run repeats the kernel until it spans at
  /// least this long and reports the per-call time.
  double min_run_seconds = 0.0;
};

/// Cartesian product families x sizes x algorithms, in that nesting order.
std::vector<BenchCell> make_plan(std::span<const Family> families, std::span<const std::size_t> sizes,
                                 std::span<const BenchAlgorithm> algorithms);

/// Times every cell serially. Matrices are generated outside the timed
/// region. Requires trials >= 3 and warmup >= 0.
std::vector<BenchRecord> run_bench(std::span<const BenchCell> plan, const BenchOptions& options);

/// Records sorted by (family, n, algorithm).
std::vector<BenchRecord> sorted_records(std::span<const BenchRecord> records);

/// Header plus one row per record, sorted. Throws std::invalid_argument on an
/// empty input.
std::string to_csv(std::span<const BenchRecord> records);
/// Writes to_csv(records); throws std::runtime_error on I/O failure.
void emit_csv(std::span<const BenchRecord> records, const std::filesystem::path& path);

/// Compares a record's result with the family's closed form (exact sign,
/// logmag within `rel_tol` relative). Empty when the family has none.
std::optional<bool> matches_closed_form(const BenchRecord& record, double rel_tol = 1e-9);

}  // namespace tridet
