// tridet: linear-time tridiagonal determinants from the command line.
//
// Exit codes:
//   0  success
//   1  check-pd: matrix is not positive definite
//   2  usage error, unparsable input, invalid matrix, non-symmetric input
//   3  overflow in plain mode (retry with --mode scaled)
//   4  a method that divides by pivots met a vanishing pivot
//   5  I/O failure or internal error

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tridet/tridet.hpp"

namespace {

using namespace tridet;

enum Exit : int {
  kOk = 0,
  kNotPositiveDefinite = 1,
  kUsage = 2,
  kOverflow = 3,
  kZeroPivot = 4,
  kInternal = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string input;
  std::string family;
  std::size_t n = 0;
  double zero_tol = 0.0;
  bool relative_zero = false;
  std::string mode = "plain";
};

TridiagonalMatrix load_matrix(const InputOptions& opt) {
  if (!opt.input.empty()) {
    if (!opt.family.empty()) throw UsageError("use either --input or --family/--n, not both");
    if (opt.input == "-") return read_matrix(std::cin);
    std::ifstream in(opt.input);
    if (!in) throw UsageError("cannot open input file '" + opt.input + "'");
    return read_matrix(in);
  }
  if (opt.family.empty()) throw UsageError("no matrix given: pass --input FILE or --family/--n");
  const auto family = parse_family(opt.family);
  if (!family) throw UsageError("unknown family '" + opt.family + "'");
  std::size_t n = opt.n;
  if (n == 0 && *family == Family::Ex31) n = 4;
  if (n == 0) throw UsageError("--n is required with --family");
  try {
    return gen_example(*family, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ZeroTest zero_test(const InputOptions& opt) {
  try {
    return opt.relative_zero ? ZeroTest::relative(opt.zero_tol == 0.0 ? kDefaultRelativeZeroTol
                                                                        : opt.zero_tol)
                             : ZeroTest::absolute(opt.zero_tol);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void print_info(const DetResult& r) {
  std::cout << "algorithm=" << to_string(r.algorithm);
  if (r.pivot_break) std::cout << " pivot_break=" << *r.pivot_break;
  std::cout << '\n';
}

int cmd_det(const InputOptions& opt, const std::string& alg) {
  const TridiagonalMatrix m = load_matrix(opt);
  const ZeroTest zt = zero_test(opt);
  const bool scaled = opt.mode == "scaled";
  if (!scaled && opt.mode != "plain") throw UsageError("--mode must be plain or scaled");

  if (alg == "detgtri") {
    const DetgtriResult r = det_detgtri(m);
    if (scaled) {
      std::cout << to_string(signed_log(r.value)) << '\n';
    } else {
      std::cout << format_scalar(r.scalar()) << '\n';
    }
    std::cout << "algorithm=detgtri exact=" << to_string(r.value)
              << " substitutions=" << r.substitutions << '\n';
    return kOk;
  }

  DetResult r;
  if (alg == "hybrid") {
    r = scaled ? det_hybrid_scaled(m, zt) : det_hybrid(m, zt);
  } else if (alg == "two_term" || alg == "three_term") {
    if (scaled) throw UsageError("--mode scaled is available for hybrid and detgtri");
    r = alg == "two_term" ? det_two_term(m) : det_three_term(m);
  } else {
    throw UsageError("unknown algorithm '" + alg + "'");
  }
  if (scaled) {
    std::cout << to_string(r.signed_log()) << '\n';
  } else {
    std::cout << format_scalar(r.scalar()) << '\n';
  }
  print_info(r);
  return kOk;
}

int cmd_lu(const InputOptions& opt, const std::string& convention) {
  LuConvention conv;
  if (convention == "doolittle") {
    conv = LuConvention::Doolittle;
  } else if (convention == "crout") {
    conv = LuConvention::Crout;
  } else {
    throw UsageError("--convention must be doolittle or crout");
  }
  std::cout << format_lu(lu_factorize(load_matrix(opt), conv));
  return kOk;
}

int cmd_check_pd(const InputOptions& opt) {
  const PdVerdict v = is_positive_definite(load_matrix(opt));
  if (v.positive_definite) {
    std::cout << "positive-definite\nc";
    for (double c : v.pivots) std::cout << ' ' << format_scalar(c);
    std::cout << '\n';
    return kOk;
  }
  std::cout << "not-positive-definite index=" << *v.failing_index << '\n';
  return kNotPositiveDefinite;
}

int cmd_gen(const InputOptions& opt) {
  if (!opt.input.empty()) throw UsageError("gen takes --family and --n, not --input");
  std::cout << format_matrix(load_matrix(opt));
  return kOk;
}

int cmd_oracle(const InputOptions& opt, bool exact) {
  const TridiagonalMatrix m = load_matrix(opt);
  try {
    if (exact) {
      std::cout << to_string(dense_det_exact(to_rational(to_dense(m, kDefaultExactDenseLimit))))
                << '\n';
    } else {
      std::cout << format_scalar(dense_det_float(to_dense(m))) << '\n';
    }
  } catch (const DimensionError& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

struct BenchArgs {
  std::vector<std::string> families{"ex33"};
  std::vector<std::size_t> sizes;
  std::vector<std::string> algs{"hybrid", "three_term", "detgtri"};
  int trials = 5;
  int warmup = 2;
  double min_run_seconds = 0.0;
  std::string csv;
};

int cmd_bench(const BenchArgs& args) {
  std::vector<Family> families;
  for (const auto& f : args.families) {
    auto fam = parse_family(f);
    if (!fam) throw UsageError("unknown family '" + f + "'");
    families.push_back(*fam);
  }
  std::vector<BenchAlgorithm> algs;
  for (const auto& a : args.algs) {
    auto alg = parse_bench_algorithm(a);
    if (!alg) throw UsageError("unknown algorithm '" + a + "'");
    algs.push_back(*alg);
  }
  if (args.sizes.empty()) throw UsageError("--n needs at least one size");

  std::vector<BenchRecord> records;
  try {
    const auto plan = make_plan(families, args.sizes, algs);
    BenchOptions options;
    options.trials = args.trials;
    options.warmup = args.warmup;
    options.min_run_seconds = args.min_run_seconds;
    records = run_bench(plan, options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::cout << "family n algorithm trials median_seconds sign logmag closed_form\n";
  for (const auto& r : sorted_records(records)) {
    const auto ok = matches_closed_form(r);
    std::cout << to_string(r.family) << ' ' << r.n << ' ' << to_string(r.algorithm) << ' '
              << r.trials << ' ' << format_scalar(r.median_seconds) << ' ' << r.result_sign << ' '
              << format_scalar(r.result_logmag) << ' ' << (ok ? (*ok ? "ok" : "MISMATCH") : "-")
              << '\n';
    if (!r.diagnostic.empty()) std::cout << "# " << r.diagnostic << '\n';
  }
  if (!args.csv.empty()) emit_csv(records, args.csv);
  return kOk;
}

void add_input_options(CLI::App* sub, InputOptions& opt) {
  sub->add_option("--input,-i", opt.input, "Matrix text file, or - for standard input");
  sub->add_option("--family", opt.family, "Example family ex31..ex35");
  sub->add_option("--n", opt.n, "Matrix order for --family");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear-time determinants of tridiagonal matrices"};
  app.require_subcommand(1);

  InputOptions opt;
  add_input_options(&app, opt);
  app.add_option("--zero-tol", opt.zero_tol, "Pivot zero tolerance (0 = exact comparison)");
  app.add_flag("--relative", opt.relative_zero, "Interpret --zero-tol relative to the pivot's terms");
  app.add_option("--mode", opt.mode, "plain or scaled (sign and log-magnitude)");

  std::string alg = "hybrid";
  auto* det = app.add_subcommand("det", "Evaluate the determinant");
  det->fallthrough();
  det->add_option("--alg", alg, "hybrid, two_term, three_term or detgtri");

  std::string convention = "doolittle";
  auto* lu = app.add_subcommand("lu", "Doolittle or Crout LU factors from the pivot vector");
  lu->fallthrough();
  lu->add_option("--convention", convention, "doolittle or crout");

  auto* pd = app.add_subcommand("check-pd", "Positive-definiteness of a symmetric matrix");
  pd->fallthrough();

  auto* gen = app.add_subcommand("gen", "Write an example family member in the matrix text format");
  gen->fallthrough();

  bool exact = false;
  auto* oracle = app.add_subcommand("oracle", "Dense elimination determinant");
  oracle->fallthrough();
  oracle->add_flag("--exact", exact, "Exact rational elimination instead of floating point");

  BenchArgs bargs;
  auto* bench = app.add_subcommand("bench", "Time the kernels on example families");
  bench->add_option("--family", bargs.families, "Families, comma separated")->delimiter(',');
  bench->add_option("--n", bargs.sizes, "Orders, comma separated")->delimiter(',')->required();
  bench->add_option("--algs", bargs.algs,
                    "detgtri, two_term, three_term, hybrid, hybrid_scaled, dense")
      ->delimiter(',');
  bench->add_option("--trials", bargs.trials, "Timed runs per cell (>= 3)");
  bench->add_option("--warmup", bargs.warmup, "Discarded runs per cell");
  bench->add_option("--min-run-seconds", bargs.min_run_seconds,
                    "Repeat the kernel within one run until it lasts this long");
  bench->add_option("--csv", bargs.csv, "Write records to this CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*det) return cmd_det(opt, alg);
    if (*lu) return cmd_lu(opt, convention);
    if (*pd) return cmd_check_pd(opt);
    if (*gen) return cmd_gen(opt);
    if (*oracle) return cmd_oracle(opt, exact);
    if (*bench) return cmd_bench(bargs);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotSymmetricError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\nhint: rerun with --mode scaled\n";
    return kOverflow;
  } catch (const ZeroPivotError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kZeroPivot;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
