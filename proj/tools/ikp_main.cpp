// Command-line front end: generate instances, solve them with a chosen
// algorithm, and run ratio-verification benchmarks.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "ikp/continuous.hpp"
#include "ikp/discrete.hpp"
#include "ikp/generator.hpp"
#include "ikp/model.hpp"
#include "ikp/multilevel.hpp"
#include "ikp/oracle.hpp"
#include "ikp/report.hpp"

namespace {

constexpr int kExitVariantMismatch = 2;
constexpr int kExitParseError = 3;

using Clock = std::chrono::steady_clock;

long long oracle_limit() {
  if (const char* env = std::getenv("IK_ORACLE_LIMIT")) return std::atoll(env);
  return ikp::oracle::kDefaultStateLimit;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ikp::ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  out << body;
}

struct VariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_variant(const std::string& algo, const ikp::Instance& inst) {
  using ikp::ImprovementMode;
  bool discrete = inst.mode == ImprovementMode::Discrete;
  if (algo == "cs-ptas") {
    if (discrete) throw VariantError("cs-ptas requires a continuous-mode instance");
    return;
  }
  if (algo == "oracle") return;
  if (!discrete) throw VariantError(algo + " requires a discrete-mode instance");
  if ((algo == "six" || algo == "ckp3" || algo == "lp2") && !inst.single_level())
    throw VariantError(algo + " requires a single-level instance");
  if ((algo == "ckp3" || algo == "lp2") && !inst.unit_costs())
    throw VariantError(algo + " requires unit improvement costs");
}

// Runs one algorithm on a preprocessed instance. `eps` applies to the two
// approximation schemes only.
ikp::RunReport run_algorithm(const std::string& algo, const ikp::Instance& inst,
                             const ikp::Rational& eps) {
  using namespace ikp;
  if (algo == "oracle") {
    auto start = Clock::now();
    oracle::Result res = inst.mode == ImprovementMode::Discrete
                             ? oracle::exact_discrete(inst, oracle_limit())
                             : oracle::exact_continuous(inst, oracle_limit());
    RunReport report;
    report.algorithm = "oracle";
    report.bound = 1;
    report.solution = std::move(res.solution);
    report.objective = res.value;
    report.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return report;
  }
  if (algo == "dp") return multilevel::dp_exact(inst);
  if (algo == "ptas") return multilevel::ptas_scaled(inst, eps);
  if (algo == "lp3") return multilevel::lp_three_approx(inst);
  if (algo == "six") return discrete::six_approx(inst);
  if (algo == "ckp3") return discrete::ckp_three_approx(inst);
  if (algo == "lp2") return discrete::lp_two_approx(inst);
  if (algo == "cs-ptas") {
    auto start = Clock::now();
    Solution sol = continuous::ptas_ikcs(inst, eps);
    RunReport report;
    report.algorithm = "cs-ptas";
    report.bound = 1 - eps;
    report.objective = evaluate(inst, sol).total_profit;
    report.solution = std::move(sol);
    report.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return report;
  }
  if (algo == "fixture-bad") {
    // Deliberately broken solver used to self-test the bench harness: claims
    // exactness but packs nothing.
    RunReport report;
    report.algorithm = "fixture-bad";
    report.bound = 1;
    report.solution = Solution::empty(inst.size());
    report.objective = 0;
    return report;
  }
  throw VariantError("unknown algorithm: " + algo);
}

int cmd_solve(const std::string& path, const std::string& algo, const std::string& eps_str,
              const std::string& out) {
  using namespace ikp;
  Instance inst;
  try {
    inst = parse_instance(read_file(path));
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }
  auto violations = validate(inst);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "invalid instance: " << v.message << "\n";
    return kExitVariantMismatch;
  }
  try {
    check_variant(algo, inst);
    Rational eps = parse_rational(eps_str);
    PreprocessResult pre = preprocess(inst);
    RunReport report = run_algorithm(algo, pre.instance, eps);
    report.instance_id = path;
    report.solution = lift_solution(pre, inst.size(), report.solution);
    write_output(out, serialize_report(report));
    return 0;
  } catch (const VariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVariantMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVariantMismatch;
  } catch (const oracle::LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_gen(int n, int levels, std::uint64_t seed, const std::string& family,
            const std::string& mode, const std::string& out) {
  using namespace ikp;
  GenConfig cfg;
  cfg.n = n;
  cfg.max_levels = levels;
  cfg.seed = seed;
  try {
    cfg.family = parse_family(family);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVariantMismatch;
  }
  cfg.mode = mode == "continuous" ? ImprovementMode::Continuous : ImprovementMode::Discrete;
  write_output(out, serialize_instance(generate(cfg)));
  return 0;
}

int cmd_bench(const std::string& family_name, int count, const std::string& algos_csv,
              const std::string& eps_str, int max_n, int levels, const std::string& csv_path) {
  using namespace ikp;
  Family family;
  try {
    family = parse_family(family_name);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVariantMismatch;
  }
  Rational eps = parse_rational(eps_str);

  std::vector<std::string> algos;
  {
    std::stringstream ss(algos_csv);
    std::string a;
    while (std::getline(ss, a, ','))
      if (!a.empty()) algos.push_back(a);
  }
  bool continuous_mode = false;
  for (const auto& a : algos) continuous_mode |= a == "cs-ptas";
  for (const auto& a : algos) {
    if (continuous_mode && a != "cs-ptas" && a != "oracle") {
      std::cerr << "error: cannot mix " << a << " with continuous-mode algorithms\n";
      return kExitVariantMismatch;
    }
    if ((a == "ckp3" || a == "lp2") && family != Family::UnitCost) {
      std::cerr << "error: " << a << " requires --family unit-cost\n";
      return kExitVariantMismatch;
    }
  }

  std::ostringstream csv;
  csv << "seed,algo,n,value,oracle,ratio,ms\n";
  bool violation = false;
  std::map<std::string, Rational> worst_ratio;

  for (int seed = 0; seed < count; ++seed) {
    GenConfig cfg;
    cfg.n = 1 + seed % std::max(1, max_n);
    cfg.max_levels = levels;
    cfg.family = family;
    cfg.mode = continuous_mode ? ImprovementMode::Continuous : ImprovementMode::Discrete;
    cfg.seed = static_cast<std::uint64_t>(seed);
    Instance inst = generate(cfg);
    PreprocessResult pre = preprocess(inst);

    std::optional<Rational> oracle_value;
    try {
      oracle::Result res = continuous_mode
                               ? oracle::exact_continuous(pre.instance, oracle_limit())
                               : oracle::exact_discrete(pre.instance, oracle_limit());
      oracle_value = res.value;
    } catch (const oracle::LimitError&) {
    }

    for (const auto& algo : algos) {
      RunReport report = run_algorithm(algo, pre.instance, eps);
      csv << seed << "," << algo << "," << inst.size() << "," << format_rational(report.objective)
          << ",";
      if (oracle_value) {
        csv << format_rational(*oracle_value) << ",";
        if (report.objective > *oracle_value || report.objective < report.bound * *oracle_value) {
          violation = true;
          std::cerr << "bound violation: seed " << seed << " algo " << algo << " value "
                    << format_rational(report.objective) << " oracle "
                    << format_rational(*oracle_value) << " bound "
                    << format_rational(report.bound) << "\n";
        }
        if (*oracle_value > 0) {
          Rational ratio = report.objective / *oracle_value;
          csv << approx(ratio);
          auto it = worst_ratio.find(algo);
          if (it == worst_ratio.end() || ratio < it->second) worst_ratio[algo] = ratio;
        } else {
          csv << "1";
        }
      } else {
        csv << "no-oracle,";
      }
      csv << "," << report.wall_ms << "\n";
    }
  }
  for (const auto& [algo, ratio] : worst_ratio)
    csv << "summary," << algo << ",,,," << approx(ratio) << ",\n";

  write_output(csv_path, csv.str());
  return violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Improvable knapsack solvers: weight improvements paid from a separate budget"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file with one algorithm");
  std::string instance_path, algo, eps = "0.1", out;
  solve_cmd->add_option("instance", instance_path, "Instance JSON file")->required();
  solve_cmd->add_option("--algo", algo, "oracle|dp|ptas|six|ckp3|lp2|lp3|cs-ptas")->required();
  solve_cmd->add_option("--eps", eps, "Epsilon for ptas / cs-ptas (exact decimal)");
  solve_cmd->add_option("--out", out, "Write the run report here instead of stdout");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  int n = 8, levels = 1;
  std::uint64_t seed = 0;
  std::string family = "uniform", mode = "discrete", gen_out;
  gen_cmd->add_option("--n", n, "Number of items");
  gen_cmd->add_option("--levels", levels, "Maximum improvement levels per item");
  gen_cmd->add_option("--seed", seed, "RNG seed (same seed, byte-identical file)");
  gen_cmd->add_option("--family", family, "uniform|correlated|unit-cost");
  gen_cmd->add_option("--mode", mode, "discrete|continuous");
  gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "Run algorithms against the oracle over seeds");
  std::string bench_family = "uniform", bench_algos = "dp", bench_eps = "0.1", csv_path;
  int count = 100, max_n = 8, bench_levels = 1;
  bench_cmd->add_option("--family", bench_family, "uniform|correlated|unit-cost");
  bench_cmd->add_option("--count", count, "Number of seeds");
  bench_cmd->add_option("--algos", bench_algos, "Comma-separated algorithm list");
  bench_cmd->add_option("--eps", bench_eps, "Epsilon for the approximation schemes");
  bench_cmd->add_option("--max-n", max_n, "Largest instance size");
  bench_cmd->add_option("--levels", bench_levels, "Maximum improvement levels per item");
  bench_cmd->add_option("--csv", csv_path, "CSV output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return cmd_solve(instance_path, algo, eps, out);
    if (gen_cmd->parsed()) return cmd_gen(n, levels, seed, family, mode, gen_out);
    if (bench_cmd->parsed())
      return cmd_bench(bench_family, count, bench_algos, bench_eps, max_n, bench_levels, csv_path);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
