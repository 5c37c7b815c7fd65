// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails. argv[1] is the path to the command-line binary for the end-to-end
// check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ikp/continuous.hpp"
#include "ikp/discrete.hpp"
#include "ikp/generator.hpp"
#include "ikp/model.hpp"
#include "ikp/multilevel.hpp"
#include "ikp/oracle.hpp"
#include "ikp/ratlp.hpp"

using namespace ikp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
  std::cout << "criterion " << criterion << " (" << what << "): " << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!pass) ++failures;
}

bool guarded(const std::function<bool()>& body, std::string& err) {
  try {
    return body();
  } catch (const std::exception& e) {
    err = e.what();
    return false;
  }
}

GenConfig small_config(std::uint64_t seed, int n, int levels, Family family, ImprovementMode mode) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.n = n;
  cfg.max_levels = levels;
  cfg.family = family;
  cfg.mode = mode;
  cfg.weight_max = 25;
  cfg.profit_max = 20;
  cfg.cost_max = 4;
  return cfg;
}

// --- criterion 1: the DP agrees with the exhaustive oracle -----------------

void criterion_dp_exact() {
  auto start = Clock::now();
  std::string err;
  bool ok = guarded(
      [&] {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
          Instance inst = generate(
              small_config(seed, 1 + static_cast<int>(seed % 8), 2, Family::Uniform,
                           ImprovementMode::Discrete));
          if (multilevel::dp_exact(inst).objective != oracle::exact_discrete(inst).value)
            return false;
        }
        return true;
      },
      err);
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream detail;
  detail << "1000 seeds, " << secs << " s" << (err.empty() ? "" : "; " + err);
  report(1, "dp matches oracle on 1000 random instances in under 60 s", ok && secs < 60,
         detail.str());
}

// --- criterion 2: profit-scaling scheme meets (1 - eps) --------------------

void criterion_ptas_scaled() {
  std::string err;
  bool ok = guarded(
      [&] {
        for (const Rational& eps : {Rational(1, 10), Rational(1, 2)}) {
          for (std::uint64_t seed = 0; seed < 300; ++seed) {
            Instance inst = generate(
                small_config(seed, 1 + static_cast<int>(seed % 7), 2, Family::Uniform,
                             ImprovementMode::Discrete));
            Rational opt = multilevel::dp_exact(inst).objective;
            Rational got = multilevel::ptas_scaled(inst, eps).objective;
            if (got < (1 - eps) * opt || got > opt) return false;
          }
        }
        return true;
      },
      err);
  report(2, "profit-scaling scheme within (1 - eps) of the DP, eps in {0.1, 0.5}", ok, err);
}

// --- criterion 3: continuous scheme meets (1 - eps), LP census holds -------

void criterion_ptas_continuous() {
  std::string err;
  bool ok = guarded(
      [&] {
        for (const Rational& eps : {Rational(1, 10), Rational(3, 10)}) {
          for (std::uint64_t seed = 0; seed < 300; ++seed) {
            Instance inst = generate(
                small_config(seed, 1 + static_cast<int>(seed % 12), 1, Family::Uniform,
                             ImprovementMode::Continuous));
            Rational opt = oracle::exact_continuous(inst).value;
            // ptas_ikcs itself raises std::logic_error if any restricted LP
            // ever shows more than two fractional variables.
            Solution sol = continuous::ptas_ikcs(inst, eps);
            Rational got = evaluate(inst, sol).total_profit;
            if (got < (1 - eps) * opt || got > opt) return false;
          }
        }
        return true;
      },
      err);
  report(3, "continuous scheme within (1 - eps) of the oracle, eps in {0.1, 0.3}", ok, err);
}

// --- criterion 4: approximation ratios hold over 500 seeds each ------------

void criterion_ratios() {
  struct Case {
    const char* name;
    Family family;
    int max_n;
    int levels;
    Rational bound;
    std::function<RunReport(const Instance&)> run;
  };
  std::vector<Case> cases = {
      {"ckp3", Family::UnitCost, 10, 1, Rational(1, 3), discrete::ckp_three_approx},
      {"lp2", Family::UnitCost, 10, 1, Rational(1, 2), discrete::lp_two_approx},
      {"six", Family::Uniform, 10, 1, Rational(1, 6), discrete::six_approx},
      {"lp3", Family::Uniform, 8, 3, Rational(1, 3), multilevel::lp_three_approx},
  };
  std::string err;
  std::ostringstream detail;
  bool ok = guarded(
      [&] {
        for (const Case& c : cases) {
          Rational worst = 1;
          for (std::uint64_t seed = 0; seed < 500; ++seed) {
            Instance inst = generate(small_config(seed, 1 + static_cast<int>(seed % c.max_n),
                                                  c.levels, c.family, ImprovementMode::Discrete));
            Instance pre = preprocess(inst).instance;
            Rational opt = oracle::exact_discrete(pre).value;
            RunReport r = c.run(pre);
            if (!evaluate(pre, r.solution).feasible) return false;
            if (r.objective > opt || r.objective < c.bound * opt) return false;
            if (opt > 0 && r.objective / opt < worst) worst = r.objective / opt;
          }
          detail << c.name << " worst " << format_rational(worst) << "; ";
        }
        return true;
      },
      err);
  report(4, "ratio bounds ckp3>=1/3, lp2>=1/2, six>=1/6, lp3>=1/3 over 500 seeds each", ok,
         detail.str() + err);
}

// --- criterion 5: basic-solution structure census --------------------------

void criterion_census() {
  std::string err;
  bool ok = guarded(
      [&] {
        for (std::uint64_t seed = 0; seed < 400; ++seed) {
          Instance unit = preprocess(generate(small_config(
                                         seed, 1 + static_cast<int>(seed % 10), 1, Family::UnitCost,
                                         ImprovementMode::Discrete)))
                              .instance;
          RunReport two = discrete::lp_two_approx(unit);
          if (two.diag.non_integral_items < 0 || two.diag.non_integral_items > 2) return false;
          RunReport three = discrete::ckp_three_approx(unit);
          if (three.diag.fractional_vars > 2 || !three.diag.pair_lemma_holds) return false;

          Instance multi = preprocess(generate(small_config(
                                          seed, 1 + static_cast<int>(seed % 8), 3, Family::Uniform,
                                          ImprovementMode::Discrete)))
                               .instance;
          if (multilevel::lp_three_approx(multi).diag.non_integral_items > 2) return false;
        }
        return true;
      },
      err);
  report(5, "LP census: at most two non-integral items, fractional-pair lemma holds", ok, err);
}

// --- criterion 6: greedy improvement equals the LP optimum -----------------

void criterion_greedy_vs_lp() {
  std::string err;
  bool ok = guarded(
      [&] {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 500; ++trial) {
          Instance inst = generate(
              small_config(static_cast<std::uint64_t>(trial), 1 + static_cast<int>(rng() % 9), 1,
                           Family::Uniform, ImprovementMode::Continuous));
          std::vector<int> packed(inst.items.size());
          for (auto& p : packed) p = static_cast<int>(rng() % 2);
          Rational budget = Rational(static_cast<long long>(rng() % 30)) / 2;

          auto g = continuous::greedy_improvement(inst, packed, budget);

          LinearProgram lp;
          LinearProgram::Row cost_row;
          for (size_t i = 0; i < inst.items.size(); ++i) {
            if (!packed[i]) continue;
            lp.add_variable(inst.items[i].reduction(), 0, Rational(1));
            cost_row.coeffs.push_back(inst.items[i].improvement_cost());
          }
          cost_row.rhs = budget;
          lp.rows = {cost_row};
          BasicLpSolution sol = solve(lp);
          if (sol.status != LpStatus::Optimal) return false;
          if (g.reduction != sol.objective) return false;
        }
        return true;
      },
      err);
  report(6, "greedy improvement equals the LP optimum on 500 random subproblems", ok, err);
}

// --- criterion 7: degenerate-input sweep over every solver -----------------

void criterion_degenerate() {
  std::string err;
  bool ok = guarded(
      [&] {
        std::vector<Instance> cases;
        {
          Instance empty;
          cases.push_back(empty);  // no items at all
        }
        {
          Instance zero_c;  // C = 0, improvements exist but are unaffordable
          zero_c.knapsack_budget = 5;
          Item a;
          a.profit = 3;
          a.base_weight = 4;
          a.levels.push_back({Rational(1), Rational(2)});
          Item b;
          b.profit = 1;
          b.base_weight = 2;
          zero_c.items = {a, b};
          cases.push_back(zero_c);
        }
        {
          Instance zero_b = cases.back();  // B = 0: only weight-0 forms usable
          zero_b.knapsack_budget = 0;
          zero_b.improvement_budget = 3;
          zero_b.items[0].levels[0].weight = 0;
          cases.push_back(zero_b);
        }
        {
          Instance zero_p = cases[1];  // all profits zero
          for (Item& it : zero_p.items) it.profit = 0;
          cases.push_back(zero_p);
        }
        {
          Instance single;  // one unit-cost item
          single.knapsack_budget = 2;
          single.improvement_budget = 1;
          Item a;
          a.profit = 5;
          a.base_weight = 4;
          a.levels.push_back({Rational(2), Rational(1)});
          single.items = {a};
          cases.push_back(single);
        }

        for (Instance inst : cases) {
          inst.mode = ImprovementMode::Discrete;
          Instance pre = preprocess(inst).instance;
          Rational opt = oracle::exact_discrete(pre).value;
          if (multilevel::dp_exact(pre).objective != opt) return false;
          for (const Rational& eps : {Rational(1, 10), Rational(1, 2)})
            if (multilevel::ptas_scaled(pre, eps).objective < (1 - eps) * opt) return false;
          if (3 * multilevel::lp_three_approx(pre).objective < opt) return false;
          if (pre.single_level()) {
            if (6 * discrete::six_approx(pre).objective < opt) return false;
            if (pre.unit_costs()) {
              if (3 * discrete::ckp_three_approx(pre).objective < opt) return false;
              if (2 * discrete::lp_two_approx(pre).objective < opt) return false;
            }
          }
          Instance cont = inst;
          cont.mode = ImprovementMode::Continuous;
          if (cont.single_level()) {
            Instance cpre = preprocess(cont).instance;
            Rational copt = oracle::exact_continuous(cpre).value;
            Solution s = continuous::ptas_ikcs(cpre, Rational(1, 10));
            Evaluation ev = evaluate(cpre, s);
            if (!ev.feasible || 10 * ev.total_profit < 9 * copt) return false;
          }
        }
        return true;
      },
      err);
  report(7, "degenerate instances (empty, C=0, B=0, zero profits, singleton) on every solver", ok,
         err);
}

// --- criterion 8: end-to-end through the command-line binary ---------------

int run_cmd(const std::string& cmd) { return std::system(cmd.c_str()); }

void criterion_cli(const std::string& cli) {
  auto start = Clock::now();
  std::string err;
  bool ok = guarded(
      [&] {
        const std::string dir = "/tmp/ikp_acceptance";
        if (run_cmd("rm -rf " + dir + " && mkdir -p " + dir) != 0) return false;

        struct Run {
          const char* family;
          const char* mode;
          const char* algo;
        };
        std::vector<Run> runs = {{"uniform", "discrete", "dp"},
                                 {"uniform", "discrete", "lp3"},
                                 {"correlated", "discrete", "ptas"},
                                 {"unit-cost", "discrete", "ckp3"},
                                 {"unit-cost", "discrete", "lp2"},
                                 {"unit-cost", "discrete", "six"},
                                 {"uniform", "continuous", "cs-ptas"}};
        for (const Run& r : runs) {
          std::string inst = dir + "/" + r.family + "_" + r.mode + ".json";
          if (run_cmd(cli + " gen --n 7 --seed 5 --levels 2 --family " + r.family + " --mode " +
                      r.mode + " --out " + inst) != 0)
            return false;
          if (run_cmd(cli + " solve " + inst + " --algo " + r.algo + " --out " + dir +
                      "/report.json") != 0)
            return false;
          if (run_cmd(cli + " solve " + inst + " --algo oracle --out " + dir + "/oracle.json") != 0)
            return false;
        }

        // Determinism of gen: same seed, byte-identical output.
        if (run_cmd(cli + " gen --n 9 --seed 3 --levels 2 --out " + dir + "/a.json") != 0)
          return false;
        if (run_cmd(cli + " gen --n 9 --seed 3 --levels 2 --out " + dir + "/b.json") != 0)
          return false;
        if (run_cmd("cmp -s " + dir + "/a.json " + dir + "/b.json") != 0) return false;

        // Exit-code contract: variant mismatch 2, parse failure 3.
        int rc = run_cmd(cli + " solve " + dir + "/a.json --algo cs-ptas 2>/dev/null");
        if (!WIFEXITED(rc) || WEXITSTATUS(rc) != 2) return false;
        if (run_cmd("printf 'nonsense' > " + dir + "/broken.json") != 0) return false;
        rc = run_cmd(cli + " solve " + dir + "/broken.json --algo dp 2>/dev/null");
        if (!WIFEXITED(rc) || WEXITSTATUS(rc) != 3) return false;

        // Bench over each family exits cleanly and emits the CSV header.
        for (const char* fam : {"uniform", "correlated", "unit-cost"}) {
          std::string algos = std::string(fam) == "unit-cost" ? "dp,ckp3,lp2" : "dp,lp3,ptas";
          std::string csv = dir + "/bench.csv";
          if (run_cmd(cli + " bench --family " + fam + " --count 30 --max-n 6 --levels 2 --algos " +
                      algos + " --csv " + csv) != 0)
            return false;
          if (run_cmd("head -1 " + csv + " | grep -q '^seed,algo,n,value,oracle,ratio,ms$'") != 0)
            return false;
        }

        // The deliberately broken solver must trip the bound check.
        rc = run_cmd(cli + " bench --count 10 --max-n 5 --algos fixture-bad --csv " + dir +
                     "/bad.csv 2>/dev/null");
        if (!WIFEXITED(rc) || WEXITSTATUS(rc) == 0) return false;
        return true;
      },
      err);
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  report(8, "end-to-end gen/solve/bench per family under 5 minutes", ok && secs < 300,
         std::to_string(secs) + " s" + (err.empty() ? "" : "; " + err));
}

}  // namespace

int main(int argc, char** argv) {
  criterion_dp_exact();
  criterion_ptas_scaled();
  criterion_ptas_continuous();
  criterion_ratios();
  criterion_census();
  criterion_greedy_vs_lp();
  criterion_degenerate();
  if (argc > 1) {
    criterion_cli(argv[1]);
  } else {
    report(8, "end-to-end gen/solve/bench per family under 5 minutes", false,
           "command-line binary path not supplied");
  }
  return failures == 0 ? 0 : 1;
}
