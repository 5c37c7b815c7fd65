#include "ikp/generator.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace ikp {

namespace {

// Uniform draw in [0, bound) by rejection; std::uniform_int_distribution is
// implementation-defined and would break byte-identical output across
// standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

long long draw_in(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace

Family parse_family(const std::string& name) {
  if (name == "uniform") return Family::Uniform;
  if (name == "correlated") return Family::Correlated;
  if (name == "unit-cost") return Family::UnitCost;
  throw std::invalid_argument("unknown family: " + name);
}

Instance generate(const GenConfig& config) {
  if (config.n < 0) throw std::invalid_argument("generate: n must be nonnegative");
  std::mt19937_64 rng(config.seed);

  Instance inst;
  inst.mode = config.mode;

  const int max_levels =
      (config.family == Family::UnitCost || config.mode == ImprovementMode::Continuous)
          ? 1
          : config.max_levels;

  for (int i = 0; i < config.n; ++i) {
    Item it;
    long long w = draw_in(rng, 1, config.weight_max);
    it.base_weight = w;
    if (config.family == Family::Correlated) {
      long long noise = draw_in(rng, -10, 10);
      it.profit = std::max(1LL, w + noise);
    } else {
      it.profit = draw_in(rng, 1, config.profit_max);
    }

    int levels = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(max_levels + 1)));
    long long prev_w = w;
    long long prev_c = 0;
    for (int l = 0; l < levels; ++l) {
      long long lw = draw_in(rng, 0, prev_w);  // non-increasing
      long long lc = config.family == Family::UnitCost
                         ? 1
                         : prev_c + draw_in(rng, l == 0 ? 0 : 1, std::max(1, config.cost_max));
      it.levels.push_back({Rational(lw), Rational(lc)});
      prev_w = lw;
      prev_c = lc;
    }
    inst.items.push_back(std::move(it));
  }

  Rational total_w = 0, total_c = 0;
  for (const Item& it : inst.items) {
    total_w += it.base_weight;
    if (!it.levels.empty()) total_c += it.levels.back().cost;
  }
  long long b_pct = draw_in(rng, 30, 60);
  long long c_pct = draw_in(rng, 20, 50);
  inst.knapsack_budget = total_w * b_pct / 100;
  inst.improvement_budget = total_c * c_pct / 100;
  return inst;
}

}  // namespace ikp
