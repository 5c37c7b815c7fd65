#ifndef IKP_GENERATOR_HPP
#define IKP_GENERATOR_HPP

#include <cstdint>

#include "ikp/model.hpp"

namespace ikp {

enum class Family { Uniform, Correlated, UnitCost };

/// Random-instance recipe. Deterministic: the same config yields the same
/// instance on every platform (mt19937_64 plus rejection sampling only).
struct GenConfig {
  int n = 8;
  int max_levels = 1;  // j(i) drawn uniformly from 0..max_levels
  Family family = Family::Uniform;
  ImprovementMode mode = ImprovementMode::Discrete;
  std::uint64_t seed = 0;

  int profit_max = 100;
  int weight_max = 100;
  int cost_max = 20;  // per-level cost increment cap (ignored by UnitCost)
};

Instance generate(const GenConfig& config);

Family parse_family(const std::string& name);  // throws std::invalid_argument

}  // namespace ikp

#endif
