#ifndef IKP_REPORT_HPP
#define IKP_REPORT_HPP

#include <optional>
#include <string>

#include "ikp/model.hpp"

namespace ikp {

/// Outcome of one solver run, including the certified approximation bound the
/// algorithm guarantees (a multiplier in (0,1]; 1 means exact).
struct RunReport {
  std::string algorithm;
  std::string instance_id;
  Rational objective;
  Solution solution;
  Rational bound = 1;
  std::optional<Rational> oracle_value;
  std::optional<Rational> empirical_ratio;
  double wall_ms = 0;

  /// LP-structure observations for the census assertions.
  struct Diagnostics {
    int fractional_vars = -1;     // fractional variables of the LP solve, if any
    int non_integral_items = -1;  // non-integral items of the (iK-dm) relaxation
    bool pair_lemma_holds = true; // x̂_i + x̂_j = 1 whenever checked
    bool anomaly = false;         // degeneracy fallback was taken
    std::string note;
  } diag;
};

/// Fills oracle_value and empirical_ratio; throws std::logic_error if the
/// objective exceeds the oracle value.
void attach_oracle(RunReport& report, const Rational& oracle_value);

std::string serialize_report(const RunReport& report);

}  // namespace ikp

#endif
