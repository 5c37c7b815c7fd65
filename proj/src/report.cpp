#include "ikp/report.hpp"

#include <nlohmann/json.hpp>

namespace ikp {

void attach_oracle(RunReport& report, const Rational& oracle_value) {
  report.oracle_value = oracle_value;
  if (report.objective > oracle_value)
    throw std::logic_error("report: objective exceeds the oracle optimum");
  if (oracle_value > 0) report.empirical_ratio = report.objective / oracle_value;
}

std::string serialize_report(const RunReport& report) {
  nlohmann::json doc;
  doc["algorithm"] = report.algorithm;
  doc["instance"] = report.instance_id;
  doc["objective"] = format_rational(report.objective);
  doc["objective_approx"] = approx(report.objective);
  doc["bound"] = format_rational(report.bound);
  if (report.oracle_value) {
    doc["oracle"] = format_rational(*report.oracle_value);
    if (report.empirical_ratio) {
      doc["ratio"] = format_rational(*report.empirical_ratio);
      doc["ratio_approx"] = approx(*report.empirical_ratio);
    }
  }
  doc["wall_ms"] = report.wall_ms;
  doc["solution"]["packed"] = report.solution.packed;
  doc["solution"]["improvement"] = nlohmann::json::array();
  for (const auto& v : report.solution.improvement)
    doc["solution"]["improvement"].push_back(format_rational(v));
  if (report.diag.anomaly) doc["anomaly"] = report.diag.note;
  return doc.dump(2) + "\n";
}

}  // namespace ikp
