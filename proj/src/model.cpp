#include "ikp/model.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace ikp {

using nlohmann::json;

std::vector<Violation> validate(const Instance& instance) {
  std::vector<Violation> out;
  if (instance.knapsack_budget < 0) out.push_back({-1, 0, "knapsack budget B is negative"});
  if (instance.improvement_budget < 0) out.push_back({-1, 0, "improvement budget C is negative"});
  if (instance.mode == ImprovementMode::Continuous && !instance.single_level())
    out.push_back({-1, 0, "continuous mode requires a single-level instance"});

  for (int i = 0; i < instance.size(); ++i) {
    const Item& it = instance.items[static_cast<size_t>(i)];
    if (it.profit < 0) out.push_back({i, 0, "profit is negative"});
    if (it.base_weight < 0) out.push_back({i, 0, "base weight is negative"});
    for (int l = 1; l <= it.num_levels(); ++l) {
      const auto& lev = it.levels[static_cast<size_t>(l) - 1];
      if (lev.weight < 0) out.push_back({i, l, "level weight is negative"});
      if (lev.cost < 0) out.push_back({i, l, "level cost is negative"});
      if (lev.weight > it.weight_at(l - 1))
        out.push_back({i, l, "weights not non-increasing at item " + std::to_string(i) +
                                 ", level " + std::to_string(l)});
      if (l > 1 && lev.cost < it.cost_at(l - 1))
        out.push_back({i, l, "costs not non-decreasing at item " + std::to_string(i) +
                                 ", level " + std::to_string(l)});
    }
  }
  return out;
}

Evaluation evaluate(const Instance& instance, const Solution& solution) {
  const size_t n = instance.items.size();
  if (solution.packed.size() != n || solution.improvement.size() != n)
    throw std::invalid_argument("evaluate: solution dimensions do not match instance");

  Evaluation ev;
  ev.total_profit = 0;
  ev.effective_weight = 0;
  ev.improvement_cost = 0;

  for (size_t i = 0; i < n; ++i) {
    const Item& it = instance.items[i];
    const Rational& imp = solution.improvement[i];
    if (!solution.packed[i]) {
      if (imp != 0)
        throw std::invalid_argument("evaluate: unpacked item " + std::to_string(i) +
                                    " has nonzero improvement");
      continue;
    }
    ev.total_profit += it.profit;
    if (instance.mode == ImprovementMode::Discrete) {
      if (!is_integral(imp) || imp < 0 || imp > it.num_levels())
        throw std::invalid_argument("evaluate: improvement level of item " + std::to_string(i) +
                                    " out of range");
      int level = static_cast<int>(to_int(imp));
      ev.effective_weight += it.weight_at(level);
      ev.improvement_cost += it.cost_at(level);
    } else {
      if (imp < 0 || imp > 1)
        throw std::invalid_argument("evaluate: improvement fraction of item " + std::to_string(i) +
                                    " outside [0,1]");
      ev.effective_weight += it.base_weight - it.reduction() * imp;
      ev.improvement_cost += it.improvement_cost() * imp;
    }
  }
  ev.feasible = ev.effective_weight <= instance.knapsack_budget &&
                ev.improvement_cost <= instance.improvement_budget;
  return ev;
}

bool form_fits(const Instance& instance, int item, int level) {
  const Item& it = instance.items.at(static_cast<size_t>(item));
  return it.weight_at(level) <= instance.knapsack_budget &&
         it.cost_at(level) <= instance.improvement_budget;
}

PreprocessResult preprocess(const Instance& instance) {
  PreprocessResult res;
  res.instance.knapsack_budget = instance.knapsack_budget;
  res.instance.improvement_budget = instance.improvement_budget;
  res.instance.mode = instance.mode;

  for (int i = 0; i < instance.size(); ++i) {
    Item it = instance.items[static_cast<size_t>(i)];
    std::vector<int> level_map;
    if (instance.mode == ImprovementMode::Discrete) {
      std::vector<ImprovementLevel> kept;
      for (int l = 1; l <= it.num_levels(); ++l) {
        const auto& lev = it.levels[static_cast<size_t>(l) - 1];
        if (lev.weight <= instance.knapsack_budget && lev.cost <= instance.improvement_budget) {
          kept.push_back(lev);
          level_map.push_back(l);
        }
      }
      it.levels = std::move(kept);
      bool base_ok = it.base_weight <= instance.knapsack_budget;
      if (!base_ok && it.levels.empty()) continue;  // no usable form at all
    } else {
      // Partial improvement is allowed, so a level is never dropped. An item is
      // unpackable only if its weight exceeds B even at the largest
      // improvement affordable within C alone.
      Rational y_max = 1;
      const Rational& c = it.improvement_cost();
      if (c > 0 && instance.improvement_budget < c) y_max = instance.improvement_budget / c;
      if (it.base_weight - it.reduction() * y_max > instance.knapsack_budget) continue;
      for (int l = 1; l <= it.num_levels(); ++l) level_map.push_back(l);  // levels never dropped
    }
    res.original_index.push_back(i);
    res.original_level.push_back(std::move(level_map));
    res.instance.items.push_back(std::move(it));
  }
  return res;
}

Solution lift_solution(const PreprocessResult& pre, int original_n, const Solution& solution) {
  Solution out = Solution::empty(original_n);
  for (size_t i = 0; i < pre.original_index.size(); ++i) {
    int orig = pre.original_index[i];
    out.packed[static_cast<size_t>(orig)] = solution.packed[i];
    Rational imp = solution.improvement[i];
    if (pre.instance.mode == ImprovementMode::Discrete && imp > 0)
      imp = pre.original_level[i][static_cast<size_t>(to_int(imp)) - 1];
    out.improvement[static_cast<size_t>(orig)] = imp;
  }
  return out;
}

namespace {

Rational parse_number_field(const json& j, const std::string& where) {
  Rational v;
  if (j.is_string()) {
    try {
      v = parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  } else if (j.is_number_integer()) {
    v = Rational(Integer(j.dump()));
  } else {
    throw ParseError(where + ": expected a decimal string or integer");
  }
  if (v < 0) throw ParseError(where + ": negative value");
  return v;
}

const json& require(const json& j, const char* field, const std::string& where) {
  auto it = j.find(field);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + field + "\"");
  return *it;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance: top-level value is not an object");

  Instance inst;
  inst.knapsack_budget = parse_number_field(require(doc, "B", "instance"), "instance.B");
  inst.improvement_budget = parse_number_field(require(doc, "C", "instance"), "instance.C");
  if (doc.contains("mode")) {
    std::string m = doc["mode"].get<std::string>();
    if (m == "discrete")
      inst.mode = ImprovementMode::Discrete;
    else if (m == "continuous")
      inst.mode = ImprovementMode::Continuous;
    else
      throw ParseError("instance.mode: expected \"discrete\" or \"continuous\"");
  }
  const json& items = require(doc, "items", "instance");
  if (!items.is_array()) throw ParseError("instance.items: expected an array");
  for (size_t i = 0; i < items.size(); ++i) {
    const std::string where = "items[" + std::to_string(i) + "]";
    const json& ji = items[i];
    Item it;
    it.profit = parse_number_field(require(ji, "p", where), where + ".p");
    it.base_weight = parse_number_field(require(ji, "w", where), where + ".w");
    if (ji.contains("levels")) {
      if (!ji["levels"].is_array()) throw ParseError(where + ".levels: expected an array");
      for (size_t l = 0; l < ji["levels"].size(); ++l) {
        const std::string lw = where + ".levels[" + std::to_string(l) + "]";
        const json& jl = ji["levels"][l];
        it.levels.push_back({parse_number_field(require(jl, "w", lw), lw + ".w"),
                             parse_number_field(require(jl, "c", lw), lw + ".c")});
      }
    }
    inst.items.push_back(std::move(it));
  }
  return inst;
}

std::string serialize_instance(const Instance& instance) {
  json doc;
  doc["B"] = format_rational(instance.knapsack_budget);
  doc["C"] = format_rational(instance.improvement_budget);
  doc["mode"] = instance.mode == ImprovementMode::Discrete ? "discrete" : "continuous";
  doc["items"] = json::array();
  for (const Item& it : instance.items) {
    json ji;
    ji["p"] = format_rational(it.profit);
    ji["w"] = format_rational(it.base_weight);
    ji["levels"] = json::array();
    for (const auto& lev : it.levels)
      ji["levels"].push_back({{"w", format_rational(lev.weight)}, {"c", format_rational(lev.cost)}});
    doc["items"].push_back(std::move(ji));
  }
  return doc.dump(2) + "\n";
}

Solution parse_solution(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("solution: ") + e.what());
  }
  Solution sol;
  for (const auto& v : require(doc, "packed", "solution")) sol.packed.push_back(v.get<int>());
  for (size_t i = 0; i < require(doc, "improvement", "solution").size(); ++i)
    sol.improvement.push_back(
        parse_number_field(doc["improvement"][i], "solution.improvement[" + std::to_string(i) + "]"));
  if (sol.packed.size() != sol.improvement.size())
    throw ParseError("solution: packed and improvement lengths differ");
  return sol;
}

std::string serialize_solution(const Solution& solution) {
  json doc;
  doc["packed"] = solution.packed;
  doc["improvement"] = json::array();
  for (const auto& v : solution.improvement) doc["improvement"].push_back(format_rational(v));
  return doc.dump(2) + "\n";
}

}  // namespace ikp
