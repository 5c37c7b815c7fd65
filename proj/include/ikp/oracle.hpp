#ifndef IKP_ORACLE_HPP
#define IKP_ORACLE_HPP

#include <stdexcept>

#include "ikp/model.hpp"

namespace ikp {
namespace oracle {

/// Brute-force state cap; overridable per call (the CLI honors IK_ORACLE_LIMIT).
constexpr long long kDefaultStateLimit = 2'000'000;

class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Result {
  Solution solution;
  Rational value;
};

/// Exhaustive enumeration over all item states (out, or packed at level
/// 0..j(i)). Throws LimitError when the state count exceeds `limit`.
Result exact_discrete(const Instance& instance, long long limit = kDefaultStateLimit);

/// Enumerates packings x and applies the greedy improvement of the continuous
/// module, which is optimal for fixed x. Single-level continuous instances
/// only; throws LimitError when 2^n exceeds `limit`.
Result exact_continuous(const Instance& instance, long long limit = kDefaultStateLimit);

}  // namespace oracle
}  // namespace ikp

#endif
