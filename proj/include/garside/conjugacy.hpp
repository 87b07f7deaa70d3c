#pragma once

#include <cstddef>
#include <stdexcept>

#include "garside/braid.hpp"

namespace garside {

/// Cycling or decycling of a braid with no canonical factors.
class ZeroLength : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CyclingResult {
  Braid result;
  SimpleBraid conjugator;  // conjugator^{-1} * x * conjugator == result
};

struct DecyclingResult {
  Braid result;
  Braid conjugator;
};

/// c(x) = Delta^k x_2 ... x_l tau^k(x_1), conjugated by tau^k(x_1).
CyclingResult cycling(const Braid& x);
/// d(x) = Delta^k tau^k(x_l) x_1 ... x_{l-1}, conjugated by x_l^{-1}.
DecyclingResult decycling(const Braid& x);

struct SummitCertificate {
  Braid representative;
  Braid conjugator;
  long long inf_s;
  long long sup_s;
};

struct SummitBudget {
  std::size_t max_operations = 1'000'000;
};

/// Alternates cycling (until the trajectory recurs without raising inf) and
/// decycling (until it recurs without lowering sup) until neither improves.
SummitCertificate to_super_summit(const Braid& x, const SummitBudget& budget = {});

}  // namespace garside
