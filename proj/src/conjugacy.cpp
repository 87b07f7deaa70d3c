#include "garside/conjugacy.hpp"

#include <unordered_set>

namespace garside {

CyclingResult cycling(const Braid& x) {
  if (x.canonical_length() == 0) throw ZeroLength("cycling needs canonical length >= 1");
  const SimpleBraid c = tau_power(x.factors().front(), x.inf());
  NormalFormBuilder builder(Braid::delta_power(StrandCount(x.strands()), x.inf()));
  for (std::size_t i = 1; i < x.factors().size(); ++i) builder.append(x.factors()[i]);
  builder.append(c);
  return {builder.build(), c};
}

DecyclingResult decycling(const Braid& x) {
  if (x.canonical_length() == 0) throw ZeroLength("decycling needs canonical length >= 1");
  const auto& f = x.factors();
  NormalFormBuilder builder(Braid::delta_power(StrandCount(x.strands()), x.inf()));
  builder.append(tau_power(f.back(), x.inf()));
  for (std::size_t i = 0; i + 1 < f.size(); ++i) builder.append(f[i]);
  return {builder.build(), inverse(Braid::from_simple(f.back()))};
}

namespace {

struct Trajectory {
  Braid current;
  Braid conjugator;
  std::size_t operations = 0;
  std::size_t limit;

  void tick() {
    if (++operations > limit) throw BudgetExceeded("super summit search exceeded operation budget");
  }
};

// Runs one operation until the value recurs without improvement. Returns
// whether the tracked statistic improved at least once.
template <typename Step, typename Better>
bool run_until_recurrence(Trajectory& t, Step step, Better better) {
  bool improved = false;
  std::unordered_set<Braid, BraidHash> visited{t.current};
  while (t.current.canonical_length() > 0) {
    t.tick();
    auto [next, conj] = step(t.current);
    t.conjugator = multiply(t.conjugator, conj);
    if (better(next, t.current)) {
      improved = true;
      visited.clear();
    }
    const bool seen = !visited.insert(next).second;
    t.current = std::move(next);
    if (seen) break;
  }
  return improved;
}

}  // namespace

SummitCertificate to_super_summit(const Braid& x, const SummitBudget& budget) {
  Trajectory t{x, Braid(StrandCount(x.strands())), 0, budget.max_operations};
  bool changed = true;
  while (changed) {
    changed = run_until_recurrence(
        t,
        [](const Braid& b) {
          auto r = cycling(b);
          return std::pair{std::move(r.result), Braid::from_simple(r.conjugator)};
        },
        [](const Braid& next, const Braid& cur) { return next.inf() > cur.inf(); });
    changed |= run_until_recurrence(
        t,
        [](const Braid& b) {
          auto r = decycling(b);
          return std::pair{std::move(r.result), std::move(r.conjugator)};
        },
        [](const Braid& next, const Braid& cur) { return next.sup() < cur.sup(); });
  }
  return {t.current, t.conjugator, t.current.inf(), t.current.sup()};
}

}  // namespace garside
