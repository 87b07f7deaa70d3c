#include "garside/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "garside/curves.hpp"
#include "garside/family.hpp"

namespace garside {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name},
                    {"parameters", c.parameters},
                    {"status", garside::to_string(c.status)},
                    {"details", c.details}});
  }
  return {{"seed", seed},
          {"checks", list},
          {"totals",
           {{"pass", count(CheckStatus::kPass)},
            {"fail", count(CheckStatus::kFail)},
            {"skipped", count(CheckStatus::kSkipped)}}}};
}

namespace {

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

std::vector<BitRow> valid_rows(int p) {
  std::vector<BitRow> out;
  for (int m = 0; m < (1 << (p - 2)); ++m) {
    BitRow a(p, 0);
    for (int j = 0; j < p - 2; ++j) a[j + 1] = (m >> j) & 1;
    a[p - 1] = 1;
    out.push_back(a);
  }
  return out;
}

class Runner {
 public:
  explicit Runner(const VerifyOptions& o) : opt_(o) { report_.seed = o.seed; }

  // Runs body and records its outcome. The body returns details text.
  void run(const std::string& name, nlohmann::json params,
           const std::function<std::string(std::mt19937_64&)>& body) {
    CheckResult r{name, std::move(params), CheckStatus::kPass, ""};
    std::seed_seq seq{static_cast<std::uint32_t>(opt_.seed), static_cast<std::uint32_t>(opt_.seed >> 32),
                      static_cast<std::uint32_t>(report_.checks.size())};
    std::mt19937_64 rng(seq);
    try {
      r.details = body(rng);
    } catch (const Failure& f) {
      r.status = CheckStatus::kFail;
      r.details = f.what;
    } catch (const BudgetExceeded& e) {
      r.status = CheckStatus::kSkipped;
      r.details = std::string("budget exceeded: ") + e.what();
    } catch (const std::exception& e) {
      r.status = CheckStatus::kFail;
      r.details = std::string("error: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

  void skip(const std::string& name, nlohmann::json params, std::string why) {
    report_.checks.push_back({name, std::move(params), CheckStatus::kSkipped, std::move(why)});
  }

  VerificationReport take() { return std::move(report_); }

 private:
  const VerifyOptions& opt_;
  VerificationReport report_;
};

}  // namespace

VerificationReport verify_suite(const VerifyOptions& opt) {
  Runner run(opt);
  const int pmax = std::max(2, std::min(opt.max_row_length, 10));

  run.run("block rules", {{"p_max", pmax}}, [&](std::mt19937_64&) {
    std::size_t rows = 0;
    for (int p = 2; p <= pmax; ++p) {
      IndexSet s, f{1, 2 * p + 1};
      for (int j = 1; j <= p; ++j) {
        s.insert(2 * j);
        f.insert(2 * j);
      }
      for (const auto& a : valid_rows(p)) {
        const SimpleBraid x = alpha_row(a);
        require(x.length() == 4 * p + 1, "crossing count of " + to_string(a));
        require(x.starting_set() == s, "starting set of " + to_string(a));
        require(x.finishing_set() == f, "finishing set of " + to_string(a));
        for (int t : transposing_indices(a)) {
          require(std::abs(x.image(t) - t) == 1, "transposing strand of " + to_string(a));
        }
        ++rows;
      }
    }
    return std::to_string(rows) + " rows";
  });

  run.run("reduced cycle", {{"p_max", pmax}}, [&](std::mt19937_64&) {
    std::size_t rows = 0;
    for (int p = 2; p <= pmax; ++p) {
      for (const auto& a : valid_rows(p)) {
        const ReducedCycle th = theta(a);
        require(th.is_single_cycle(), "not a single cycle: " + to_string(a));
        for (int i = 1; i <= p; ++i) {
          if (a[i - 1] != 0) continue;
          int next = 2 * p + 1;
          for (int j = p; j > i; --j)
            if (a[j - 1] == 0) next = 2 * j;
          require(th(2 * i) == next, "next-zero rule fails for " + to_string(a));
        }
        ++rows;
      }
    }
    return std::to_string(rows) + " rows, each a (p+2)-cycle";
  });

  for (int n : opt.n_values) {
    for (int k : opt.k_values) {
      const nlohmann::json params = {{"n", n}, {"k", k}, {"samples", opt.samples}};
      if (n < 6) {
        run.skip("rigid and left-weighted", params, "needs n >= 6");
        continue;
      }
      run.run("rigid and left-weighted", params, [&](std::mt19937_64& rng) {
        std::set<FamilyElement> es;
        std::set<Braid> bs;
        for (int t = 0; t < opt.samples; ++t) {
          const FamilyElement e = sample_element(rng, k, n);
          const Braid x = alpha(e);  // throws unless left-weighted as written
          require(is_rigid(x), "not rigid");
          if (es.insert(e).second) require(bs.insert(x).second, "two elements share a braid");
        }
        return std::to_string(es.size()) + " distinct elements, injective";
      });
      run.run("no standard reduction", params, [&](std::mt19937_64& rng) {
        for (int t = 0; t < opt.samples; ++t) {
          const Braid x = alpha(sample_element(rng, k, n));
          require(find_standard_reduction(x, opt.exec).empty(), "periodic standard curve found");
        }
        return std::string("no periodic standard curve");
      });
      run.run("cut-head uniqueness", params, [&](std::mt19937_64& rng) {
        std::size_t states = 0;
        for (int t = 0; t < opt.samples; ++t) {
          const FamilyElement e = sample_element(rng, k, n);
          const Braid x = alpha(e);
          const auto m = minimal_conjugators(x, opt.budget, opt.exec, {true, false});
          if (!m.exhaustive) throw BudgetExceeded("cut-head search");
          states += m.states;
          require(m.of_kind(ConjugatorKind::kCutHead) == std::vector<SimpleBraid>{alpha_factors(e).front()},
                  "cut-head set differs from the first row");
        }
        return "exhaustive, " + std::to_string(states) + " states";
      });
      run.run("forced prefixes", params, [&](std::mt19937_64& rng) {
        std::size_t checked = 0;
        for (int t = 0; t < opt.samples; ++t) {
          const FamilyElement e = sample_element(rng, k, n);
          const int p = e.p();
          for (const auto& a : e.rows()) {
            auto go = [&](std::optional<int> b, int seed, ConjugatorKind mode) {
              for (const auto& fp : forced_prefixes(a, b, seed, mode)) {
                const auto c = check_forced_prefix(a, b, seed, mode, fp);
                require(c.holds, fp.clause + " fails for " + to_string(a) + " seed " + std::to_string(seed));
                ++checked;
              }
            };
            if (!e.slot()) {
              for (int s = 3; s <= 2 * p - 1; s += 2) go(std::nullopt, s, ConjugatorKind::kAddTail);
              go(std::nullopt, 1, ConjugatorKind::kCutHead);
              go(std::nullopt, 2 * p + 1, ConjugatorKind::kCutHead);
              for (int j = 1; j <= p; ++j) go(std::nullopt, 2 * j, ConjugatorKind::kCutHead);
            } else if (*e.slot() >= 1 && *e.slot() <= p - 1) {
              go(e.slot(), 2 * *e.slot() + 1, ConjugatorKind::kAddTail);
              go(e.slot(), 2 * *e.slot() + 2, ConjugatorKind::kAddTail);
            }
          }
        }
        return std::to_string(checked) + " clauses";
      });

      const nlohmann::json fam = {{"n", n}, {"k", k}};
      if (n < 10 || k < 2) {
        for (const char* name : {"switching exactness", "terminal closed form", "initializer identity",
                                 "containment", "rigid set size"}) {
          run.skip(name, fam, "restricted class needs n >= 10 and k >= 2");
        }
        continue;
      }
      run.run("switching exactness", {{"n", n}, {"k", k}, {"samples", opt.samples}}, [&](std::mt19937_64& rng) {
        const bool oracle = n <= opt.oracle_max_n;
        std::size_t edges = 0;
        for (int t = 0; t < opt.samples; ++t) {
          const FamilyElement e = sample_m0_element(rng, k, n);
          const Braid x = alpha(e);
          std::vector<SimpleBraid> predicted;
          for (const auto& s : switchings(e)) {
            require(conjugate(x, s.conjugator) == alpha(s.target), "switching target mismatch");
            for (const auto& q : all_prefixes(s.conjugator)) {
              if (q.is_identity() || q == s.conjugator) continue;
              require(!is_rigid_conjugator(x, q), "a proper prefix of a switching is an R-conjugator");
            }
            predicted.push_back(s.conjugator);
            ++edges;
          }
          if (oracle && !is_terminal(e)) {
            std::sort(predicted.begin(), predicted.end());
            const auto m = minimal_conjugators(x, opt.budget, opt.exec, {false, true});
            if (!m.exhaustive) throw BudgetExceeded("add-tail search");
            require(m.of_kind(ConjugatorKind::kAddTail) == predicted, "add-tail set differs from switchings");
          }
        }
        return std::to_string(edges) + " switchings" + (oracle ? ", add-tail sets searched" : "");
      });
      run.run("terminal closed form", fam, [&](std::mt19937_64& rng) {
        const FamilyElement e = transform(sample_m0_element(rng, k, n), Transform::kCheck);
        const int p = e.p();
        const Braid closed = normal_form(StrandCount(n), rho_check_word(p));
        require(closed == rho_path(e), "closed form differs from the switching path");
        IndexSet expected;
        for (int i = 3; i <= 2 * p - 7; i += 2) expected.insert(i);
        require(starting_set(closed) == expected, "starting set " + to_string(starting_set(closed)));
        return "S = " + to_string(expected);
      });
      run.run("initializer identity", fam, [&](std::mt19937_64& rng) {
        for (int t = 0; t < opt.samples; ++t) {
          const FamilyElement e = transform(sample_m0_element(rng, k, n), Transform::kCheck);
          for (Side side : {Side::kPlain, Side::kTau}) {
            const Initializer init = initializer(e.with_side(side));
            require(conjugate(alpha(e.with_side(side)), init.conjugator) == alpha(init.target),
                    "initializer conjugation identity fails");
          }
        }
        return std::string(n < 14 ? "holds (below the disjointness bound)" : "holds");
      });
      run.run("containment", fam, [&](std::mt19937_64& rng) {
        const FamilyElement e = sample_m0_element(rng, k, n);
        const FamilyGraph g = family_rigid_graph(e, opt.exec);
        for (const auto& b : g.graph.nodes()) {
          require(parse_family_braid(b).has_value(), "node outside the family and its tau-image");
        }
        std::string details = std::to_string(g.graph.size()) + " nodes parse back";
        if (n <= opt.oracle_max_n) {
          const ConjugacyGraph h = enumerate_class(alpha(e), opt.budget, opt.exec);
          require(h.nodes() == g.graph.nodes(), "generic enumeration differs from the closed form");
          details += ", equal to generic enumeration (" + std::to_string(h.states) + " states)";
        }
        return details;
      });
      const int p = (n - 2) / 2;
      const std::size_t predicted = predicted_rigid_set_size(k, p);
      const double bound = k * std::pow(std::sqrt(2.0), n) / 23.0;
      const nlohmann::json sparams = {{"n", n}, {"k", k}, {"expected", predicted}};
      if (n < 14) {
        run.skip("rigid set size", sparams, "size formula is stated for n >= 14");
        continue;
      }
      run.run("rigid set size", sparams, [&](std::mt19937_64& rng) {
        const FamilyGraph g = family_rigid_graph(sample_m0_element(rng, k, n), opt.exec);
        require(g.stats.nodes == predicted,
                "expected " + std::to_string(predicted) + ", counted " + std::to_string(g.stats.nodes));
        require(g.stats.strongly_connected, "graph not strongly connected");
        require(static_cast<double>(predicted) >= bound, "size below the bound");
        char buf[96];
        std::snprintf(buf, sizeof buf, "counted %zu, bound %.2f", g.stats.nodes, bound);
        return std::string(buf);
      });
    }
  }
  return run.take();
}

}  // namespace garside
