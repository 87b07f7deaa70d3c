// Acceptance run: one PASS/FAIL line per criterion. Everything is exact; the
// only tolerances are the wall-clock limits below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "family_oracles.hpp"
#include "garside/curves.hpp"
#include "garside/family.hpp"
#include "oracles.hpp"

using namespace garside;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first failure message; later checks are still counted.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond && first_.empty()) first_ = what;
  }
  Outcome done(const std::string& summary) const {
    if (!first_.empty()) return {false, first_};
    return {true, summary + " (" + std::to_string(checks_) + " checks)"};
  }

 private:
  std::size_t checks_ = 0;
  std::string first_;
};

struct Criterion {
  int number;
  const char* label;
  double limit_seconds;
  std::function<Outcome()> run;
};

SimpleBraid from_perm(const oracle::Perm& p) {
  std::vector<int> images(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) images[i] = p[i] + 1;
  return SimpleBraid::from_images(images);
}

Braid word_braid(int n, const std::vector<int>& word) { return normal_form(StrandCount(n), word); }

std::string str(const BitMatrix& m) {
  std::string s;
  for (const auto& r : m) s += (s.empty() ? "" : ",") + to_string(r);
  return s;
}

Outcome lattice_oracle() {
  Checker c;
  for (int n = 3; n <= 5; ++n) {
    const auto perms = oracle::all_perms(n);
    for (const auto& a : perms) {
      const SimpleBraid sa = from_perm(a);
      for (const auto& b : perms) {
        const SimpleBraid sb = from_perm(b);
        const SimpleBraid m = meet(sa, sb), j = join(sa, sb);
        c.expect(is_prefix(sa, sb) == oracle::divides_left(a, b), "prefix order");
        c.expect(m == from_perm(oracle::brute_meet(a, b, perms)), "meet");
        c.expect(j == from_perm(oracle::brute_join(a, b, perms)), "join");
        c.expect(m == meet(sb, sa) && j == join(sb, sa), "commutativity");
        c.expect(meet(sa, j) == sa && join(sa, m) == sa, "absorption");
        c.expect(is_prefix(sa, sb) == (m == sa) && is_prefix(sa, sb) == (j == sb), "consistency");
      }
    }
  }
  return c.done("all pairs of simples at n = 3, 4, 5");
}

Outcome normal_form_congruence() {
  Checker c;
  std::mt19937_64 rng(20261014);
  for (int t = 0; t < 10000; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const int len = std::uniform_int_distribution<int>(0, 30)(rng);
    const std::vector<int> word = oracle::random_word(rng, n, len);
    const auto cut = static_cast<std::ptrdiff_t>(std::uniform_int_distribution<std::size_t>(0, word.size())(rng));
    const Braid x = word_braid(n, word);
    c.expect(x == multiply(word_braid(n, {word.begin(), word.begin() + cut}),
                           word_braid(n, {word.begin() + cut, word.end()})),
             "multiplicativity");
    std::vector<int> v = word;
    for (int r = 0; r < 20 && oracle::rewrite_once(v, rng); ++r) {
    }
    c.expect(word_braid(n, v) == x, "relation rewrite changed the normal form");
    c.expect(word_braid(n, to_word(x)) == x, "normal form word round trip");
  }
  return c.done("10000 words");
}

struct FamilySample {
  std::vector<FamilyElement> elements;
  std::vector<Braid> braids;
};

const FamilySample& family_sample() {
  static const FamilySample sample = [] {
    FamilySample s;
    std::mt19937_64 rng(3);
    for (int t = 0; t < 500; ++t) {
      const int n = std::uniform_int_distribution<int>(6, 16)(rng);
      const int k = std::uniform_int_distribution<int>(1, 5)(rng);
      s.elements.push_back(sample_element(rng, k, n));
      s.braids.push_back(alpha(s.elements.back()));
    }
    return s;
  }();
  return sample;
}

Outcome alpha_left_weighted_rigid_injective() {
  Checker c;
  const FamilySample& s = family_sample();
  std::set<FamilyElement> elements;
  std::set<Braid> keys;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    const FamilyElement& e = s.elements[i];
    const auto factors = alpha_factors(e);
    SignedWord word;
    for (const auto& f : factors)
      for (int l : f.word()) word.push_back(l);
    const Braid y = word_braid(e.strands(), word);
    c.expect(y.inf() == 0 && y.factors() == factors, "factors not left-weighted as written: " + str(e.rows()));
    for (std::size_t j = 0; j + 1 < factors.size(); ++j)
      c.expect(is_left_weighted(factors[j], factors[j + 1]), "adjacent rows not left-weighted");
    c.expect(is_rigid(s.braids[i]), "not rigid: " + str(e.rows()));
    if (elements.insert(e).second) c.expect(keys.insert(s.braids[i]).second, "alpha not injective");
  }
  return c.done(std::to_string(elements.size()) + " distinct elements");
}

Outcome no_standard_reduction() {
  Checker c;
  for (const Braid& x : family_sample().braids)
    c.expect(find_standard_reduction(x, Execution::kParallel).empty(), "periodic standard curve found");
  return c.done("500 braids");
}

Outcome cut_head_unique() {
  Checker c;
  std::mt19937_64 rng(5);
  std::size_t states = 0;
  for (int n : {6, 8, 10, 11}) {
    for (int k : {2, 3}) {
      for (int t = 0; t < 50; ++t) {
        const FamilyElement e = sample_element(rng, k, n);
        const auto m = minimal_conjugators(alpha(e), {}, Execution::kParallel, {true, false});
        states += m.states;
        c.expect(m.exhaustive, "search not exhaustive");
        c.expect(m.of_kind(ConjugatorKind::kCutHead) == std::vector<SimpleBraid>{alpha_factors(e).front()},
                 "cut-head set differs at n=" + std::to_string(n) + ": " + str(e.rows()));
      }
    }
  }
  return c.done("400 samples, " + std::to_string(states) + " states");
}

// Every restricted-class element with p = 4: only columns 2 and 3 vary.
std::vector<FamilyElement> all_p4_elements(int k, bool odd) {
  std::vector<FamilyElement> out;
  for (int m = 0; m < (1 << (2 * k)); ++m) {
    BitMatrix a(k, BitRow{0, 0, 0, 1});
    for (int r = 0; r < k; ++r) {
      a[r][1] = (m >> (2 * r)) & 1;
      a[r][2] = (m >> (2 * r + 1)) & 1;
    }
    try {
      out.push_back(make_element(a, odd ? std::optional<int>(2) : std::nullopt, true));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

Outcome add_tail_initializer_at_p4() {
  Checker c;
  std::size_t count = 0, states = 0;
  for (bool odd : {false, true}) {
    for (int k : {2, 3}) {
      for (const FamilyElement& e : all_p4_elements(k, odd)) {
        ++count;
        const Braid x = alpha(e);
        const auto m = minimal_conjugators(x, SearchBudget{5'000'000, 1'000'000}, Execution::kParallel,
                                           {false, true});
        states += m.states;
        const auto add = m.of_kind(ConjugatorKind::kAddTail);
        const SimpleBraid expected = right_complement(alpha_factors(e).back());
        c.expect(m.exhaustive, "search not exhaustive");
        c.expect(rho_path(e).is_identity(), "rho not trivial");
        c.expect(add.size() == 1 && add.front() == expected, "add-tail set differs: " + str(e.rows()));
        const Braid target = tau_braid(alpha(uncycle(transform(e, Transform::kHat))));
        c.expect(conjugate(x, expected) == target, "conjugate differs: " + str(e.rows()));
        c.expect(alpha(initializer(e).target) == target, "initializer target differs");
      }
    }
  }
  return c.done(std::to_string(count) + " elements, " + std::to_string(states) + " states");
}

Outcome switchings_exact() {
  Checker c;
  std::mt19937_64 rng(7);
  std::size_t count = 0;
  for (int n : {14, 15}) {
    for (int k : {2, 3}) {
      for (int t = 0; t < 8; ++t) {
        FamilyElement e = sample_m0_element(rng, k, n);
        if (t % 2) e = e.with_side(Side::kTau);
        const Braid x = alpha(e);
        for (const auto& s : switchings(e)) {
          ++count;
          c.expect(is_rigid_conjugator(x, s.conjugator), "switching is not an R-conjugator");
          c.expect(conjugate(x, s.conjugator) == alpha(s.target), "switching target differs");
          for (const auto& q : all_prefixes(s.conjugator)) {
            if (q.is_identity() || q == s.conjugator) continue;
            c.expect(!is_rigid_conjugator(x, q), "proper prefix is an R-conjugator");
          }
        }
      }
    }
  }
  c.expect(count > 0, "no switchings sampled");
  return c.done(std::to_string(count) + " switchings");
}

Outcome terminal_closed_form() {
  Checker c;
  for (int p = 6; p <= 8; ++p) {
    BitMatrix a(2, BitRow(p, 0));
    a[0][p - 3] = a[1][p - 2] = 1;
    a[0][p - 1] = a[1][p - 1] = 1;
    const FamilyElement check = make_element(a, std::nullopt, true);
    c.expect(is_terminal(check), "not terminal");
    const Braid closed = word_braid(2 * p + 2, rho_check_word(p));
    c.expect(closed == rho_path(check), "closed form differs at p=" + std::to_string(p));
    IndexSet expected;
    for (int i = 3; i <= 2 * p - 7; i += 2) expected.insert(i);
    c.expect(starting_set(closed) == expected, "starting set differs at p=" + std::to_string(p));
  }
  return c.done("p = 6, 7, 8");
}

Outcome example_seventeen_strands() {
  Checker c;
  const FamilyElement e = make_element({{0, 1, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}}, 5, true);
  c.expect(e.strands() == 17, "strand count");
  c.expect(rho_path(e) == word_braid(17, {3, 2, 4, 3, 1, 5, 4, 6, 5}), "rho differs");
  c.expect(transform(e, Transform::kHat).rows() == BitMatrix{{0, 1, 1, 1, 1, 0, 1}, {0, 1, 1, 1, 0, 1, 1}},
           "hat matrix");
  c.expect(transform(e, Transform::kCheck).rows() == BitMatrix{{0, 0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 0, 1, 1}},
           "check matrix");
  c.expect(conjugate(alpha(transform(e, Transform::kHat)), rho_path(e)) == alpha(e), "rho does not conjugate");
  return c.done("rho = rho_3 rho_5");
}

Outcome rigid_set_sizes() {
  Checker c;
  struct Case {
    int n, k;
    std::size_t nodes;
  };
  std::mt19937_64 rng(10);
  std::ostringstream sizes;
  for (const Case cs : {Case{14, 2, 16}, Case{14, 3, 24}, Case{15, 2, 16}, Case{16, 2, 32}, Case{17, 2, 32}}) {
    const FamilyElement e = sample_m0_element(rng, cs.k, cs.n);
    const FamilyGraph g = family_rigid_graph(e, Execution::kParallel);
    sizes << " " << g.graph.size();
    c.expect(g.graph.size() == cs.nodes && predicted_rigid_set_size(cs.k, e.p()) == cs.nodes,
             "size at n=" + std::to_string(cs.n));
    c.expect(verify_graph(g.graph, Execution::kParallel).ok(), "edge or node verification failed");
    for (const Braid& x : g.graph.nodes()) {
      const auto back = parse_family_braid(x);
      c.expect(back && alpha(*back) == x, "node does not parse back");
    }
  }
  for (int n = 14; n <= 20; ++n) {
    const int p = (n - 2) / 2;
    for (int k = 1; k <= 5; ++k) {
      c.expect(static_cast<double>(predicted_rigid_set_size(k, p)) >= k * std::pow(std::sqrt(2.0), n) / 23.0,
               "lower bound at n=" + std::to_string(n));
    }
  }
  return c.done("sizes" + sizes.str());
}

Outcome oracle_equivalence() {
  Checker c;
  std::mt19937_64 rng(11);
  std::size_t states = 0;
  for (int n : {10, 11}) {
    for (int k : {2, 3}) {
      std::set<FamilyElement> seen;
      for (int t = 0; t < 12 && seen.size() < 3; ++t) {
        const FamilyElement e = sample_m0_element(rng, k, n);
        if (!seen.insert(e).second) continue;
        const ConjugacyGraph generic = enumerate_class(alpha(e), {}, Execution::kParallel);
        states += generic.states;
        c.expect(generic.nodes() == family_rigid_graph(e, Execution::kParallel).graph.nodes(),
                 "node sets differ at n=" + std::to_string(n) + ": " + str(e.rows()));
      }
    }
  }
  return c.done(std::to_string(states) + " search states");
}

Outcome reduced_cycle() {
  Checker c;
  std::size_t rows = 0;
  for (int p = 2; p <= 8; ++p) {
    for (const auto& a : oracle::all_rows(p)) {
      if (!oracle::valid_row(a)) continue;
      ++rows;
      const ReducedCycle th = theta(a);
      c.expect(th.is_single_cycle() && th.cycle_from(1).size() == static_cast<std::size_t>(p + 2),
               "not a (p+2)-cycle: " + to_string(a));
      for (int i = 1; i <= p; ++i)
        if (a[i - 1] == 0) c.expect(th(2 * i) == oracle::next_zero_image(a, i), "next-zero rule: " + to_string(a));
      std::map<int, int> as_map;
      for (int l : th.labels()) as_map[l] = th(l);
      c.expect(as_map == oracle::induced_cycle(a), "differs from the braid permutation: " + to_string(a));
    }
  }
  return c.done(std::to_string(rows) + " rows");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "lattice operations agree with exhaustive enumeration", 10, lattice_oracle},
      {2, "normal form congruence on random words", 30, normal_form_congruence},
      {3, "family braids are left-weighted, rigid, injective", 60, alpha_left_weighted_rigid_injective},
      {4, "family braids have no standard reduction", 60, no_standard_reduction},
      {5, "cut-head minimal set is the first row", 300, cut_head_unique},
      {6, "p = 4 add-tail conjugator is the initializer", 600, add_tail_initializer_at_p4},
      {7, "switchings are exact prefix-minimal R-conjugators", 60, switchings_exact},
      {8, "terminal closed form", 10, terminal_closed_form},
      {9, "seventeen-strand example", 10, example_seventeen_strands},
      {10, "rigid set sizes and lower bound", 300, rigid_set_sizes},
      {11, "generic enumeration equals the closed-form graph", 900, oracle_equivalence},
      {12, "reduced cycle is a (p+2)-cycle with the next-zero rule", 10, reduced_cycle},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > cr.limit_seconds) {
      out = {false, out.detail + "; over the " + std::to_string(static_cast<int>(cr.limit_seconds)) + " s limit"};
    }
    if (!out.ok) ++failed;
    std::printf("%s  C%-2d %s: %s [%.2f s]\n", out.ok ? "PASS" : "FAIL", cr.number, cr.label, out.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
