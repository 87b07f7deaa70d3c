#include "garside/invariant_sets.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "garside/parallel.hpp"

namespace garside {

std::string to_string(ConjugatorKind kind) {
  return kind == ConjugatorKind::kCutHead ? "cut-head" : "add-tail";
}

std::string to_string(EdgeMove move) {
  switch (move) {
    case EdgeMove::kCycling:
      return "cycling";
    case EdgeMove::kSwitching:
      return "switching";
    case EdgeMove::kInitializing:
      return "initializing";
    case EdgeMove::kUnspecified:
      break;
  }
  return "minimal";
}

namespace {

using SimpleSet = std::unordered_set<SimpleBraid, SimpleBraidHash>;

// Successors s*sigma_j of s that stay below top.
template <typename Emit>
void for_each_cover_below(const SimpleBraid& s, const SimpleBraid& top, Emit emit) {
  const int n = s.strands();
  std::array<std::uint8_t, kMaxStrands> at{};
  for (int strand = 0; strand < n; ++strand) at[s.raw(strand)] = static_cast<std::uint8_t>(strand);
  for (int j = 1; j < n; ++j) {
    const int a = at[j - 1], b = at[j];
    if (a < b && top.raw(a) > top.raw(b)) emit(s.times_generator(j));
  }
}

template <typename Visit>
bool all_predecessors(const SimpleBraid& y, Visit visit) {
  const int n = y.strands();
  std::array<std::uint8_t, kMaxStrands> at{};
  for (int strand = 0; strand < n; ++strand) at[y.raw(strand)] = static_cast<std::uint8_t>(strand);
  for (int j = 1; j < n; ++j) {
    if (at[j - 1] > at[j] && !visit(y.times_generator(j))) return false;
  }
  return true;
}

}  // namespace

PrefixSearchResult minimal_prefixes(const SimpleBraid& top,
                                    const std::function<bool(const SimpleBraid&)>& hit,
                                    std::size_t max_states, Execution exec) {
  PrefixSearchResult result;
  const SimpleBraid e = SimpleBraid::identity(StrandCount(top.strands()));
  std::vector<SimpleBraid> level{e};
  SimpleSet clean{e};

  while (!level.empty()) {
    SimpleSet generated;
    for (const auto& r : level) {
      for_each_cover_below(r, top, [&](SimpleBraid y) { generated.insert(y); });
    }
    // A candidate is evaluated only if every lower cover is clean: nothing
    // below it is a hit.
    std::vector<SimpleBraid> eligible;
    eligible.reserve(generated.size());
    for (const auto& y : generated) {
      if (all_predecessors(y, [&](const SimpleBraid& p) { return clean.contains(p); })) {
        eligible.push_back(y);
      }
    }
    std::sort(eligible.begin(), eligible.end());
    if (result.states + eligible.size() > max_states) {
      result.exhaustive = false;
      break;
    }
    result.states += eligible.size();

    std::vector<char> flags(eligible.size(), 0);
    parallel_for(eligible.size(), exec == Execution::kParallel,
                 [&](std::size_t i) { flags[i] = hit(eligible[i]) ? 1 : 0; });

    std::vector<SimpleBraid> next;
    for (std::size_t i = 0; i < eligible.size(); ++i) {
      if (flags[i]) {
        result.minimal.push_back(eligible[i]);
      } else {
        next.push_back(eligible[i]);
      }
    }
    clean = SimpleSet(next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(result.minimal.begin(), result.minimal.end());
  return result;
}

std::vector<SimpleBraid> all_prefixes(const SimpleBraid& top) {
  std::vector<SimpleBraid> out;
  std::vector<SimpleBraid> level{SimpleBraid::identity(StrandCount(top.strands()))};
  while (!level.empty()) {
    out.insert(out.end(), level.begin(), level.end());
    SimpleSet generated;
    for (const auto& r : level) {
      for_each_cover_below(r, top, [&](SimpleBraid y) { generated.insert(y); });
    }
    level.assign(generated.begin(), generated.end());
    std::sort(level.begin(), level.end());
  }
  return out;
}

std::vector<SimpleBraid> MinimalConjugatorSet::of_kind(ConjugatorKind kind) const {
  std::vector<SimpleBraid> out;
  for (const auto& c : conjugators) {
    if (c.kind == kind) out.push_back(c.conjugator);
  }
  return out;
}

bool is_rigid_conjugator(const Braid& u, const SimpleBraid& rho) {
  const Braid v = conjugate(u, rho);
  if (!is_rigid(v)) return false;
  assert(v.inf() == u.inf() && v.sup() == u.sup());
  return true;
}

MinimalConjugatorSet minimal_conjugators(const Braid& u, const SearchBudget& budget, Execution exec,
                                         KindSelection kinds) {
  if (!is_rigid(u)) throw std::invalid_argument("minimal conjugator search needs a rigid braid");
  MinimalConjugatorSet out;
  const auto hit = [&u](const SimpleBraid& rho) { return is_rigid_conjugator(u, rho); };

  std::vector<MinimalConjugator> found;
  auto run = [&](const SimpleBraid& top, ConjugatorKind kind) {
    const std::size_t remaining =
        budget.max_prefix_states > out.states ? budget.max_prefix_states - out.states : 0;
    PrefixSearchResult r = minimal_prefixes(top, hit, remaining, exec);
    out.states += r.states;
    out.exhaustive = out.exhaustive && r.exhaustive;
    for (const auto& s : r.minimal) found.push_back({s, kind});
  };
  if (kinds.cut_head) run(tau_power(u.factors().front(), u.inf()), ConjugatorKind::kCutHead);
  if (kinds.add_tail) run(right_complement(u.factors().back()), ConjugatorKind::kAddTail);

  // Keep the antichain across both candidate sets.
  for (const auto& c : found) {
    const bool dominated = std::any_of(found.begin(), found.end(), [&](const MinimalConjugator& d) {
      return !(d.conjugator == c.conjugator) && is_prefix(d.conjugator, c.conjugator);
    });
    if (!dominated &&
        std::find(out.conjugators.begin(), out.conjugators.end(), c) == out.conjugators.end()) {
      out.conjugators.push_back(c);
    }
  }
  std::sort(out.conjugators.begin(), out.conjugators.end(),
            [](const MinimalConjugator& a, const MinimalConjugator& b) {
              if (a.kind != b.kind) return a.kind < b.kind;
              return a.conjugator < b.conjugator;
            });
  return out;
}

std::size_t ConjugacyGraph::add_node(const Braid& b) {
  auto [it, inserted] = index_.try_emplace(b, nodes_.size());
  if (inserted) nodes_.push_back(b);
  return it->second;
}

void ConjugacyGraph::add_edge(const Braid& source, const Braid& target,
                              const SimpleBraid& conjugator, ConjugatorKind kind, EdgeMove move) {
  const std::size_t s = add_node(source);
  const std::size_t t = add_node(target);
  edges_.push_back({s, t, conjugator, kind, move});
}

std::optional<std::size_t> ConjugacyGraph::find(const Braid& b) const {
  auto it = index_.find(b);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void ConjugacyGraph::canonicalize() {
  std::vector<Braid> sorted = nodes_;
  std::sort(sorted.begin(), sorted.end());
  std::map<Braid, std::size_t> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], i);
  for (auto& e : edges_) {
    e.source = index.at(nodes_[e.source]);
    e.target = index.at(nodes_[e.target]);
  }
  std::sort(edges_.begin(), edges_.end(), [](const GraphEdge& a, const GraphEdge& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    return a.conjugator < b.conjugator;
  });
  nodes_ = std::move(sorted);
  index_ = std::move(index);
}

GraphCheck verify_graph(const ConjugacyGraph& g, Execution exec) {
  GraphCheck check;
  const auto& nodes = g.nodes();
  const auto& edges = g.edges();
  std::vector<char> edge_ok(edges.size(), 0), node_ok(nodes.size(), 0);
  const bool parallel = exec == Execution::kParallel;
  parallel_for(edges.size(), parallel, [&](std::size_t i) {
    const auto& e = edges[i];
    edge_ok[i] = conjugate(nodes[e.source], e.conjugator) == nodes[e.target];
  });
  parallel_for(nodes.size(), parallel, [&](std::size_t i) { node_ok[i] = is_rigid(nodes[i]); });
  check.bad_edges = static_cast<std::size_t>(std::count(edge_ok.begin(), edge_ok.end(), 0));
  check.bad_nodes = static_cast<std::size_t>(std::count(node_ok.begin(), node_ok.end(), 0));
  check.edges_valid = check.bad_edges == 0;
  check.nodes_rigid = check.bad_nodes == 0;
  return check;
}

bool strongly_connected(const ConjugacyGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return true;
  auto reach_all = [&](bool forward) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : g.edges()) {
      if (forward) {
        adj[e.source].push_back(e.target);
      } else {
        adj[e.target].push_back(e.source);
      }
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reach_all(true) && reach_all(false);
}

ConjugacyGraph enumerate_class(const Braid& x, const SearchBudget& budget, Execution exec) {
  if (!is_rigid(x)) throw std::invalid_argument("enumeration of the rigid set needs a rigid braid");
  ConjugacyGraph graph;
  graph.add_node(x);
  std::deque<Braid> queue{x};
  while (!queue.empty()) {
    const Braid node = std::move(queue.front());
    queue.pop_front();
    const MinimalConjugatorSet mc = minimal_conjugators(node, budget, exec);
    graph.states += mc.states;
    if (!mc.exhaustive) {
      throw BudgetExceeded("prefix search exceeded " + std::to_string(budget.max_prefix_states) +
                           " states");
    }
    for (const auto& c : mc.conjugators) {
      const Braid target = conjugate(node, c.conjugator);
      const bool is_new = !graph.find(target).has_value();
      graph.add_edge(node, target, c.conjugator, c.kind);
      if (is_new) {
        if (graph.size() > budget.max_nodes) {
          throw BudgetExceeded("rigid set exceeded " + std::to_string(budget.max_nodes) + " nodes");
        }
        queue.push_back(target);
      }
    }
  }
  graph.canonicalize();
  return graph;
}

std::optional<RigidRepresentative> rigid_representative(const Braid& x,
                                                        std::size_t max_operations) {
  if (is_rigid(x)) return RigidRepresentative{x, Braid(StrandCount(x.strands()))};
  if (x.canonical_length() == 0) return std::nullopt;
  SummitCertificate summit = to_super_summit(x, SummitBudget{max_operations});
  Braid cur = summit.representative;
  Braid conj = summit.conjugator;
  std::unordered_set<Braid, BraidHash> seen;
  for (std::size_t step = 0; step < max_operations && cur.canonical_length() > 0; ++step) {
    if (is_rigid(cur)) return RigidRepresentative{cur, conj};
    if (!seen.insert(cur).second) break;
    CyclingResult c = cycling(cur);
    conj = multiply(conj, Braid::from_simple(c.conjugator));
    cur = std::move(c.result);
  }
  return std::nullopt;
}

ConjugacyAnswer is_conjugate(const Braid& x, const Braid& y, const SearchBudget& budget,
                             Execution exec) {
  if (x.strands() != y.strands()) throw std::invalid_argument("strand counts differ");
  const StrandCount n(x.strands());
  if (x.canonical_length() == 0 || y.canonical_length() == 0) {
    // Delta powers are central.
    if (x == y) return {true, Braid(n)};
    if (x.canonical_length() == 0 && y.canonical_length() == 0) return {false, std::nullopt};
  }
  auto rx = rigid_representative(x);
  auto ry = rigid_representative(y);
  if (!rx || !ry) {
    const SummitCertificate sx = to_super_summit(x);
    const SummitCertificate sy = to_super_summit(y);
    if (sx.inf_s != sy.inf_s || sx.sup_s != sy.sup_s) return {false, std::nullopt};
    throw NotSupported("no rigid conjugate found for an input; power-taking reduction is not implemented");
  }
  if (rx->representative.inf() != ry->representative.inf() ||
      rx->representative.sup() != ry->representative.sup()) {
    return {false, std::nullopt};
  }
  const ConjugacyGraph g = enumerate_class(rx->representative, budget, exec);
  const auto target = g.find(ry->representative);
  if (!target) return {false, std::nullopt};
  const std::size_t source = *g.find(rx->representative);

  // Shortest edge path source -> target.
  std::vector<std::optional<std::size_t>> via(g.size());
  std::vector<bool> seen(g.size(), false);
  std::deque<std::size_t> queue{source};
  seen[source] = true;
  std::vector<std::vector<std::size_t>> out_edges(g.size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) out_edges[g.edges()[i].source].push_back(i);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t ei : out_edges[v]) {
      const std::size_t w = g.edges()[ei].target;
      if (!seen[w]) {
        seen[w] = true;
        via[w] = ei;
        queue.push_back(w);
      }
    }
  }
  std::vector<SimpleBraid> path;
  for (std::size_t v = *target; v != source;) {
    const GraphEdge& e = g.edges()[*via[v]];
    path.push_back(e.conjugator);
    v = e.source;
  }
  NormalFormBuilder witness(rx->conjugator);
  for (auto it = path.rbegin(); it != path.rend(); ++it) witness.append(*it);
  witness.append(inverse(ry->conjugator));
  return {true, witness.build()};
}

}  // namespace garside
