#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "garside/braid.hpp"
#include "garside/conjugacy.hpp"

namespace garside {

/// How data-parallel kernels run. Serial is the reference path; Parallel
/// uses OpenMP when the build has it and must produce identical results.
enum class Execution { kSerial, kParallel };

class NotSupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ConjugatorKind { kCutHead, kAddTail };

std::string to_string(ConjugatorKind kind);

/// Closed-form conjugation moves of the binary-matrix family; generic
/// enumeration leaves this unspecified.
enum class EdgeMove { kUnspecified, kCycling, kSwitching, kInitializing };

std::string to_string(EdgeMove move);

struct SearchBudget {
  std::size_t max_prefix_states = 5'000'000;
  std::size_t max_nodes = 1'000'000;
};

struct PrefixSearchResult {
  std::vector<SimpleBraid> minimal;  // sorted
  bool exhaustive = true;
  std::size_t states = 0;
};

/// The prefix-minimal nontrivial elements of the down-set of `top` that satisfy
/// `hit`. Breadth-first by length; nothing above a hit is evaluated. The
/// predicate must be safe to call concurrently under Execution::kParallel.
PrefixSearchResult minimal_prefixes(const SimpleBraid& top,
                                    const std::function<bool(const SimpleBraid&)>& hit,
                                    std::size_t max_states, Execution exec = Execution::kSerial);

/// All elements of the down-set of `top` (prefixes), for oracle-sized tops.
std::vector<SimpleBraid> all_prefixes(const SimpleBraid& top);

struct MinimalConjugator {
  SimpleBraid conjugator;
  ConjugatorKind kind;

  friend bool operator==(const MinimalConjugator&, const MinimalConjugator&) = default;
};

struct MinimalConjugatorSet {
  std::vector<MinimalConjugator> conjugators;
  bool exhaustive = true;
  std::size_t states = 0;

  std::vector<SimpleBraid> of_kind(ConjugatorKind kind) const;
};

struct KindSelection {
  bool cut_head = true;
  bool add_tail = true;
};

/// rho^{-1} u rho is rigid (the membership test of the rigid conjugacy set).
bool is_rigid_conjugator(const Braid& u, const SimpleBraid& rho);

/// Prefix-minimal simple R-conjugators of a rigid braid, searched among the
/// prefixes of tau^{-inf}(u_1) (cut-head) and of d(u_l) (add-tail).
MinimalConjugatorSet minimal_conjugators(const Braid& u, const SearchBudget& budget = {},
                                         Execution exec = Execution::kSerial,
                                         KindSelection kinds = {});

struct GraphEdge {
  std::size_t source;
  std::size_t target;
  SimpleBraid conjugator;
  ConjugatorKind kind;
  EdgeMove move = EdgeMove::kUnspecified;
};

/// Directed multigraph of braids of an invariant set. Nodes are kept sorted by
/// normal form so iteration order is reproducible.
class ConjugacyGraph {
 public:
  std::size_t add_node(const Braid& b);  // returns index; existing index if present
  void add_edge(const Braid& source, const Braid& target, const SimpleBraid& conjugator,
                ConjugatorKind kind, EdgeMove move = EdgeMove::kUnspecified);
  /// Sorts nodes by normal form, remaps and sorts edges.
  void canonicalize();

  std::optional<std::size_t> find(const Braid& b) const;
  const std::vector<Braid>& nodes() const { return nodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  std::size_t size() const { return nodes_.size(); }

  bool exhaustive = true;
  std::size_t states = 0;

 private:
  std::vector<Braid> nodes_;
  std::vector<GraphEdge> edges_;
  std::map<Braid, std::size_t> index_;
};

struct GraphCheck {
  bool edges_valid = true;
  bool nodes_rigid = true;
  std::size_t bad_edges = 0;
  std::size_t bad_nodes = 0;
  bool ok() const { return edges_valid && nodes_rigid; }
};

/// Re-verifies every edge identity and node rigidity.
GraphCheck verify_graph(const ConjugacyGraph& g, Execution exec = Execution::kSerial);

bool strongly_connected(const ConjugacyGraph& g);

/// Breadth-first closure of {x} under minimal R-conjugators. Throws
/// BudgetExceeded when max_nodes is reached or a search stops early.
ConjugacyGraph enumerate_class(const Braid& x, const SearchBudget& budget = {},
                               Execution exec = Execution::kSerial);

struct ConjugacyAnswer {
  bool conjugate = false;
  std::optional<Braid> witness;  // witness^{-1} x witness == y
};

/// Decides conjugacy of braids that admit rigid conjugates reachable by
/// super summit reduction followed by cycling.
ConjugacyAnswer is_conjugate(const Braid& x, const Braid& y, const SearchBudget& budget = {},
                             Execution exec = Execution::kSerial);

struct RigidRepresentative {
  Braid representative;
  Braid conjugator;
};

/// A rigid conjugate along the super summit + cycling route, if one exists
/// within the budget.
std::optional<RigidRepresentative> rigid_representative(const Braid& x,
                                                        std::size_t max_operations = 100'000);

}  // namespace garside
